import math

import mpmath
import pytest

from genbenford import (
    DigitHistogram,
    first_digit_int,
    first_digit_real,
    histogram,
    histogram_from_percentages,
)
from oracles import fibonacci_list, sieve_primes


class TestFirstDigitInt:
    @pytest.mark.parametrize("n,digit", [(7, 7), (97, 9), (1, 1), (10, 1),
                                         (999, 9), (10 ** 50, 1)])
    def test_examples(self, n, digit):
        assert first_digit_int(n) == digit

    def test_fibonacci_100(self):
        fib100 = fibonacci_list(100)[-1]
        assert fib100 == 354224848179261915075
        assert first_digit_int(fib100) == 3

    @pytest.mark.parametrize("n", [7, 97, 12345, 354224848179261915075])
    @pytest.mark.parametrize("k", [0, 1, 5, 12, 40])
    def test_scale_invariance_under_decimal_shift(self, n, k):
        assert first_digit_int(n * 10 ** k) == first_digit_int(n)

    @pytest.mark.parametrize("bad", [0, -1, -97])
    def test_rejects_nonpositive(self, bad):
        with pytest.raises(ValueError):
            first_digit_int(bad)

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            first_digit_int(7.0)


class TestFirstDigitReal:
    def test_exact_power_of_ten(self):
        assert first_digit_real(1.0) == 1

    def test_sqrt_50(self):
        # decimal-expansion oracle at 30 digits
        expansion = mpmath.nstr(mpmath.mp.sqrt(50), 30)
        assert expansion.lstrip("0.")[0] == "7"
        assert first_digit_real(math.sqrt(50)) == 7

    def test_just_below_power_of_ten(self):
        assert first_digit_real(999.999) == 9

    @pytest.mark.parametrize("k", list(range(0, 60, 7)) + [100, 250, -3, -17])
    def test_all_powers_of_ten(self, k):
        assert first_digit_real(10.0 ** k) == 1

    def test_hair_below_power_of_ten_rounds_up(self):
        # the guard folds values within 1e-12 (log scale) of 10^k onto digit 1
        assert first_digit_real(math.nextafter(1000.0, 0.0)) == 1

    @pytest.mark.parametrize("x,digit", [(0.007, 7), (0.5, 5), (3.14159, 3),
                                         (9.99, 9), (2e300, 2), (7e-200, 7)])
    def test_values(self, x, digit):
        assert first_digit_real(x) == digit

    @pytest.mark.parametrize("bad", [0.0, -1.5, math.inf, -math.inf, math.nan])
    def test_rejects_nonpositive_or_nonfinite(self, bad):
        with pytest.raises(ValueError):
            first_digit_real(bad)


class TestHistogram:
    def test_primes_below_100(self):
        primes = sieve_primes(100)
        assert len(primes) == 25
        h = histogram(first_digit_int(p) for p in primes)
        assert h.counts == (4, 3, 3, 3, 3, 2, 4, 2, 1)
        assert h.sample_size == 25

    def test_empty_stream(self):
        h = histogram([])
        assert h.counts == (0,) * 9
        assert h.sample_size == 0

    def test_one_of_each(self):
        assert histogram(range(1, 10)).counts == (1,) * 9

    @pytest.mark.parametrize("bad", [0, 10, -3])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ValueError):
            histogram([1, 2, bad])


class TestDigitHistogram:
    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            DigitHistogram((1,) * 8, 8)  # wrong length
        with pytest.raises(ValueError):
            DigitHistogram((1,) * 9, 10)  # sum mismatch
        with pytest.raises(ValueError):
            DigitHistogram((-1, 1, 0, 0, 0, 0, 0, 0, 0), 0)  # negative

    def test_from_counts(self):
        h = DigitHistogram.from_counts([4, 3, 3, 3, 3, 2, 4, 2, 1])
        assert h.sample_size == 25

    def test_percentages(self):
        h = DigitHistogram.from_counts([21, 14, 12, 12, 9, 9, 8, 7, 8])
        assert h.percentages() == pytest.approx([21, 14, 12, 12, 9, 9, 8, 7, 8])

    def test_csv_round_trip(self):
        h = DigitHistogram.from_counts([175, 90, 71, 61, 47, 48, 50, 41, 35])
        assert h.to_csv() == "175,90,71,61,47,48,50,41,35"
        assert DigitHistogram.from_csv(h.to_csv()) == h

    def test_csv_rejects_wrong_arity(self):
        with pytest.raises(ValueError):
            DigitHistogram.from_csv("1,2,3")

    def test_json_round_trip(self):
        h = DigitHistogram.from_counts([1, 0, 0, 2, 0, 0, 0, 0, 0])
        assert DigitHistogram.from_json(h.to_json()) == h
        assert h.to_json_dict() == {"counts": [1, 0, 0, 2, 0, 0, 0, 0, 0], "n": 3}

    def test_json_rejects_inconsistent_n(self):
        with pytest.raises(ValueError):
            DigitHistogram.from_json('{"counts": [1,0,0,0,0,0,0,0,0], "n": 5}')


class TestHistogramFromPercentages:
    def test_mixing_row(self):
        pct = [28.3, 14.6, 11.5, 9.9, 7.6, 7.8, 8.1, 6.6, 5.7]
        h = histogram_from_percentages(pct, 618)
        assert h.counts == (175, 90, 71, 61, 47, 48, 50, 41, 35)

    def test_degenerate_row(self):
        h = histogram_from_percentages([100, 0, 0, 0, 0, 0, 0, 0, 0], 10)
        assert h.counts == (10, 0, 0, 0, 0, 0, 0, 0, 0)

    def test_square_row(self):
        pct = [21.0, 14.0, 12.0, 12.0, 9.0, 9.0, 8.0, 7.0, 8.0]
        h = histogram_from_percentages(pct, 100)
        assert h.counts == (21, 14, 12, 12, 9, 9, 8, 7, 8)

    @pytest.mark.parametrize("n", [7, 25, 94, 618, 9999])
    def test_always_sums_to_n(self, n):
        import numpy as np

        rng = np.random.default_rng(n)
        for _ in range(20):
            parts = rng.dirichlet([1.0] * 9) * 100.0
            h = histogram_from_percentages(parts, n)
            assert h.sample_size == n

    def test_tie_break_prefers_lower_digit(self):
        # all nine remainders tie; the single spare count goes to digit 1
        h = histogram_from_percentages([100.0 / 9] * 9, 10)
        assert h.counts == (2, 1, 1, 1, 1, 1, 1, 1, 1)

    def test_rejects_inconsistent_percentages(self):
        with pytest.raises(ValueError):
            histogram_from_percentages([50.0] * 9, 100)  # sums to 450

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            histogram_from_percentages([10.0] * 8, 100)
        with pytest.raises(ValueError):
            histogram_from_percentages([-1.0] + [12.625] * 8, 100)
        with pytest.raises(ValueError):
            histogram_from_percentages([100.0 / 9] * 9, 0)
