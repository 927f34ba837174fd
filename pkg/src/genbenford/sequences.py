"""Integer sequence generators with exact arbitrary-precision arithmetic.

Every integer generator works on Python ints end to end, so values such as
Catalan(99) or Bell(100) keep their exact leading digit.  Keith and idoneal
numbers ship as bundled data files; the rest are generated from scratch.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional

from .digits import DigitHistogram, first_digit_int, first_digit_real, histogram
from .reference import data_dir

__all__ = [
    "SequenceSpec",
    "SEQUENCE_KINDS",
    "generate",
    "digit_histogram_of",
    "squares",
    "cubes",
    "primes_below",
    "pentagonal",
    "fibonacci",
    "catalan",
    "bell",
    "partition",
    "lucky",
    "ulam",
    "keith",
    "idoneal",
    "square_roots",
    "is_keith",
    "parse_values",
    "read_values",
    "format_values",
]

SEQUENCE_KINDS = (
    "squares", "cubes", "square_roots", "primes_below", "pentagonal",
    "fibonacci", "catalan", "bell", "partition", "lucky", "ulam", "keith",
    "idoneal", "custom_file",
)


@dataclass(frozen=True)
class SequenceSpec:
    """Which sequence to generate: a kind plus its count or upper bound.

    `param` counts terms for most kinds and is an exclusive upper bound for
    primes_below; idoneal ignores it (the list is fixed).  custom_file reads
    values from `path` instead.
    """

    kind: str
    param: int = 0
    path: Optional[Path] = None

    def __post_init__(self):
        if self.kind not in SEQUENCE_KINDS:
            raise ValueError(f"unknown sequence kind: {self.kind!r}")
        if self.kind == "custom_file":
            if self.path is None:
                raise ValueError("custom_file needs a path")
        elif self.kind != "idoneal" and self.param < 1:
            raise ValueError(f"param must be >= 1 for {self.kind}")


def squares(count: int) -> Iterator[int]:
    """n^2 for n = 1..count."""
    return (n * n for n in range(1, count + 1))


def cubes(count: int) -> Iterator[int]:
    """n^3 for n = 1..count."""
    return (n ** 3 for n in range(1, count + 1))


def pentagonal(count: int) -> Iterator[int]:
    """n(3n-1)/2 for n = 1..count."""
    return (n * (3 * n - 1) // 2 for n in range(1, count + 1))


def square_roots(count: int) -> Iterator[float]:
    """sqrt(n) for n = 1..count."""
    return (math.sqrt(n) for n in range(1, count + 1))


def primes_below(bound: int) -> list[int]:
    """All primes < bound, by sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray(b"\x01") * bound
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(bound - 1) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = b"\x00" * len(range(start, bound, p))
    return [i for i in range(bound) if sieve[i]]


def fibonacci(count: int) -> Iterator[int]:
    """F(1)..F(count) with F(1) = F(2) = 1."""
    a, b = 1, 1
    for _ in range(count):
        yield a
        a, b = b, a + b


def catalan(count: int) -> Iterator[int]:
    """The first `count` Catalan numbers 1, 1, 2, 5, 14, ...

    Starts from the 0th number binomial(0,0)/1 = 1, so the second entry is
    the duplicate 1; computed by the exact integer recurrence
    C(n+1) = C(n) * 2(2n+1) / (n+2).
    """
    c = 1
    for n in range(count):
        yield c
        c = c * 2 * (2 * n + 1) // (n + 2)


def bell(count: int) -> Iterator[int]:
    """B(1)..B(count) = 1, 2, 5, 15, 52, ... via the Bell triangle.

    Each triangle row starts with the previous row's last entry and adds
    pairwise; row n ends in B(n).
    """
    row = [1]
    for _ in range(count):
        yield row[-1]
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt


def partition(count: int) -> Iterator[int]:
    """p(1)..p(count) by Euler's pentagonal-number recurrence."""
    p = [1]  # p[0] = 1
    for n in range(1, count + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 == 1 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p.append(total)
        yield total


def lucky(count: int) -> list[int]:
    """The first `count` lucky numbers 1, 3, 7, 9, 13, ... by the lucky sieve."""
    if count < 1:
        raise ValueError("count must be >= 1")
    limit = max(200, 30 * count)
    while True:
        survivors = list(range(1, limit, 2))
        i = 1
        while i < len(survivors) and survivors[i] <= len(survivors):
            step = survivors[i]
            survivors = [v for j, v in enumerate(survivors) if (j + 1) % step != 0]
            i += 1
        if len(survivors) >= count:
            return survivors[:count]
        limit *= 2


def ulam(count: int) -> list[int]:
    """The first `count` terms of the (1,2)-Ulam sequence.

    A term is the smallest integer larger than the last that is the sum of
    two distinct earlier terms in exactly one way.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    terms = [1, 2]
    seen = {1, 2}
    candidate = 2
    while len(terms) < count:
        candidate += 1
        reps = 0
        for t in terms:
            if 2 * t >= candidate:
                break
            if (candidate - t) in seen:
                reps += 1
                if reps > 1:
                    break
        if reps == 1:
            terms.append(candidate)
            seen.add(candidate)
    return terms[:count]


def is_keith(n: int) -> bool:
    """Whether n reproduces itself from its own digits: seed a sequence with
    the k digits of n and iterate k-term sums; n must appear in the sequence.
    Single-digit numbers are excluded by convention."""
    if n < 10:
        return False
    window = [int(ch) for ch in str(n)]
    while True:
        nxt = sum(window)
        if nxt >= n:
            return nxt == n
        window.pop(0)
        window.append(nxt)


def _load_int_list(filename: str) -> list[int]:
    path = data_dir() / filename
    values = []
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        values.append(int(line))
    return values


def keith(count: int, search_limit: Optional[int] = None) -> list[int]:
    """The first `count` Keith numbers from the bundled verified list.

    The bundled list holds every known term (71 entries, up to 19 digits).
    If `count` exceeds it and `search_limit` is given, the shortfall is
    searched for exhaustively up to that bound, which is only practical for
    limits around 1e7.
    """
    known = _load_int_list("keith.txt")
    if count <= len(known):
        return known[:count]
    if search_limit is None:
        raise ValueError(
            f"only {len(known)} Keith numbers are bundled; pass search_limit "
            "to extend by exhaustive search (slow)"
        )
    found = list(known)
    n = found[-1] + 1 if found else 10
    while len(found) < count and n < search_limit:
        if is_keith(n):
            found.append(n)
        n += 1
    if len(found) < count:
        raise ValueError(
            f"found only {len(found)} Keith numbers below {search_limit}"
        )
    return found[:count]


def idoneal() -> list[int]:
    """The 65 known idoneal numbers, from the bundled list."""
    return _load_int_list("idoneal.txt")


# ---------------------------------------------------------------------------
# custom files: one value per line, unbounded decimal integers or reals;
# blank lines and '#' comments ignored.


def parse_values(text: str) -> list:
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(int(line))
        except ValueError:
            try:
                values.append(float(line))
            except ValueError:
                raise ValueError(f"line {lineno}: not a number: {line!r}") from None
    return values


def read_values(path) -> list:
    return parse_values(Path(path).read_text())


def format_values(values) -> str:
    return "\n".join(str(v) for v in values) + "\n"


# ---------------------------------------------------------------------------
# dispatch


def generate(spec: SequenceSpec):
    """Yield the values described by `spec` (ints, or floats for
    square_roots and real-valued custom files)."""
    kind, count = spec.kind, spec.param
    if kind == "squares":
        return squares(count)
    if kind == "cubes":
        return cubes(count)
    if kind == "square_roots":
        return square_roots(count)
    if kind == "primes_below":
        return primes_below(count)
    if kind == "pentagonal":
        return pentagonal(count)
    if kind == "fibonacci":
        return fibonacci(count)
    if kind == "catalan":
        return catalan(count)
    if kind == "bell":
        return bell(count)
    if kind == "partition":
        return partition(count)
    if kind == "lucky":
        return lucky(count)
    if kind == "ulam":
        return ulam(count)
    if kind == "keith":
        return keith(count)
    if kind == "idoneal":
        return idoneal()
    if kind == "custom_file":
        return read_values(spec.path)
    raise ValueError(f"unknown sequence kind: {kind!r}")


def digit_histogram_of(spec: SequenceSpec) -> DigitHistogram:
    """Generate the sequence and tally its first digits."""
    digits = (
        first_digit_int(v) if isinstance(v, int) else first_digit_real(v)
        for v in generate(spec)
    )
    return histogram(digits)
