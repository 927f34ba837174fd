"""Monte Carlo verification of the digit laws, plus the GBM root solver.

Both generalized digit laws arise by exponentiating a power-law random
exponent: if W follows a two-sided power law TSPP(1, c) then the first
digit of 10^W follows TSPB(c); if W follows the double Pareto law
DP(1, alpha, beta), the first digit of 10^W follows PB(alpha, beta).
This module draws W by inverse-CDF sampling, extracts first digits, and
compares the empirical histogram against the analytic mass functions.

The double Pareto exponents come from geometric Brownian motion observed
at an exponentially distributed time: alpha and -beta are the roots of
(sigma^2/2) z^2 + (mu - sigma^2/2) z = lambda.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .digits import DigitHistogram, _digit_from_log10_fraction, _digits_from_log10_fractions
from .distributions import PB, TSPB, Benford, ModelParams, pmf_vector
from .fitting import chi_square_stat

__all__ = [
    "GbmParams",
    "gbm_char_roots",
    "sample_tspp",
    "sample_dp",
    "first_digit_of_exponent",
    "empirical_digit_pmf",
    "VerificationReport",
    "verification_report",
]


@dataclass(frozen=True)
class GbmParams:
    """Geometric Brownian motion drift/volatility plus the rate of the
    exponential observation time."""

    mu: float
    sigma: float
    lam: float

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and self.sigma > 0):
            raise ValueError(f"sigma must be > 0, got {self.sigma}")
        if not (math.isfinite(self.lam) and self.lam > 0):
            raise ValueError(f"lam must be > 0, got {self.lam}")


def gbm_char_roots(params: GbmParams) -> tuple[float, float]:
    """Positive root alpha and negated negative root beta of
    (sigma^2/2) z^2 + (mu - sigma^2/2) z - lambda = 0.

    The two returned values always satisfy alpha * beta = 2 lambda / sigma^2.
    """
    a = 0.5 * params.sigma ** 2
    b = params.mu - 0.5 * params.sigma ** 2
    c = -params.lam
    disc = b * b - 4.0 * a * c  # > 0: both a and lambda are positive
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b if b != 0 else 1.0))
    r1, r2 = q / a, c / q
    alpha = max(r1, r2)
    beta = -min(r1, r2)
    return alpha, beta


def _as_unit_interval(u):
    arr = np.asarray(u, dtype=float)
    if np.any(arr < 0.0) or np.any(arr >= 1.0):
        raise ValueError("u must lie in [0, 1)")
    return arr


def _maybe_scalar(arr, scalar_in):
    return float(arr) if scalar_in else arr


def sample_tspp(alpha: float, c: float, u):
    """Inverse-CDF draw from the two-sided power law on (0, 2) with mode at
    alpha and shape c; u is one or many uniform(0,1) variates.

    TSPP(1, 1) is uniform(0, 2); TSPP(1, 2) is triangular(0, 1, 2).
    """
    if not (0.0 < alpha < 2.0):
        raise ValueError(f"alpha must lie in (0, 2), got {alpha}")
    if not (math.isfinite(c) and c > 0):
        raise ValueError(f"c must be a positive real, got {c}")
    scalar_in = np.isscalar(u) or getattr(u, "ndim", 1) == 0
    arr = _as_unit_interval(u)
    lower = alpha * (2.0 * arr / alpha) ** (1.0 / c)
    upper = 2.0 - (2.0 - alpha) * (2.0 * (1.0 - arr) / (2.0 - alpha)) ** (1.0 / c)
    return _maybe_scalar(np.where(arr <= alpha / 2.0, lower, upper), scalar_in)


def sample_dp(alpha: float, beta: float, u):
    """Inverse-CDF draw from the double Pareto law DP(1, alpha, beta):
    density ~ w^(beta-1) below 1 and w^(-alpha-1) above 1, with
    P(W <= 1) = alpha / (alpha + beta)."""
    if not (math.isfinite(alpha) and alpha > 0):
        raise ValueError(f"alpha must be a positive real, got {alpha}")
    if not (math.isfinite(beta) and beta > 0):
        raise ValueError(f"beta must be a positive real, got {beta}")
    scalar_in = np.isscalar(u) or getattr(u, "ndim", 1) == 0
    arr = _as_unit_interval(u)
    split = alpha / (alpha + beta)
    lower = ((alpha + beta) * arr / alpha) ** (1.0 / beta)
    with np.errstate(divide="ignore"):
        upper = ((alpha + beta) * (1.0 - arr) / beta) ** (-1.0 / alpha)
    return _maybe_scalar(np.where(arr < split, lower, upper), scalar_in)


def first_digit_of_exponent(w: float) -> int:
    """First digit of 10^w, i.e. floor(10^(w - floor(w)))."""
    w = float(w)
    if not math.isfinite(w) or w < 0.0:
        raise ValueError(f"expected a finite non-negative exponent, got {w}")
    return _digit_from_log10_fraction(w % 1.0)


def _sample_exponents(model: ModelParams, u: np.ndarray) -> np.ndarray:
    if isinstance(model, Benford):
        return u
    if isinstance(model, TSPB):
        return sample_tspp(1.0, model.c, u)
    if isinstance(model, PB):
        return sample_dp(model.alpha, model.beta, u)
    raise TypeError(f"not a digit-law model: {model!r}")


def empirical_digit_pmf(model: ModelParams, n_samples: int, seed: int) -> DigitHistogram:
    """Draw n_samples exponents from the model's generating law, take first
    digits of 10^W, and tally.  Deterministic given seed."""
    if n_samples < 1:
        raise ValueError(f"n_samples must be >= 1, got {n_samples}")
    rng = np.random.default_rng(seed)
    w = _sample_exponents(model, rng.random(n_samples))
    digits = _digits_from_log10_fractions(w - np.floor(w))
    counts = np.bincount(digits, minlength=10)[1:10]
    return DigitHistogram(tuple(int(c) for c in counts), n_samples)


@dataclass(frozen=True)
class VerificationReport:
    """Empirical-vs-analytic digit comparison for one model."""

    model: ModelParams
    n_samples: int
    seed: int
    expected: tuple       # analytic probabilities per digit
    observed: tuple       # observed frequencies per digit
    z_scores: tuple       # (O_d - n p_d) / sqrt(n p_d (1 - p_d))
    chi_square: float

    @property
    def max_abs_z(self) -> float:
        return max(abs(z) for z in self.z_scores)

    def passed(self, z_limit: float = 4.0) -> bool:
        return self.max_abs_z < z_limit

    def to_csv(self) -> str:
        lines = ["digit,expected_probability,observed_frequency,z_score"]
        for d in range(9):
            lines.append(
                f"{d + 1},{self.expected[d]!r},{self.observed[d]!r},{self.z_scores[d]!r}"
            )
        return "\n".join(lines) + "\n"


def verification_report(model: ModelParams, n_samples: int, seed: int) -> VerificationReport:
    """Sample the model, compare against its analytic pmf, and report
    per-digit z-scores plus the overall chi-square."""
    hist = empirical_digit_pmf(model, n_samples, seed)
    probs = pmf_vector(model)
    counts = np.asarray(hist.counts, dtype=float)
    n = hist.sample_size
    z = (counts - n * probs) / np.sqrt(n * probs * (1.0 - probs))
    chi2 = chi_square_stat(hist, probs)
    return VerificationReport(
        model=model,
        n_samples=n_samples,
        seed=seed,
        expected=tuple(float(p) for p in probs),
        observed=tuple(float(f) for f in hist.frequencies()),
        z_scores=tuple(float(v) for v in z),
        chi_square=chi2,
    )
