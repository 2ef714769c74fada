"""Special functions and the catalog of theoretical limit constants.

Provides the Riemann zeta function on s > 0 (s != 1) via the alternating
(eta) series accelerated with Chebyshev-polynomial weights (Cohen /
Rodriguez Villegas / Zagier), the Gamma function via a Lanczos approximation
(g = 7, nine terms), the Euler-Mascheroni constant, and the continuous
s-energy of normalized arc length on the circle

    I_s = 2**(-s)/sqrt(pi) * Gamma((1-s)/2) / Gamma(1-s/2)
        = Gamma(1-s) / Gamma(1-s/2)**2,        0 < s < 1,  I_0 = 0.

:func:`limit_catalog` assembles, per regime of the exponent s, the first- and
second-order limit constants of the extremal greedy potentials:

    0 < s < 1:  first order I_s, second-order limsup (2**s-1)*2*zeta(s)/(2*pi)**s
    s = 1:      first order 1/pi, second-order limsup (gamma + log(8/pi))/pi
    s > 1:      first-order limsup (2**s-1)*2*zeta(s)/(2*pi)**s

The corresponding liminf constants involve the suprema/infima of the digit
functionals G and Lambda, which are not known in closed form; the catalog
reports certified brackets combining the bounded searches of
:mod:`lejacircle.binary` with the landmarks 1/(2**s-1) and -2*log 2.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import binary
from .circle import (
    REGIME_CRITICAL,
    REGIME_LOG,
    REGIME_SUBCRITICAL,
    classify_regime,
)

__all__ = [
    "EULER_GAMMA",
    "gamma_fn",
    "zeta",
    "continuous_energy",
    "ConstantsCatalog",
    "limit_catalog",
]

# Euler-Mascheroni constant, nearest double; validated at import time below.
EULER_GAMMA = 0.5772156649015329

# Lanczos coefficients for g = 7, n = 9 (double precision, ~14 digits).
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Terms of the accelerated alternating series; error ~ (3+sqrt(8))**(-n).
_ZETA_TERMS = 50


def gamma_fn(x: float) -> float:
    """Gamma(x) for x > 0 via the Lanczos approximation (>= 12 digits)."""
    if not x > 0:
        raise ValueError(f"gamma_fn requires x > 0, got {x}")
    if x < 0.5:
        # Reflection keeps full precision near 0.
        return math.pi / (math.sin(math.pi * x) * gamma_fn(1.0 - x))
    z = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc


def zeta(s: float) -> float:
    """Riemann zeta on s > 0, s != 1, via the accelerated alternating series.

    zeta(s) = eta(s) / (1 - 2**(1-s)) with eta the alternating zeta; the
    Chebyshev weighting converges at rate (3+sqrt(8))**(-n) uniformly on the
    two regimes used here (0 < s < 1 and s > 1).
    """
    if not s > 0:
        raise ValueError(f"zeta evaluated only for s > 0, got {s}")
    if s == 1:
        raise ValueError("zeta has a pole at s = 1")
    n = _ZETA_TERMS
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    acc = 0.0
    for k in range(n):
        c = b - c
        acc += c * (k + 1.0) ** (-s)
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    eta = acc / d
    return eta / (1.0 - 2.0 ** (1.0 - s))


def continuous_energy(s: float) -> float:
    """Continuous s-energy of normalized arc length, for 0 <= s < 1.

    Evaluates 2**(-s)/sqrt(pi) * Gamma((1-s)/2) / Gamma(1-s/2) and checks it
    against the equivalent form Gamma(1-s)/Gamma(1-s/2)**2 to 1e-12 relative.
    """
    if not 0 <= s < 1:
        raise ValueError(f"continuous energy is finite only for 0 <= s < 1, got {s}")
    if s == 0:
        return 0.0
    first = 2.0 ** (-s) / math.sqrt(math.pi) * gamma_fn((1.0 - s) / 2.0) / gamma_fn(1.0 - s / 2.0)
    second = gamma_fn(1.0 - s) / gamma_fn(1.0 - s / 2.0) ** 2
    if abs(first - second) > 1e-12 * abs(first):
        raise ArithmeticError(
            f"closed forms for the continuous energy disagree at s={s}: {first} vs {second}"
        )
    return first


def _validate_euler_gamma() -> None:
    # Defining limit: |sum_{k<=N} 1/k - log N - gamma| <= 1/(2N) + o(1/N).
    n = 1_000_000
    harmonic = float(np.sum(1.0 / np.arange(1, n + 1, dtype=np.float64)))
    if abs(harmonic - math.log(n) - EULER_GAMMA) > 1.0 / n:
        raise ArithmeticError("Euler-Mascheroni constant failed its defining-limit check")


_validate_euler_gamma()


@dataclass(frozen=True)
class ConstantsCatalog:
    """Regime-dependent theoretical limits for the extremal potentials.

    ``liminf_lower``/``liminf_upper`` bracket the (unknown) liminf constant;
    entries are None where a quantity does not apply to the regime.
    """

    s: float
    regime: str
    i_sigma: float | None
    zeta_s: float | None
    first_order_limit: float
    limsup_second_order: float | None
    liminf_lower: float | None
    liminf_upper: float | None

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "regime": self.regime,
            "i_sigma": self.i_sigma,
            "zeta": self.zeta_s,
            "first_order": self.first_order_limit,
            "limsup": self.limsup_second_order,
            "liminf_lower": self.liminf_lower,
            "liminf_upper": self.liminf_upper,
        }


def second_order_scale(s: float) -> float:
    """(2**s - 1) * 2*zeta(s) / (2*pi)**s, the dyadic-subsequence limit."""
    return (2.0 ** s - 1.0) * 2.0 * zeta(s) / (2.0 * math.pi) ** s


def limit_catalog(s: float, *, max_bits: int = 12) -> ConstantsCatalog:
    """Assemble the limit constants for exponent s >= 0.

    ``max_bits`` controls the bounded searches used for the liminf brackets.
    """
    regime = classify_regime(s)
    if regime == REGIME_LOG:
        return ConstantsCatalog(
            s=s,
            regime=regime,
            i_sigma=0.0,
            zeta_s=None,
            first_order_limit=0.0,
            limsup_second_order=None,
            liminf_lower=None,
            liminf_upper=None,
        )
    if regime == REGIME_SUBCRITICAL:
        c = second_order_scale(s)  # negative here
        search = binary.search_g_extremes(s, max_bits)
        g_sup_lb = max(search.best_sup_bound, 1.0 / (2.0 ** s - 1.0))
        g_sup_ub = 2.0 ** s / (2.0 ** s - 1.0)
        return ConstantsCatalog(
            s=s,
            regime=regime,
            i_sigma=continuous_energy(s),
            zeta_s=zeta(s),
            first_order_limit=continuous_energy(s),
            limsup_second_order=c,
            liminf_lower=g_sup_ub * c,
            liminf_upper=g_sup_lb * c,
        )
    if regime == REGIME_CRITICAL:
        level = (EULER_GAMMA + math.log(8.0 / math.pi)) / math.pi
        search = binary.search_lambda(max_bits)
        lam_ub = min(search.best_inf_bound, -2.0 * math.log(2.0))
        # Constructive lower bound for Lambda: -M/e - 2*log 2 with 2**(-M) < 1/e,
        # hence M = 2.
        lam_lb = -2.0 / math.e - 2.0 * math.log(2.0)
        return ConstantsCatalog(
            s=s,
            regime=regime,
            i_sigma=None,
            zeta_s=None,
            first_order_limit=1.0 / math.pi,
            limsup_second_order=level,
            liminf_lower=level + lam_lb / math.pi,
            liminf_upper=level + lam_ub / math.pi,
        )
    c = second_order_scale(s)  # positive here
    search = binary.search_g_extremes(s, max_bits)
    g_inf_ub = min(search.best_inf_bound, 1.0 / (2.0 ** s - 1.0))
    return ConstantsCatalog(
        s=s,
        regime=regime,
        i_sigma=None,
        zeta_s=zeta(s),
        first_order_limit=c,
        limsup_second_order=c,
        liminf_lower=0.0,
        liminf_upper=g_inf_ub * c,
    )
