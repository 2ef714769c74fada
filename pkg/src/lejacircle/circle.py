"""Points on the unit circle, Riesz/logarithmic kernels, potentials, energies.

Angles are stored in *turns* (full revolutions, so the point is
exp(2*pi*i*angle)).  Structurally important points are dyadic rationals
numerator / 2**level, which are exact in binary floating point; keeping them
exact makes the combinatorial identities of this package hold to rounding
error instead of drifting with 2*pi conversions.

Kernels: for two circle points z, w and exponent s >= 0

    k_0(z, w) = -log|z - w|          (logarithmic case)
    k_s(z, w) = |z - w|**(-s)        (s > 0)

where |z - w| = 2*|sin(pi*(x - y))| is the chord distance between the points
at turn angles x and y.

Closed forms for N-th roots of unity:

    roots_energy(N, s)       minimal N-point s-energy on the circle,
                             2**(-s) * N * sum_{k=1}^{N-1} sin(k*pi/N)**(-s)
    midpoint_potential(N, s) s-potential of the N roots evaluated at the
                             midpoint of an arc between adjacent roots

Both are evaluated by direct summation with deterministic compensated
reduction (see summation.py).
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .summation import pairwise_sum

# Regime labels for the Riesz exponent.
REGIME_LOG = "log"
REGIME_SUBCRITICAL = "subcritical"
REGIME_CRITICAL = "critical"
REGIME_SUPERCRITICAL = "supercritical"

# Library-wide size guard: direct summations refuse N beyond this.
MAX_POINTS = 1 << 20


class CoincidentPointsError(ValueError):
    """Raised where coincident circle points would make a kernel infinite."""


class BudgetExceededError(RuntimeError):
    """Raised when a request exceeds the configured compute budget."""


def classify_regime(s: float) -> str:
    """Classify the Riesz exponent: log (s=0), subcritical, critical, supercritical."""
    if s < 0:
        raise ValueError(f"Riesz exponent must be >= 0, got {s}")
    if s == 0:
        return REGIME_LOG
    if s < 1:
        return REGIME_SUBCRITICAL
    if s == 1:
        return REGIME_CRITICAL
    return REGIME_SUPERCRITICAL


@dataclass(frozen=True)
class RieszParameter:
    """Riesz exponent s >= 0; s = 0 selects the logarithmic kernel."""

    s: float

    def __post_init__(self):
        if not self.s >= 0:
            raise ValueError(f"Riesz exponent must be >= 0, got {self.s}")

    @property
    def regime(self) -> str:
        return classify_regime(self.s)


def _as_s(s) -> float:
    return float(s.s) if isinstance(s, RieszParameter) else float(s)


@dataclass(frozen=True)
class CirclePoint:
    """A point on the unit circle, stored as a turn angle in [0, 1).

    Dyadic points carry an exact representation numerator / 2**level with
    0 <= numerator < 2**level (level 0 is the point 1).  Generic points carry
    only the float angle.
    """

    angle: float
    numerator: int | None = None
    level: int | None = None

    def __post_init__(self):
        if not 0.0 <= self.angle < 1.0:
            raise ValueError(f"turn angle must lie in [0, 1), got {self.angle}")

    @classmethod
    def dyadic(cls, numerator: int, level: int) -> "CirclePoint":
        """Exact point at angle numerator / 2**level."""
        if level < 0 or numerator < 0 or numerator >= (1 << level):
            raise ValueError(f"need 0 <= numerator < 2**level, got {numerator}/2^{level}")
        # Reduce so the representation is unique (odd numerator unless zero).
        while level > 0 and numerator % 2 == 0:
            numerator //= 2
            level -= 1
        return cls(angle=numerator / (1 << level), numerator=numerator, level=level)

    @classmethod
    def from_turns(cls, angle: float) -> "CirclePoint":
        return cls(angle=angle % 1.0)

    @property
    def is_dyadic(self) -> bool:
        return self.numerator is not None

    def complex(self) -> complex:
        theta = 2.0 * np.pi * self.angle
        return complex(np.cos(theta), np.sin(theta))


class Configuration:
    """An ordered tuple of pairwise-distinct circle points.

    Ordering is by selection index (the order points were generated), not by
    angle.  Distinctness is required so that energies and potentials with
    s >= 0 are finite.
    """

    def __init__(self, points):
        self.points = tuple(points)
        angles = np.array([p.angle for p in self.points], dtype=np.float64)
        if angles.size > 1:
            srt = np.sort(angles)
            if np.any(np.diff(srt) == 0.0):
                raise CoincidentPointsError("configuration contains coincident points")
        self._angles = angles

    @classmethod
    def from_turns(cls, angles) -> "Configuration":
        return cls([CirclePoint.from_turns(float(a)) for a in angles])

    def angles(self) -> np.ndarray:
        """Turn angles in selection order (read-only view)."""
        view = self._angles.view()
        view.flags.writeable = False
        return view

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]


def chord_lengths(angles: np.ndarray, x: float) -> np.ndarray:
    """Chord distances 2*|sin(pi*(x - angles))| from turn angle x to each angle."""
    delta = x - angles
    delta = delta - np.round(delta)  # reduce to [-1/2, 1/2] for full sin precision
    return 2.0 * np.abs(np.sin(np.pi * delta))


def chord_distance(z: CirclePoint, w: CirclePoint) -> float:
    """Chord distance |z - w| in (0, 2]; returns 0.0 for coincident points."""
    delta = z.angle - w.angle
    delta -= round(delta)
    return 2.0 * abs(np.sin(np.pi * delta))


def kernel(s, z: CirclePoint, w: CirclePoint) -> float:
    """Riesz kernel |z-w|**(-s) for s > 0, or -log|z-w| for s = 0."""
    sv = _as_s(s)
    if sv < 0:
        raise ValueError(f"Riesz exponent must be >= 0, got {sv}")
    d = chord_distance(z, w)
    if d == 0.0:
        raise CoincidentPointsError("kernel is infinite at coincident points")
    if sv == 0.0:
        return -float(np.log(d))
    return float(d ** (-sv))


def kernel_values(angles: np.ndarray, x: float, s: float) -> np.ndarray:
    """Vector of kernel values from turn angle x to each configuration angle."""
    d = chord_lengths(angles, x)
    if np.any(d == 0.0):
        raise CoincidentPointsError("kernel is infinite at coincident points")
    if s == 0.0:
        return -np.log(d)
    return d ** (-s)


def potential(config: Configuration, z: CirclePoint, s) -> float:
    """Potential of a configuration at z: sum of kernel(s, a_k, z) over the points."""
    sv = _as_s(s)
    if len(config) == 0:
        return 0.0
    return pairwise_sum(kernel_values(config.angles(), z.angle, sv))


def energy(config: Configuration, s) -> float:
    """Discrete s-energy: the double sum of kernel values over ordered pairs.

    Returns 0.0 for configurations with fewer than two points.
    """
    sv = _as_s(s)
    angles = config.angles()
    n = angles.size
    if n < 2:
        return 0.0
    # 2 * sum over unordered pairs, row by row to bound memory.
    partials = np.empty(n - 1, dtype=np.float64)
    for i in range(n - 1):
        partials[i] = pairwise_sum(kernel_values(angles[i + 1:], angles[i], sv))
    return 2.0 * pairwise_sum(partials)


def _check_roots_args(n: int, s: float) -> None:
    if n < 1:
        raise ValueError(f"need N >= 1, got {n}")
    if n > MAX_POINTS:
        raise BudgetExceededError(f"N={n} exceeds the compute budget {MAX_POINTS}")
    if not s > 0:
        raise ValueError(f"need s > 0, got {s}")


@lru_cache(maxsize=None)
def roots_energy(n: int, s) -> float:
    """Minimal n-point s-energy on the circle (attained by the n-th roots of unity).

    Closed form 2**(-s) * n * sum_{k=1}^{n-1} sin(k*pi/n)**(-s); by convention
    the value for n = 1 is 0.
    """
    sv = _as_s(s)
    _check_roots_args(n, sv)
    if n == 1:
        return 0.0
    k = np.arange(1, n, dtype=np.float64)
    terms = np.sin(k * (np.pi / n)) ** (-sv)
    return 2.0 ** (-sv) * n * pairwise_sum(terms)


@lru_cache(maxsize=None)
def midpoint_potential(n: int, s) -> float:
    """s-potential of the n-th roots of unity at the midpoint of an adjacent arc.

    Direct summation of sum_{k=1}^{n} |exp(pi*i/n) - exp(2*pi*k*i/n)|**(-s);
    the k-th chord has length 2*sin((2k-1)*pi/(2n)).
    """
    sv = _as_s(s)
    _check_roots_args(n, sv)
    k = np.arange(1, n + 1, dtype=np.float64)
    d = 2.0 * np.sin((2.0 * k - 1.0) * (np.pi / (2.0 * n)))
    return pairwise_sum(d ** (-sv))


def leja_sup_norm_log(config: Configuration, z: CirclePoint) -> float:
    """log of the product of distances from z to the configuration points.

    Computed as sum_k log|z - a_k| to avoid overflow of the product itself.
    """
    angles = config.angles()
    if angles.size == 0:
        return 0.0
    d = chord_lengths(angles, z.angle)
    if np.any(d == 0.0):
        raise CoincidentPointsError("log-product is -infinity at coincident points")
    return pairwise_sum(np.log(d))
