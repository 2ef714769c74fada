"""Greedy energy sequences on the circle, structural and numerical.

Two constructions are provided.

``canonical_structural`` is the exact bit-reversal representative: point n
sits at turn angle bitreverse(n), where n = sum b_j*2**j maps to
sum b_j*2**(-j-1).  Equivalently the angles satisfy the recursion
x_(2**k + l) = 2**(-k-1) + x_l, the image on the circle of the van der Corput
sequence.  Every 2**m-th section is exactly the set of 2**m-th roots of
unity, and the minimum of the running s-potential after N points decomposes
over the binary expansion of N:

    U_N(a_N) = sum_k midpoint_potential(2**n_k, s),   N = sum_k 2**n_k.

``extremal_values_structural`` evaluates that decomposition with the dyadic
midpoint potentials memoized, so the whole series for N <= N_max costs one
pass over the dyadic table plus O(N_max * log N_max) additions.

``greedy_numerical`` grows an arbitrary initial configuration by direct
minimization of the running potential (s > 0) or of -sum log distance
(s = 0): each gap between circularly adjacent points is seeded with
ceil(grid * arclength) >= 8 samples, the best bracket is refined by
golden-section, and the result is polished by bisection on the potential's
derivative.  The polish step is what pushes the located minimum from
~sqrt(eps) positional accuracy (the limit of value-based search) down to
~eps, which matters because a misplaced charge perturbs all later extremal
values linearly.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .circle import (
    MAX_POINTS,
    BudgetExceededError,
    CirclePoint,
    Configuration,
    RieszParameter,
    _as_s,
    kernel_values,
    midpoint_potential,
)
from .summation import pairwise_sum

__all__ = [
    "GreedyRun",
    "canonical_structural",
    "extremal_values_structural",
    "greedy_numerical",
    "energy_series_from_extremal",
]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0

# Grid minima within this absolute slack are all refined before tie-breaking.
_TIE_COARSE = 1e-9
# Refined values within this slack count as ties; smallest angle wins.
_TIE_FINAL = 1e-12
_MIN_SAMPLES_PER_GAP = 8
_POLISH_ITERS = 90


def bitreverse(n: int) -> tuple[int, int]:
    """Bit-reversal of n within its own bit length: returns (numerator, level).

    The angle numerator / 2**level equals sum b_j * 2**(-j-1) for
    n = sum b_j * 2**j; n = 0 maps to (0, 0).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    level = n.bit_length()
    num = 0
    for j in range(level):
        if (n >> j) & 1:
            num |= 1 << (level - 1 - j)
    return num, level


def canonical_structural(n_points: int) -> Configuration:
    """First n_points of the bit-reversal greedy sequence (exact dyadic angles)."""
    if n_points < 0:
        raise ValueError("n_points must be >= 0")
    if n_points > MAX_POINTS:
        raise BudgetExceededError(f"N={n_points} exceeds the compute budget {MAX_POINTS}")
    return Configuration([CirclePoint.dyadic(*bitreverse(n)) for n in range(n_points)])


def structural_angles(n_points: int) -> np.ndarray:
    """Turn angles of the canonical structural sequence as a float array."""
    if n_points > MAX_POINTS:
        raise BudgetExceededError(f"N={n_points} exceeds the compute budget {MAX_POINTS}")
    out = np.empty(n_points, dtype=np.float64)
    for n in range(n_points):
        num, level = bitreverse(n)
        out[n] = num / (1 << level)
    return out


def extremal_values_structural(n_max: int, s) -> np.ndarray:
    """Extremal potential values U_N(a_N) for N = 1..n_max (s > 0).

    Entry N-1 is the sum of midpoint potentials of the dyadic blocks of N.
    """
    sv = _as_s(s)
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    if not sv > 0:
        raise ValueError(f"need s > 0, got {sv}")
    if n_max > MAX_POINTS:
        raise BudgetExceededError(f"N={n_max} exceeds the compute budget {MAX_POINTS}")
    n_bits = int(n_max).bit_length()
    table = np.array([midpoint_potential(1 << j, sv) for j in range(n_bits)])
    n_vals = np.arange(1, n_max + 1, dtype=np.int64)
    bits = ((n_vals[:, None] >> np.arange(n_bits)[None, :]) & 1).astype(np.float64)
    return bits @ table


def energy_series_from_extremal(extremal_values) -> list[float]:
    """Energies E(alpha_N) for N = 1..len+1 from the running potential minima.

    E(alpha_N) = 2 * sum_{j=1}^{N-1} U_j(a_j); the N = 1 entry is 0.
    """
    out = [0.0]
    acc = 0.0
    for v in extremal_values:
        acc += float(v)
        out.append(2.0 * acc)
    return out


@dataclass
class GreedyRun:
    """A grown greedy configuration together with its running potential values.

    ``extremal_values[n-1]`` is U_n(a_n), the potential of the first n points
    at the (n+1)-th; for n > p (the number of given initial points minus one)
    that value is the certified minimum of the running potential.
    """

    s: RieszParameter
    initial: Configuration
    points: Configuration
    extremal_values: list[float] = field(default_factory=list)

    @property
    def p(self) -> int:
        """Index of the last initial point (initial set has p+1 points)."""
        return len(self.initial) - 1

    def to_csv_rows(self):
        """Rows (n, angle_turns, extremal_value); the n = 0 row has no value."""
        rows = []
        for n, pt in enumerate(self.points):
            val = "" if n == 0 else self.extremal_values[n - 1]
            rows.append((n, pt.angle, val))
        return rows


def _potential_on_grid(angles: np.ndarray, xs: np.ndarray, sv: float) -> np.ndarray:
    delta = xs[:, None] - angles[None, :]
    delta -= np.round(delta)
    d = 2.0 * np.abs(np.sin(np.pi * delta))
    if sv == 0.0:
        return -np.log(d).sum(axis=1)
    return (d ** (-sv)).sum(axis=1)


def _potential_at(angles: np.ndarray, x: float, sv: float) -> float:
    return pairwise_sum(kernel_values(angles, x, sv))


def _dpotential_at(angles: np.ndarray, x: float, sv: float) -> float:
    """Derivative of the running potential with respect to the turn angle."""
    delta = x - angles
    delta -= np.round(delta)
    t = np.pi * delta
    sn = np.sin(t)
    if sv == 0.0:
        return float(-np.pi * np.sum(np.cos(t) / sn))
    d = 2.0 * np.abs(sn)
    grad = -sv * d ** (-sv - 1.0) * 2.0 * np.pi * np.cos(t) * np.sign(sn)
    return float(np.sum(grad))


def _golden_refine(angles, lo, hi, sv, iters):
    h = hi - lo
    c = lo + _INVPHI2 * h
    d = lo + _INVPHI * h
    yc = _potential_at(angles, c % 1.0, sv)
    yd = _potential_at(angles, d % 1.0, sv)
    for _ in range(iters):
        if yc < yd:
            hi, d, yd = d, c, yc
            h = _INVPHI * h
            c = lo + _INVPHI2 * h
            yc = _potential_at(angles, c % 1.0, sv)
        else:
            lo, c, yc = c, d, yd
            h = _INVPHI * h
            d = lo + _INVPHI * h
            yd = _potential_at(angles, d % 1.0, sv)
    return c if yc < yd else d


def _polish_root(angles, lo, hi, sv, fallback):
    """Bisect the derivative's sign change in [lo, hi]; fall back if absent."""
    glo = _dpotential_at(angles, lo % 1.0, sv)
    ghi = _dpotential_at(angles, hi % 1.0, sv)
    if not (glo < 0.0 < ghi):
        return fallback
    for _ in range(_POLISH_ITERS):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        g = _dpotential_at(angles, mid % 1.0, sv)
        if g < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _next_greedy_point(angles: np.ndarray, sv: float, grid: int, refine_iters: int):
    """Locate the global minimizer of the running potential on the circle.

    Returns (angle, value).  Every gap between circularly adjacent charges is
    sampled, near-tied grid minima are each refined, and ties of refined
    values within 1e-12 are resolved to the smallest angle in [0, 1).
    """
    order = np.sort(angles)
    gap_starts = order
    gap_lengths = np.diff(np.concatenate([order, [order[0] + 1.0]]))

    xs_parts = []
    half_parts = []
    lo_parts = []
    hi_parts = []
    for start, length in zip(gap_starts, gap_lengths):
        m = max(_MIN_SAMPLES_PER_GAP, int(np.ceil(grid * length)))
        offs = (np.arange(m, dtype=np.float64) + 0.5) * (length / m)
        xs_parts.append(start + offs)
        half_parts.append(np.full(m, length / m))
        # Brackets are clamped inside the open gap so the refinement never
        # straddles an endpoint charge (an infinite spike would break the
        # unimodality assumption of the golden-section step).
        lo_parts.append(np.full(m, start + 1e-9 * length))
        hi_parts.append(np.full(m, start + (1.0 - 1e-9) * length))
    xs = np.concatenate(xs_parts)
    halfw = np.concatenate(half_parts)
    gap_lo = np.concatenate(lo_parts)
    gap_hi = np.concatenate(hi_parts)

    vals = _potential_on_grid(angles, xs % 1.0, sv)
    vmin = float(np.min(vals))
    tie_idx = np.nonzero(vals <= vmin + _TIE_COARSE)[0]

    best_x, best_v = None, math.inf
    for i in tie_idx:
        lo = float(max(xs[i] - halfw[i], gap_lo[i]))
        hi = float(min(xs[i] + halfw[i], gap_hi[i]))
        x = _golden_refine(angles, lo, hi, sv, refine_iters)
        x = _polish_root(angles, lo, hi, sv, fallback=x)
        x %= 1.0
        v = _potential_at(angles, x, sv)
        if v < best_v - _TIE_FINAL or (abs(v - best_v) <= _TIE_FINAL and x < best_x):
            best_x, best_v = x, v
    return best_x, best_v


def greedy_numerical(
    initial: Configuration,
    s,
    n_points: int,
    grid: int = 4096,
    refine_iters: int = 40,
) -> GreedyRun:
    """Grow a greedy s-energy sequence numerically from an initial configuration.

    Each appended point minimizes the running potential of the current points
    (for s = 0, equivalently maximizes the product of distances).  Requires a
    nonempty initial configuration of distinct points and grid >= 64.  If
    n_points does not exceed the initial size, the configuration is returned
    unchanged (running potential values are still recorded).
    """
    param = s if isinstance(s, RieszParameter) else RieszParameter(float(s))
    sv = param.s
    if len(initial) < 1:
        raise ValueError("initial configuration must contain at least one point")
    if grid < 64:
        raise ValueError(f"need grid >= 64, got {grid}")
    if n_points > MAX_POINTS:
        raise BudgetExceededError(f"N={n_points} exceeds the compute budget {MAX_POINTS}")

    work = list(initial.angles())
    while len(work) < n_points:
        x, _ = _next_greedy_point(np.array(work, dtype=np.float64), sv, grid, refine_iters)
        work.append(x)

    points = Configuration.from_turns(work)
    all_angles = points.angles()
    extremal = [
        _potential_at(all_angles[:n], float(all_angles[n]), sv)
        for n in range(1, len(work))
    ]
    return GreedyRun(s=param, initial=initial, points=points, extremal_values=extremal)
