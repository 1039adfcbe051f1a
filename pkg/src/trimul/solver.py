"""Solutions of T_xi = k*T_t and the step-r recurrences that generate them.

For any non-square multiplier k >= 2 there are infinitely many index pairs
(t, xi) with triangular(xi) == k * triangular(t); (0, 0) is always the
first.  Sorted by t, the pairs satisfy four linear recurrences of step r
(the rank):

    t_n    = 2*(kappa+1)*t_{n-r}    - t_{n-2r}    + kappa
    xi_n   = 2*(kappa+1)*xi_{n-r}   - xi_{n-2r}   + kappa
    Tt_n   = (4*(kappa+1)**2 - 2)*Tt_{n-r}  - Tt_{n-2r}  + (T_kappa - gamma)
    Txi_n  = (4*(kappa+1)**2 - 2)*Txi_{n-r} - Txi_{n-2r} + k*(T_kappa - gamma)

where kappa = t_r + t_{r-1} = xi_r - xi_{r-1} - 1 and gamma = t_{r-1}*t_r.
The first three recurrences never mention k.  The first 2r pairs seed all
four streams.

Two independent ways to obtain base pairs:

* ``find_base_solutions`` scans t exhaustively up to a bound.  Simple, and
  a good oracle, but hopeless for multipliers with a large minimal Pell
  unit: k = 61 needs seed pairs near 2.7e18.
* ``generate_solutions`` substitutes x = 2*xi + 1, y = 2*t + 1, turning the
  defining equation into the norm form x**2 - k*y**2 = 1 - k, and walks
  every solution class under the fundamental unit of x**2 - k*y**2 = 1.
  This reaches all solutions at any magnitude and is what ``solve`` uses.

``detect_rank`` derives (r, kappa, gamma) from a sorted solution list and
validates the recurrence against every supplied pair before trusting it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from sympy.solvers.diophantine.diophantine import diop_DN

from .arith import triangular, tri_index

__all__ = [
    "InvalidMultiplierError",
    "RankDetectionError",
    "InsufficientSolutionsError",
    "InconsistentSequenceError",
    "Solution",
    "RecurrenceSpec",
    "validate_multiplier",
    "verify_solution",
    "find_base_solutions",
    "pell_unit",
    "fundamental_classes",
    "generate_solutions",
    "detect_rank",
    "solve",
    "solve_by_scan",
    "linear_stream",
    "triangular_stream",
    "extend",
    "solution_sequence",
]


class InvalidMultiplierError(ValueError):
    """The multiplier is below 2, a perfect square, or not an integer."""


class RankDetectionError(RuntimeError):
    """Rank detection failed on the supplied solution list."""


class InsufficientSolutionsError(RankDetectionError):
    """No rank validates; the list is too short for the true rank."""


class InconsistentSequenceError(RankDetectionError):
    """Some rank passes the constant test but the recurrence breaks later.

    This signals corrupted input (a missing or spurious pair), not a
    too-short list.
    """


def validate_multiplier(k: int) -> int:
    """Return k unchanged if it is a valid multiplier, else raise."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise InvalidMultiplierError(f"multiplier must be an integer, got {k!r}")
    if k < 2:
        raise InvalidMultiplierError(f"multiplier must be >= 2, got {k}")
    s = math.isqrt(k)
    if s * s == k:
        raise InvalidMultiplierError(f"multiplier must be non-square, got {k} = {s}**2")
    return k


@dataclass(frozen=True)
class Solution:
    """One pair (t, xi) with triangular(xi) == k*triangular(t), at position n."""

    n: int
    t: int
    xi: int
    tri_t: int
    tri_xi: int

    def as_pair(self) -> tuple[int, int]:
        return (self.t, self.xi)


def _make_solution(k: int, n: int, t: int, xi: int) -> Solution:
    tt = triangular(t)
    txi = triangular(xi)
    if txi != k * tt:
        raise ValueError(f"(t={t}, xi={xi}) does not solve the k={k} equation")
    return Solution(n=n, t=t, xi=xi, tri_t=tt, tri_xi=txi)


@dataclass(frozen=True)
class RecurrenceSpec:
    """Rank, constants, and seed pairs that generate all solutions for k."""

    k: int
    r: int
    kappa: int
    gamma: int
    seeds: tuple[Solution, ...]

    def __post_init__(self) -> None:
        validate_multiplier(self.k)
        if self.r < 1 or len(self.seeds) != 2 * self.r:
            raise ValueError("spec needs exactly 2*r seed solutions")

    @property
    def coeff_linear(self) -> int:
        return 2 * (self.kappa + 1)

    @property
    def coeff_tri(self) -> int:
        return 4 * (self.kappa + 1) ** 2 - 2

    @property
    def const_tri(self) -> int:
        # may be negative when gamma exceeds T_kappa; kept signed
        return triangular(self.kappa) - self.gamma


def verify_solution(k: int, t: int, xi: int) -> bool:
    """True iff triangular(xi) == k * triangular(t)."""
    validate_multiplier(k)
    return triangular(xi) == k * triangular(t)


def find_base_solutions(k: int, t_bound: int) -> list[Solution]:
    """All solutions with 0 <= t <= t_bound, by direct scan.

    Tests whether 8*k*T_t + 1 is a perfect square (its root is then odd),
    which is exactly the condition for k*T_t to be triangular.
    """
    validate_multiplier(k)
    if t_bound < 1:
        raise ValueError("t_bound must be >= 1")
    out: list[Solution] = []
    for t in range(t_bound + 1):
        d = 8 * k * (t * (t + 1) // 2) + 1
        s = math.isqrt(d)
        if s * s == d:
            out.append(_make_solution(k, len(out), t, (s - 1) // 2))
    return out


@lru_cache(maxsize=None)
def pell_unit(k: int) -> tuple[int, int]:
    """Fundamental solution (x0, y0) of x**2 - k*y**2 = 1."""
    validate_multiplier(k)
    sols = diop_DN(k, 1)
    if not sols:
        raise RuntimeError(f"no Pell unit for k={k}")  # cannot happen for non-square k
    x0, y0 = sols[0]
    return abs(int(x0)), abs(int(y0))


@lru_cache(maxsize=None)
def fundamental_classes(k: int) -> tuple[tuple[int, int], ...]:
    """Class representatives of x**2 - k*y**2 = 1 - k."""
    validate_multiplier(k)
    return tuple((int(x), int(y)) for x, y in diop_DN(k, 1 - k))


def generate_solutions(k: int, count: int) -> list[Solution]:
    """The first `count` solutions in increasing t, via the norm-form classes.

    Each class representative is walked forward under the Pell unit, in
    both conjugate directions; only members with x and y both odd map back
    to integer (t, xi).  Parity along an orbit can alternate, so a walk is
    capped rather than assumed to yield a member per step.
    """
    validate_multiplier(k)
    if count < 1:
        return []
    x0, y0 = pell_unit(k)
    pairs: set[tuple[int, int]] = set()
    for rx, ry in fundamental_classes(k):
        for x, y in ((rx, ry), (rx, -ry)):
            valid = 0
            for _ in range(2 * count + 16):
                ax, ay = abs(x), abs(y)
                if ax & 1 and ay & 1:
                    pairs.add(((ay - 1) // 2, (ax - 1) // 2))
                    valid += 1
                    if valid >= count:
                        break
                x, y = x * x0 + k * y * y0, x * y0 + y * x0
    ordered = sorted(pairs)[:count]
    return [_make_solution(k, n, t, xi) for n, (t, xi) in enumerate(ordered)]


def detect_rank(solutions: list[Solution]) -> RecurrenceSpec:
    """Derive (r, kappa, gamma) from consecutive solutions of one k.

    Returns the smallest rank r >= 1 such that

    (a) t_r + t_{r-1} == xi_r - xi_{r-1} - 1  (this common value is kappa),
    (b) t_{2r} - t_{r-1} == (2*kappa + 3) * t_r, and
    (c) the step-r recurrences with this kappa reproduce every supplied
        pair with index >= 2r, exactly.

    Raises InsufficientSolutionsError when no rank validates (caller should
    widen the search and retry) and InconsistentSequenceError when some rank
    passes (a) and (b) but fails (c) -- that means the input list itself is
    not a solution prefix.
    """
    if len(solutions) < 3:
        raise InsufficientSolutionsError("need at least 3 solutions")
    sols = sorted(solutions, key=lambda s: s.t)
    for s in sols:
        if s.tri_t != triangular(s.t) or s.tri_xi != triangular(s.xi):
            raise InconsistentSequenceError(f"corrupt triangular fields at t={s.t}")
    if sols[0].t != 0:
        raise InconsistentSequenceError("solution list must start at (0, 0)")
    if sols[1].tri_t == 0:
        raise InconsistentSequenceError("duplicate trivial solution")
    k = sols[1].tri_xi // sols[1].tri_t
    for s in sols[1:]:
        if s.tri_xi != k * s.tri_t:
            raise InconsistentSequenceError("pairs do not share one multiplier")

    t = [s.t for s in sols]
    xi = [s.xi for s in sols]
    saw_partial = False
    for r in range(1, (len(sols) - 1) // 2 + 1):
        kappa = t[r] + t[r - 1]
        if kappa != xi[r] - xi[r - 1] - 1:
            continue
        coeff = 2 * (kappa + 1)
        if t[2 * r] - t[r - 1] != (2 * kappa + 3) * t[r]:
            saw_partial = True
            continue
        ok = all(
            t[i] == coeff * t[i - r] - t[i - 2 * r] + kappa
            and xi[i] == coeff * xi[i - r] - xi[i - 2 * r] + kappa
            for i in range(2 * r, len(sols))
        )
        if ok:
            return RecurrenceSpec(
                k=k,
                r=r,
                kappa=kappa,
                gamma=t[r - 1] * t[r],
                seeds=tuple(sols[: 2 * r]),
            )
        saw_partial = True
    if saw_partial:
        raise InconsistentSequenceError(
            "a rank matches the constant test but not the recurrence"
        )
    raise InsufficientSolutionsError(
        f"no rank validates against {len(sols)} solutions"
    )


@lru_cache(maxsize=None)
def solve(k: int) -> RecurrenceSpec:
    """Rank, constants, and seeds for k, via the norm-form class walk.

    Grows the solution prefix until rank detection succeeds; ranks up to 12
    occur below k = 200, so the initial prefix of 26 usually suffices.
    """
    validate_multiplier(k)
    count = 26
    while True:
        sols = generate_solutions(k, count)
        try:
            return detect_rank(sols)
        except RankDetectionError:
            if count >= 512:
                raise
            count *= 2


def solve_by_scan(k: int, t_bound: int = 10**6, max_bound: int = 10**8) -> RecurrenceSpec:
    """Like solve(), but from the direct scan, doubling the bound on failure.

    Only viable for multipliers whose seeds are small; ``solve`` covers the
    rest.  Bounds are configurable.
    """
    validate_multiplier(k)
    while True:
        try:
            return detect_rank(find_base_solutions(k, t_bound))
        except InsufficientSolutionsError:
            t_bound *= 2
            if t_bound > max_bound:
                raise


def linear_stream(r: int, kappa: int, seeds: list[int], count: int) -> list[int]:
    """Next `count` terms of u_n = 2*(kappa+1)*u_{n-r} - u_{n-2r} + kappa.

    `seeds` are the first 2r terms; the multiplier k never enters.
    """
    if len(seeds) != 2 * r:
        raise ValueError("need exactly 2*r seed terms")
    coeff = 2 * (kappa + 1)
    vals = list(seeds)
    for _ in range(count):
        vals.append(coeff * vals[-r] - vals[-2 * r] + kappa)
    return vals[2 * r :]


def triangular_stream(r: int, kappa: int, const: int, seeds: list[int], count: int) -> list[int]:
    """Next `count` terms of U_n = (4*(kappa+1)**2 - 2)*U_{n-r} - U_{n-2r} + const.

    Used for both triangular-value streams; only `const` differs between
    them (T_kappa - gamma versus k times that), so the stream itself is
    k-free.
    """
    if len(seeds) != 2 * r:
        raise ValueError("need exactly 2*r seed terms")
    coeff = 4 * (kappa + 1) ** 2 - 2
    vals = list(seeds)
    for _ in range(count):
        vals.append(coeff * vals[-r] - vals[-2 * r] + const)
    return vals[2 * r :]


def extend(spec: RecurrenceSpec, count: int) -> list[Solution]:
    """Solutions with indices 2r .. 2r+count-1, computed by all four streams.

    The four streams are generated independently and cross-checked: the
    triangular streams must equal triangular() of the linear streams, and
    the xi-side triangular values must be k times the t-side ones.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    if count == 0:
        return []
    r, kappa, k = spec.r, spec.kappa, spec.k
    t_new = linear_stream(r, kappa, [s.t for s in spec.seeds], count)
    xi_new = linear_stream(r, kappa, [s.xi for s in spec.seeds], count)
    tt_new = triangular_stream(r, kappa, spec.const_tri, [s.tri_t for s in spec.seeds], count)
    txi_new = triangular_stream(r, kappa, k * spec.const_tri, [s.tri_xi for s in spec.seeds], count)

    out: list[Solution] = []
    for i in range(count):
        t, xi, tt, txi = t_new[i], xi_new[i], tt_new[i], txi_new[i]
        if tt != triangular(t) or txi != triangular(xi) or txi != k * tt:
            raise RuntimeError(f"recurrence streams diverged at index {2 * r + i} for k={k}")
        if tri_index(txi) != xi:
            raise RuntimeError(f"xi stream lost triangularity at index {2 * r + i}")
        out.append(Solution(n=2 * r + i, t=t, xi=xi, tri_t=tt, tri_xi=txi))
    return out


def solution_sequence(spec: RecurrenceSpec, count: int) -> list[Solution]:
    """The first `count` solutions for spec.k (seeds, then extended)."""
    if count <= len(spec.seeds):
        return list(spec.seeds[:count])
    return list(spec.seeds) + extend(spec, count - len(spec.seeds))
