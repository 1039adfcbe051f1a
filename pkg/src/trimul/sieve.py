"""Bounded solution search: exhaustive scan versus congruence sieve.

Both strategies test candidate xi values with the same predicate (k must
divide T_xi and T_xi/k must itself be triangular, checked through the
8*(T_xi/k) + 1 perfect-square test).  The naive scan visits every xi up to
the limit; the sieve visits only the residue classes that can carry
solutions, which cuts candidates by about k/upsilon.  The sieve walks its
classes in interleaved ascending-xi order so the two result lists are
comparable by plain equality.

``bench`` times both strategies over repeated runs and reports the
candidate-count gain (deterministic) alongside the wall-clock gain.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass

from .residues import ResidueSet, observed_residues
from .solver import Solution, solve, validate_multiplier

__all__ = [
    "DivergenceError",
    "BenchReport",
    "naive_search",
    "sieve_search",
    "sieve_candidate_count",
    "bench",
]


class DivergenceError(RuntimeError):
    """Naive and sieved searches disagreed on the solution list."""


def _test_xi(k: int, xi: int) -> int | None:
    """The shared per-candidate test: t when (t, xi) solves, else None."""
    q, rem = divmod(xi * (xi + 1) // 2, k)
    if rem:
        return None
    d = 8 * q + 1
    s = math.isqrt(d)
    if s * s != d:
        return None
    return (s - 1) // 2


def _scan(k: int, xi_limit: int, classes: tuple[int, ...] | None) -> tuple[list[Solution], int]:
    """Run one search; returns (solutions, candidates tested)."""
    found: list[Solution] = []
    tested = 0
    if classes is None:
        for xi in range(xi_limit + 1):
            tested += 1
            t = _test_xi(k, xi)
            if t is not None:
                found.append(Solution(n=len(found), t=t, xi=xi,
                                      tri_t=t * (t + 1) // 2, tri_xi=xi * (xi + 1) // 2))
    else:
        # ascending within each k-block, classes sorted: global xi order
        for base in range(0, xi_limit + 1, k):
            for mu in classes:
                xi = base + mu
                if xi > xi_limit:
                    break
                tested += 1
                t = _test_xi(k, xi)
                if t is not None:
                    found.append(Solution(n=len(found), t=t, xi=xi,
                                          tri_t=t * (t + 1) // 2, tri_xi=xi * (xi + 1) // 2))
    return found, tested


def naive_search(k: int, xi_limit: int) -> list[Solution]:
    """All solutions with xi <= xi_limit, testing every xi."""
    validate_multiplier(k)
    if xi_limit < 0:
        raise ValueError("xi_limit must be non-negative")
    return _scan(k, xi_limit, None)[0]


def sieve_search(k: int, xi_limit: int, residues: ResidueSet) -> list[Solution]:
    """All solutions with xi <= xi_limit, testing only the residue classes."""
    validate_multiplier(k)
    if xi_limit < 0:
        raise ValueError("xi_limit must be non-negative")
    if residues.k != k:
        raise ValueError("residue set belongs to a different multiplier")
    return _scan(k, xi_limit, residues.mu)[0]


def sieve_candidate_count(xi_limit: int, residues: ResidueSet) -> int:
    """Exact number of candidates the sieve tests up to xi_limit."""
    k = residues.k
    return sum((xi_limit - mu) // k + 1 for mu in residues.mu if mu <= xi_limit)


@dataclass(frozen=True)
class BenchReport:
    """Candidate counts and median wall-clock times for both strategies."""

    k: int
    limit: int
    upsilon: int
    naive_candidates: int
    sieve_candidates: int
    naive_time_ns: int
    sieve_time_ns: int
    solutions_found: int
    measured_gain: float   # naive_time / sieve_time
    candidate_gain: float  # naive_candidates / sieve_candidates


def bench(k: int, xi_limit: int, repetitions: int = 5) -> BenchReport:
    """Time both strategies `repetitions` times; report median timings.

    One warm-up run per strategy is discarded.  Every run's solution list
    must match the naive baseline exactly, else DivergenceError: the sieve
    is only a speedup if it is lossless.
    """
    validate_multiplier(k)
    if repetitions < 3:
        raise ValueError("repetitions must be >= 3")
    rset = observed_residues(solve(k))

    baseline, naive_candidates = _scan(k, xi_limit, None)  # warm-up, kept as reference
    warm_sieve, sieve_candidates = _scan(k, xi_limit, rset.mu)
    base_pairs = [s.as_pair() for s in baseline]
    if [s.as_pair() for s in warm_sieve] != base_pairs:
        raise DivergenceError(f"sieve missed or invented solutions for k={k}")

    naive_times: list[int] = []
    sieve_times: list[int] = []
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        got, _ = _scan(k, xi_limit, None)
        naive_times.append(time.perf_counter_ns() - t0)
        if [s.as_pair() for s in got] != base_pairs:
            raise DivergenceError(f"naive rerun diverged for k={k}")

        t0 = time.perf_counter_ns()
        got, _ = _scan(k, xi_limit, rset.mu)
        sieve_times.append(time.perf_counter_ns() - t0)
        if [s.as_pair() for s in got] != base_pairs:
            raise DivergenceError(f"sieve rerun diverged for k={k}")

    naive_ns = int(statistics.median(naive_times))
    sieve_ns = int(statistics.median(sieve_times))
    return BenchReport(
        k=k,
        limit=xi_limit,
        upsilon=rset.upsilon,
        naive_candidates=naive_candidates,
        sieve_candidates=sieve_candidates,
        naive_time_ns=naive_ns,
        sieve_time_ns=sieve_ns,
        solutions_found=len(baseline),
        measured_gain=naive_ns / sieve_ns,
        candidate_gain=naive_candidates / sieve_candidates,
    )
