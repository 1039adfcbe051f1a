"""Residue classes of xi modulo k, computed two independent ways.

``observed_residues`` is the ground truth: it reduces the xi recurrence
modulo k and walks the state orbit, which is purely periodic because the
transition is invertible mod k (the trailing coefficient is -1).  The set
of residues on the full cycle is exactly the set realized by the infinite
solution sequence.

``candidate_residues`` is the independent necessary-condition oracle: a
residue class can only carry solutions if some member xi of the class has
T_xi divisible by k; scanning one window of length 2k is exhaustive since
T_xi mod k is periodic in xi with period dividing 2k.  The candidate set
always contains the observed set, and the containment can be strict:
k = 74 admits candidates {0, 36, 37, 73} but realizes only {0, 73}.

Every observed set satisfies four structural invariants, enforced at
construction: the count upsilon is even, 0 and k-1 are present, residues
pair up as mu <-> k-1-mu, and the total is (k-1)*upsilon/2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import triangular
from .solver import RecurrenceSpec, validate_multiplier

__all__ = [
    "BrokenPairingError",
    "ResidueSet",
    "observed_residues",
    "candidate_residues",
    "pair_structure",
]


class BrokenPairingError(ValueError):
    """A remainder lacks its k-1-mu partner; signals an upstream bug."""


@dataclass(frozen=True)
class ResidueSet:
    """The distinct values of xi mod k over all solutions, sorted."""

    k: int
    mu: tuple[int, ...]
    upsilon: int

    def __post_init__(self) -> None:
        validate_multiplier(self.k)
        k, mu = self.k, self.mu
        if list(mu) != sorted(set(mu)):
            raise ValueError("remainders must be sorted and distinct")
        if any(m < 0 or m >= k for m in mu):
            raise ValueError("remainders must lie in [0, k)")
        if self.upsilon != len(mu):
            raise ValueError("upsilon must equal the remainder count")
        if self.upsilon % 2 != 0:
            raise ValueError(f"remainder count must be even, got {self.upsilon}")
        if 0 not in mu or (k - 1) not in mu:
            raise ValueError("0 and k-1 must both be present")
        present = set(mu)
        if any((k - 1 - m) not in present for m in mu):
            raise ValueError("remainders must pair up as mu <-> k-1-mu")
        if sum(mu) != (k - 1) * self.upsilon // 2:
            raise ValueError("remainder sum must be (k-1)*upsilon/2")

    @classmethod
    def from_remainders(cls, k: int, remainders) -> "ResidueSet":
        mu = tuple(sorted(set(remainders)))
        return cls(k=k, mu=mu, upsilon=len(mu))


def observed_residues(spec: RecurrenceSpec) -> ResidueSet:
    """Exact residue set of xi mod k, by cycle detection on the recurrence.

    The state vector holds the last 2r residues.  Walking forward must
    return to the initial state (pure periodicity); the residues are the
    seeds plus everything generated on the way around.
    """
    k, r = spec.k, spec.r
    coeff = (2 * (spec.kappa + 1)) % k
    add = spec.kappa % k
    state0 = tuple(s.xi % k for s in spec.seeds)
    seen = set(state0)
    state = state0
    # Periods observed in practice are a small multiple of k; the guard is
    # generous, and the state space bound k**(2r) guarantees a revisit.
    guard = 64 + 16 * k * k
    for _ in range(guard):
        nxt = (coeff * state[r] - state[0] + add) % k
        state = state[1:] + (nxt,)
        if state == state0:
            return ResidueSet.from_remainders(k, seen)
        seen.add(nxt)
    raise RuntimeError(f"residue orbit for k={k} did not close within {guard} steps")


def candidate_residues(k: int) -> list[int]:
    """Sorted residues mu with k dividing T_xi for some xi = mu (mod k).

    Scans xi in [0, 2k); the window length 2k is exact because consecutive
    differences T_{xi+2k} - T_xi are divisible by k.  The scan covers even
    multipliers, where the two lifts mu and mu + k of a class behave
    differently.
    """
    validate_multiplier(k)
    found = {xi % k for xi in range(2 * k) if triangular(xi) % k == 0}
    return sorted(found)


def pair_structure(rs: ResidueSet) -> list[tuple[int, int]]:
    """The upsilon/2 disjoint pairs (mu, k-1-mu) covering the residue set."""
    remaining = set(rs.mu)
    pairs: list[tuple[int, int]] = []
    for m in rs.mu:
        if m not in remaining:
            continue
        partner = rs.k - 1 - m
        if partner not in remaining:
            raise BrokenPairingError(f"remainder {m} lacks partner {partner} mod {rs.k}")
        remaining.discard(m)
        remaining.discard(partner)
        pairs.append((m, partner))
    return pairs
