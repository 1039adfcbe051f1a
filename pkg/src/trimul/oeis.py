"""Fetch, cache, and cross-check the published term lists (OEIS b-files)
for the six multipliers whose solution families are catalogued online.

A b-file is plain ASCII, one ``<index> <value>`` pair per line, with ``#``
comment lines permitted.  Files are cached verbatim in a flat directory
(override with the TRIMUL_OEIS_CACHE environment variable) so checks can
run hermetically offline once the cache is warm; cache writes go through a
temp file and an atomic rename.

``crosscheck`` compares solver output against the published terms per
role.  Published sequences differ on whether they include the trivial 0
solution and on their starting offset, so the comparison aligns both
streams at their first strictly positive term and reports the shift.
"""

from __future__ import annotations

import os
import tempfile
import urllib.request
from dataclasses import dataclass
from pathlib import Path

from .solver import solution_sequence, solve

__all__ = [
    "OfflineCacheMissError",
    "BFileParseError",
    "SequenceRef",
    "SequenceData",
    "RoleReport",
    "CrosscheckReport",
    "SEQUENCE_IDS",
    "ROLES",
    "CACHE_ENV",
    "DEFAULT_BASE_URL",
    "sequence_refs",
    "default_cache_dir",
    "parse_bfile",
    "fetch_bfile",
    "crosscheck",
]

# The 24 catalogued sequences: per multiplier, the ids for the small index
# t, the large index xi, and the two triangular values.
SEQUENCE_IDS: dict[int, dict[str, str]] = {
    2: {"t": "A053141", "xi": "A001652", "T_t": "A075528", "T_xi": "A029549"},
    3: {"t": "A061278", "xi": "A001571", "T_t": "A076139", "T_xi": "A076140"},
    5: {"t": "A077259", "xi": "A077262", "T_t": "A077260", "T_xi": "A077261"},
    6: {"t": "A077288", "xi": "A077291", "T_t": "A077289", "T_xi": "A077290"},
    7: {"t": "A077398", "xi": "A077401", "T_t": "A077399", "T_xi": "A077400"},
    8: {"t": "A336623", "xi": "A336625", "T_t": "A336624", "T_xi": "A336626"},
}

ROLES = ("t", "xi", "T_t", "T_xi")

CACHE_ENV = "TRIMUL_OEIS_CACHE"
DEFAULT_BASE_URL = "https://oeis.org"


class OfflineCacheMissError(RuntimeError):
    """Offline mode was requested but the cache has no entry for the id."""


class BFileParseError(ValueError):
    """A b-file line failed to parse; carries the 1-based line number."""

    def __init__(self, oeis_id: str, line_number: int, message: str):
        super().__init__(f"{oeis_id} line {line_number}: {message}")
        self.oeis_id = oeis_id
        self.line_number = line_number


@dataclass(frozen=True)
class SequenceRef:
    """One (multiplier, role) slot and its catalogue id."""

    k: int
    role: str
    oeis_id: str


@dataclass(frozen=True)
class SequenceData:
    """Parsed b-file content: (index, value) pairs as published."""

    oeis_id: str
    terms: tuple[tuple[int, int], ...]

    def values(self) -> list[int]:
        return [v for _, v in self.terms]


def sequence_refs() -> list[SequenceRef]:
    """All 24 catalogued (k, role, id) triples."""
    return [
        SequenceRef(k=k, role=role, oeis_id=ids[role])
        for k, ids in sorted(SEQUENCE_IDS.items())
        for role in ROLES
    ]


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME", os.path.join(os.path.expanduser("~"), ".cache"))
    return Path(base) / "trimul" / "oeis"


def _bfile_name(oeis_id: str) -> str:
    digits = oeis_id[1:] if oeis_id[:1].upper() == "A" else oeis_id
    if len(digits) != 6 or not digits.isdigit():
        raise ValueError(f"not a 6-digit sequence id: {oeis_id!r}")
    return f"b{digits}.txt"


def parse_bfile(text: str, oeis_id: str) -> SequenceData:
    """Parse b-file text; blank lines and # comments are ignored.

    Indices must be consecutive (the published offset is preserved, not
    normalized to 0).
    """
    terms: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(oeis_id, lineno, f"expected 'index value', got {raw!r}")
        try:
            idx, val = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileParseError(oeis_id, lineno, f"non-integer field in {raw!r}") from None
        if terms and idx != terms[-1][0] + 1:
            raise BFileParseError(oeis_id, lineno, f"index {idx} not consecutive after {terms[-1][0]}")
        terms.append((idx, val))
    if not terms:
        raise BFileParseError(oeis_id, 1, "no terms found")
    return SequenceData(oeis_id=oeis_id, terms=tuple(terms))


def _http_get(url: str, timeout: float = 30.0) -> bytes:
    # module-level hook so tests can stub the transport
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return resp.read()


def fetch_bfile(
    ref: SequenceRef | str,
    cache_dir: str | os.PathLike | None = None,
    offline: bool = False,
    base_url: str = DEFAULT_BASE_URL,
) -> SequenceData:
    """Return the parsed b-file for a ref or bare id, caching verbatim bodies.

    Cache hits never touch the network.  With offline=True a cache miss
    raises OfflineCacheMissError instead of fetching.
    """
    oeis_id = ref.oeis_id if isinstance(ref, SequenceRef) else ref
    cache = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    path = cache / _bfile_name(oeis_id)
    if path.exists():
        return parse_bfile(path.read_text(), oeis_id)
    if offline:
        raise OfflineCacheMissError(f"offline and no cached b-file for {oeis_id} in {cache}")
    url = f"{base_url.rstrip('/')}/{_bfile_name(oeis_id)}"
    body = _http_get(url)
    data = parse_bfile(body.decode("ascii"), oeis_id)  # parse before caching
    cache.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache, prefix=f".{_bfile_name(oeis_id)}.")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(body)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return data


@dataclass(frozen=True)
class RoleReport:
    """Term-by-term comparison of one role against its published sequence."""

    role: str
    oeis_id: str
    shift: int           # published position minus solver index at alignment
    compared: int
    mismatches: tuple[tuple[int, int, int], ...]  # (solver n, ours, published)

    @property
    def matched(self) -> bool:
        return self.compared > 0 and not self.mismatches


@dataclass(frozen=True)
class CrosscheckReport:
    k: int
    count: int
    roles: tuple[RoleReport, ...]

    @property
    def ok(self) -> bool:
        return all(r.matched for r in self.roles)


def _first_positive(values: list[int]) -> int | None:
    for i, v in enumerate(values):
        if v > 0:
            return i
    return None


def crosscheck(
    k: int,
    count: int,
    cache_dir: str | os.PathLike | None = None,
    offline: bool = False,
    base_url: str = DEFAULT_BASE_URL,
) -> CrosscheckReport:
    """Compare the first `count` solver terms per role with published terms.

    Both term streams are aligned at their first strictly positive value,
    which absorbs offset conventions and the presence or absence of the
    trivial 0 solution.  Fewer published terms than `count` shortens the
    comparison rather than failing it.
    """
    if k not in SEQUENCE_IDS:
        raise ValueError(f"no catalogued sequences for k={k}; have {sorted(SEQUENCE_IDS)}")
    if count < 1:
        raise ValueError("count must be >= 1")
    spec = solve(k)
    seq = solution_sequence(spec, count + 1)  # margin for the alignment shift
    ours: dict[str, list[int]] = {
        "t": [s.t for s in seq],
        "xi": [s.xi for s in seq],
        "T_t": [s.tri_t for s in seq],
        "T_xi": [s.tri_xi for s in seq],
    }

    reports: list[RoleReport] = []
    for role in ROLES:
        ref = SequenceRef(k=k, role=role, oeis_id=SEQUENCE_IDS[k][role])
        published = fetch_bfile(ref, cache_dir=cache_dir, offline=offline, base_url=base_url)
        pub_values = published.values()
        i_ours = _first_positive(ours[role])
        i_pub = _first_positive(pub_values)
        if i_ours is None or i_pub is None:
            reports.append(RoleReport(role=role, oeis_id=ref.oeis_id, shift=0,
                                      compared=0, mismatches=()))
            continue
        shift = published.terms[i_pub][0] - i_ours
        n_cmp = min(count, len(ours[role]) - i_ours, len(pub_values) - i_pub)
        mism: list[tuple[int, int, int]] = []
        for j in range(n_cmp):
            a = ours[role][i_ours + j]
            b = pub_values[i_pub + j]
            if a != b:
                mism.append((i_ours + j, a, b))
        reports.append(RoleReport(role=role, oeis_id=ref.oeis_id, shift=shift,
                                  compared=n_cmp, mismatches=tuple(mism)))
    return CrosscheckReport(k=k, count=count, roles=tuple(reports))
