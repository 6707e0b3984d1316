"""Brute-force and constructive enumeration of shallow pattern avoiders.

Brute force iterates all of S_n in lexicographic order and filters;
constructive enumeration streams the shallow generator and filters. Both
agree by construction, and the "both" method runs each and raises on any
disagreement. Counts are plain Python ints end to end, so there is no
word-size ceiling.
"""
from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator, Optional

from . import series
from .patterns import (
    POSITION_ANCHORED_3412,
    VALUE_ANCHORED_3412,
    PatternSpec,
    avoids,
)
from .perms import (
    Perm,
    SymmetryClass,
    cycle_count,
    descent_count,
    is_in_class,
    lr_max_flags,
)
from .shallow import generate_shallow, is_shallow


class SizeCapExceeded(ValueError):
    """A query asked for sizes beyond the configured cap."""


class MethodDisagreement(RuntimeError):
    """Brute-force and constructive counts differ (an implementation bug)."""

    def __init__(self, n: int, brute: dict, constructive: dict):
        super().__init__(
            f"method disagreement at n={n}: brute={brute} constructive={constructive}"
        )
        self.n = n
        self.brute = brute
        self.constructive = constructive


class OracleDomainError(ValueError):
    """The oracle does not cover the table being verified."""


class Method(Enum):
    BRUTE_FORCE = "brute"
    CONSTRUCTIVE = "constructive"
    BOTH = "both"


@dataclass(frozen=True)
class Caps:
    """Size ceilings for the two enumeration strategies."""

    brute_force: int = 10
    constructive: int = 12


DEFAULT_CAPS = Caps()

_REFINEMENTS: dict[str, Callable[[Perm], int]] = {
    "descents": descent_count,
    "cycles": cycle_count,
    "lrmax": lambda p: sum(lr_max_flags(p)),
}


@dataclass(frozen=True)
class CountQuery:
    """What to count: sizes, avoided patterns, symmetry, refinement, method."""

    sizes: tuple[int, ...]
    avoid: tuple[PatternSpec, ...] = ()
    symmetry: Optional[SymmetryClass] = None
    refine_by: Optional[str] = None
    method: Method = Method.CONSTRUCTIVE

    def __post_init__(self) -> None:
        if self.refine_by is not None and self.refine_by not in _REFINEMENTS:
            raise ValueError(
                f"refine_by must be one of {sorted(_REFINEMENTS)}, got {self.refine_by!r}"
            )
        if any(n < 0 for n in self.sizes):
            raise ValueError("sizes must be nonnegative")


@dataclass(frozen=True)
class CountRow:
    n: int
    k: Optional[int]
    count: int
    elapsed: float  # seconds spent on this row's enumeration pass


@dataclass(frozen=True)
class CountTable:
    query: CountQuery
    rows: tuple[CountRow, ...]
    provenance: Method

    def value(self, n: int, k: Optional[int] = None) -> int:
        for row in self.rows:
            if row.n == n and row.k == k:
                return row.count
        raise KeyError(f"no row for n={n}, k={k}")


def _iter_all(n: int) -> Iterator[Perm]:
    return itertools.permutations(range(1, n + 1))


def _scan(
    perms: Iterable[Perm],
    avoid: tuple[PatternSpec, ...],
    symmetry: Optional[SymmetryClass],
    key: Optional[Callable[[Perm], int]],
    shallow_filter: bool,
) -> dict[Optional[int], int]:
    counts: Counter = Counter()
    for p in perms:
        if symmetry is not None and not is_in_class(p, symmetry):
            continue
        if shallow_filter and not is_shallow(p):
            continue
        if avoid and not avoids(p, avoid):
            continue
        counts[key(p) if key else None] += 1
    return dict(counts)


def _counts_for(
    n: int, query: CountQuery, method: Method
) -> dict[Optional[int], int]:
    key = _REFINEMENTS[query.refine_by] if query.refine_by else None
    if method is Method.BRUTE_FORCE:
        return _scan(_iter_all(n), query.avoid, query.symmetry, key, True)
    return _scan(generate_shallow(n), query.avoid, query.symmetry, key, False)


def count(query: CountQuery, caps: Caps = DEFAULT_CAPS) -> CountTable:
    """
    Count shallow permutations matching the query, size by size.

    With refine_by set, one row per observed statistic value is produced
    (their sum is the unrefined count). The "both" method runs brute force
    and the constructive generator and raises MethodDisagreement if they
    ever differ.
    """
    limit = {
        Method.BRUTE_FORCE: caps.brute_force,
        Method.CONSTRUCTIVE: caps.constructive,
        Method.BOTH: min(caps.brute_force, caps.constructive),
    }[query.method]
    over = [n for n in query.sizes if n > limit]
    if over:
        raise SizeCapExceeded(
            f"sizes {over} beyond the {query.method.value} cap {limit}"
        )
    rows: list[CountRow] = []
    for n in query.sizes:
        start = time.perf_counter()
        if query.method is Method.BOTH:
            brute = _counts_for(n, query, Method.BRUTE_FORCE)
            constructive = _counts_for(n, query, Method.CONSTRUCTIVE)
            if brute != constructive:
                raise MethodDisagreement(n, brute, constructive)
            counts = constructive
        else:
            counts = _counts_for(n, query, query.method)
        elapsed = time.perf_counter() - start
        if not counts and query.refine_by is None:
            counts = {None: 0}
        for k in sorted(counts, key=lambda v: (v is not None, v)):
            rows.append(CountRow(n=n, k=k, count=counts[k], elapsed=elapsed))
    return CountTable(query=query, rows=tuple(rows), provenance=query.method)


def descent_table(
    n_max: int, avoid: PatternSpec, caps: Caps = DEFAULT_CAPS
) -> CountTable:
    """
    Constructive descent refinement: one row per (n, k) with 0 <= k < n,
    zero counts included, for 1 <= n <= n_max.
    """
    if n_max > caps.constructive:
        raise SizeCapExceeded(f"n_max {n_max} beyond constructive cap {caps.constructive}")
    query = CountQuery(
        sizes=tuple(range(1, n_max + 1)),
        avoid=(avoid,),
        refine_by="descents",
        method=Method.CONSTRUCTIVE,
    )
    rows: list[CountRow] = []
    for n in query.sizes:
        start = time.perf_counter()
        counts = _counts_for(n, query, Method.CONSTRUCTIVE)
        elapsed = time.perf_counter() - start
        for k in range(n):
            rows.append(CountRow(n=n, k=k, count=counts.get(k, 0), elapsed=elapsed))
    return CountTable(query=query, rows=tuple(rows), provenance=Method.CONSTRUCTIVE)


# ---------------------------------------------------------------------------
# Verification against oracles


@dataclass(frozen=True)
class VerificationPair:
    label: str
    n: Optional[int]
    k: Optional[int]
    table_value: Optional[int]
    oracle_value: Optional[int]
    match: bool


@dataclass(frozen=True)
class VerificationReport:
    pairs: tuple[VerificationPair, ...]
    overall: bool
    first_mismatch: Optional[VerificationPair]


def report_from_pairs(pairs: Iterable[VerificationPair]) -> VerificationReport:
    pairs = tuple(pairs)
    first = next((p for p in pairs if not p.match), None)
    return VerificationReport(
        pairs=pairs, overall=first is None, first_mismatch=first
    )


def verify(table: CountTable, oracle: str) -> VerificationReport:
    """
    Compare every table row against a catalog series or closed-form family.

    Unrefined tables check against univariate series (or closed forms);
    refined tables check against bivariate series, treating statistic
    values absent from the table as zero.
    """
    sizes = sorted({row.n for row in table.rows})
    if not sizes:
        return report_from_pairs(())
    refined = any(row.k is not None for row in table.rows)
    pairs: list[VerificationPair] = []
    if oracle in series.CATALOG:
        expansion = series.catalog(oracle, max(sizes))
        if isinstance(expansion, series.RationalSeries):
            if refined:
                raise OracleDomainError(
                    f"{oracle} is univariate but the table is refined"
                )
            for row in table.rows:
                expected = int(series.coefficient(expansion, row.n))
                pairs.append(
                    VerificationPair(
                        label=f"{oracle}[{row.n}]",
                        n=row.n,
                        k=None,
                        table_value=row.count,
                        oracle_value=expected,
                        match=row.count == expected,
                    )
                )
        else:
            if not refined:
                raise OracleDomainError(
                    f"{oracle} is bivariate but the table is unrefined"
                )
            observed = {(row.n, row.k): row.count for row in table.rows}
            for n in sizes:
                for k in range(n + 1):
                    expected = expansion.value(n, k)
                    got = observed.get((n, k), 0)
                    pairs.append(
                        VerificationPair(
                            label=f"{oracle}[{n},{k}]",
                            n=n,
                            k=k,
                            table_value=got,
                            oracle_value=expected,
                            match=got == expected,
                        )
                    )
    elif oracle in series._CLOSED_FORM_FUNCS:
        if refined:
            raise OracleDomainError(f"{oracle} is a plain count family")
        for row in table.rows:
            try:
                expected = series.closed_form(oracle, row.n)
            except series.OutOfDomain as exc:
                raise OracleDomainError(str(exc)) from None
            pairs.append(
                VerificationPair(
                    label=f"{oracle}[{row.n}]",
                    n=row.n,
                    k=None,
                    table_value=row.count,
                    oracle_value=expected,
                    match=row.count == expected,
                )
            )
    else:
        raise OracleDomainError(f"unknown oracle {oracle!r}")
    return report_from_pairs(pairs)


# ---------------------------------------------------------------------------
# Exploratory statistics for the open bijection question


@dataclass(frozen=True)
class StatProfile:
    n: int
    descriptor: str
    counts: tuple[tuple[tuple[int, int], int], ...]  # ((stat pair), multiplicity)

    def total(self) -> int:
        return sum(m for _, m in self.counts)


@dataclass(frozen=True)
class ProfilePair:
    left: StatProfile
    right: StatProfile
    consistent: bool


_PATTERN_132 = PatternSpec(pattern=(1, 3, 2))
_PATTERN_321 = PatternSpec(pattern=(3, 2, 1))


def profile(n: int, caps: Caps = DEFAULT_CAPS) -> ProfilePair:
    """
    Compare the (cycles, descents+1) multiset over shallow 132-avoiders
    with the (cycles, left-to-right maxima) multiset over shallow
    321-avoiders of the same size. The flag reports whether the two
    multisets coincide at this size; it is evidence, not a theorem.
    """
    if n > caps.constructive:
        raise SizeCapExceeded(f"n {n} beyond constructive cap {caps.constructive}")
    left: Counter = Counter()
    right: Counter = Counter()
    for p in generate_shallow(n):
        if avoids(p, (_PATTERN_132,)):
            left[(cycle_count(p), descent_count(p) + 1)] += 1
        if avoids(p, (_PATTERN_321,)):
            right[(cycle_count(p), sum(lr_max_flags(p)))] += 1
    left_profile = StatProfile(
        n=n,
        descriptor="shallow 132-avoiding: (cycles, descents+1)",
        counts=tuple(sorted(left.items())),
    )
    right_profile = StatProfile(
        n=n,
        descriptor="shallow 321-avoiding: (cycles, left-to-right maxima)",
        counts=tuple(sorted(right.items())),
    )
    return ProfilePair(
        left=left_profile, right=right_profile, consistent=left == right
    )


def search_mesh_counterexample(
    n_max: int, caps: Caps = DEFAULT_CAPS
) -> Optional[Perm]:
    """
    The size-lexicographically first non-shallow permutation avoiding both
    anchored 3412 patterns, or None if none exists up to n_max.

    Any witness is re-checked against both conditions before being
    returned.
    """
    if n_max > caps.brute_force:
        raise SizeCapExceeded(f"n_max {n_max} beyond brute-force cap {caps.brute_force}")
    both = (VALUE_ANCHORED_3412, POSITION_ANCHORED_3412)
    for n in range(1, n_max + 1):
        for p in _iter_all(n):
            if is_shallow(p):
                continue
            if avoids(p, both):
                if is_shallow(p) or not avoids(p, both):
                    raise RuntimeError(f"witness self-check failed for {p}")
                return p
    return None
