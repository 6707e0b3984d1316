"""Classical pattern containment plus the two anchored 3412 variants.

A pattern spec is a short permutation (length at most 4) whose letters may
carry anchors pinning them to extremes of the host: the host's largest
value, its smallest value, its first position, or its last position. The
two anchored specs used by the shallowness theory are

* ``VALUE_ANCHORED_3412`` (text name ``3n12``): 3412 where the "4" must be
  the host's maximum and the "1" must be the value 1;
* ``POSITION_ANCHORED_3412`` (text name ``u3412``): 3412 where the "3"
  must sit in the first position and the "2" in the last.

Containment search is a brute-force scan over index tuples with early
pruning. Witnesses are the lexicographically least index tuples, so
outputs are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .perms import Perm, parse_permutation, validate_permutation


class Anchor(Enum):
    VALUE_MAX = "value_max"
    VALUE_MIN = "value_min"
    POS_FIRST = "pos_first"
    POS_LAST = "pos_last"


@dataclass(frozen=True)
class PatternSpec:
    """A classical pattern with optional per-letter anchors."""

    pattern: Perm
    anchors: tuple[Optional[Anchor], ...] = field(default=())

    def __post_init__(self) -> None:
        validate_permutation(self.pattern)
        if len(self.pattern) > 4:
            raise ValueError("patterns longer than 4 are not supported")
        anchors = self.anchors
        if not anchors:
            anchors = (None,) * len(self.pattern)
            object.__setattr__(self, "anchors", anchors)
        if len(anchors) != len(self.pattern):
            raise ValueError("one anchor slot per pattern letter")
        for kind in Anchor:
            if sum(1 for a in anchors if a is kind) > 1:
                raise ValueError(f"anchor {kind.value} used more than once")
        for i, a in enumerate(anchors):
            if a is Anchor.POS_FIRST and i != 0:
                raise ValueError("pos_first anchor only on the first letter")
            if a is Anchor.POS_LAST and i != len(anchors) - 1:
                raise ValueError("pos_last anchor only on the last letter")

    def describe(self) -> str:
        if all(a is None for a in self.anchors):
            return "".join(str(v) for v in self.pattern)
        parts = []
        for v, a in zip(self.pattern, self.anchors):
            parts.append(str(v) if a is None else f"{v}[{a.value}]")
        return " ".join(parts)


def classical(pattern: Iterable[int]) -> PatternSpec:
    """Anchor-free spec for a plain pattern word."""
    return PatternSpec(pattern=tuple(pattern))


VALUE_ANCHORED_3412 = PatternSpec(
    pattern=(3, 4, 1, 2),
    anchors=(None, Anchor.VALUE_MAX, Anchor.VALUE_MIN, None),
)

POSITION_ANCHORED_3412 = PatternSpec(
    pattern=(3, 4, 1, 2),
    anchors=(Anchor.POS_FIRST, None, None, Anchor.POS_LAST),
)

NAMED_SPECS = {
    "3n12": VALUE_ANCHORED_3412,
    "u3412": POSITION_ANCHORED_3412,
}


def parse_pattern(text: str) -> PatternSpec:
    """
    Resolve CLI pattern syntax: a digit word like "132" or "3412", or one
    of the reserved names "3n12" and "u3412".
    """
    name = text.strip()
    if name in NAMED_SPECS:
        return NAMED_SPECS[name]
    return classical(parse_permutation(name))


def occurrence_matches(host: Perm, spec: PatternSpec, indices: tuple[int, ...]) -> bool:
    """Check that the 1-based indices are a valid occurrence of spec."""
    m = len(spec.pattern)
    n = len(host)
    if len(indices) != m:
        return False
    if any(not 1 <= i <= n for i in indices):
        return False
    if any(a >= b for a, b in zip(indices, indices[1:])):
        return False
    values = [host[i - 1] for i in indices]
    for a in range(m):
        for b in range(a + 1, m):
            if (values[a] < values[b]) != (spec.pattern[a] < spec.pattern[b]):
                return False
    for pos, anchor, value in zip(indices, spec.anchors, values):
        if anchor is Anchor.VALUE_MAX and value != n:
            return False
        if anchor is Anchor.VALUE_MIN and value != 1:
            return False
        if anchor is Anchor.POS_FIRST and pos != 1:
            return False
        if anchor is Anchor.POS_LAST and pos != n:
            return False
    return True


def find_occurrence(host: Perm, spec: PatternSpec) -> Optional[tuple[int, ...]]:
    """
    The lexicographically least occurrence of spec in host, as a tuple of
    1-based indices, or None when host avoids the spec.
    """
    patt = spec.pattern
    m = len(patt)
    n = len(host)
    if m == 0:
        return ()
    if m > n:
        return None

    # Precompute the candidate positions each anchored letter may occupy.
    fixed: list[Optional[int]] = [None] * m
    for i, anchor in enumerate(spec.anchors):
        if anchor is Anchor.VALUE_MAX:
            fixed[i] = host.index(n)
        elif anchor is Anchor.VALUE_MIN:
            fixed[i] = host.index(1)
        elif anchor is Anchor.POS_FIRST:
            fixed[i] = 0
        elif anchor is Anchor.POS_LAST:
            fixed[i] = n - 1

    chosen: list[int] = []

    def fits(letter: int, pos: int) -> bool:
        v = host[pos]
        for prev_letter, prev_pos in enumerate(chosen):
            if (host[prev_pos] < v) != (patt[prev_letter] < patt[letter]):
                return False
        return True

    def search(letter: int, start: int) -> Optional[tuple[int, ...]]:
        if letter == m:
            return tuple(pos + 1 for pos in chosen)
        if fixed[letter] is not None:
            pos = fixed[letter]
            if pos < start or pos > n - (m - letter):
                return None
            if not fits(letter, pos):
                return None
            chosen.append(pos)
            found = search(letter + 1, pos + 1)
            chosen.pop()
            return found
        for pos in range(start, n - (m - letter) + 1):
            if not fits(letter, pos):
                continue
            chosen.append(pos)
            found = search(letter + 1, pos + 1)
            chosen.pop()
            if found is not None:
                return found
        return None

    return search(0, 0)


def avoids(host: Perm, specs: Iterable[PatternSpec]) -> bool:
    """True when host contains no occurrence of any spec."""
    return all(find_occurrence(host, spec) is None for spec in specs)
