"""Shallowness deciders, the size-reducing right/left operators, and the
constructive generator.

A permutation is shallow when it meets the lower Diaconis-Graham bound,
i.e. its inversion number plus its reflection length equals its total
displacement. The recursive characterization used throughout works by
removing the largest value: write n's trailing companion into n's slot,
drop the last entry, and require the relocated value to be a left-to-right
maximum or right-to-left minimum of the smaller word. Running that rule
until nothing is left yields a replayable certificate; running it backwards
generates every shallow permutation of the next size exactly once.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .perms import (
    Perm,
    cycle_count,
    inversion_count,
    lr_max_flags,
    reduce_word,
    rl_min_flags,
    total_displacement,
)


class SizeTooSmall(ValueError):
    """The reducing operators need at least two entries."""


class IllegalSlot(ValueError):
    """The requested extension slot is neither kind of extreme entry."""


def is_shallow(p: Perm) -> bool:
    """True when inversions plus reflection length meet the displacement."""
    return (
        inversion_count(p) + len(p) - cycle_count(p) == total_displacement(p)
    )


def achieves_upper_bound(p: Perm) -> bool:
    """True when the displacement equals twice the inversion number."""
    return total_displacement(p) == 2 * inversion_count(p)


def r_operator(p: Perm) -> Perm:
    """
    Remove the largest value from the right end of the word.

    If p ends with its maximum, drop it; otherwise overwrite the maximum
    with the last entry and drop the last entry. The result is one shorter.

    >>> r_operator((4, 2, 1, 6, 3, 5))
    (4, 2, 1, 5, 3)
    """
    n = len(p)
    if n < 2:
        raise SizeTooSmall("need at least 2 entries")
    if p[-1] == n:
        return p[:-1]
    j = p.index(n)
    return p[:j] + (p[-1],) + p[j + 1:-1]


def l_operator(p: Perm) -> Perm:
    """
    The mirror reduction acting on the left end and the value 1.

    If p starts with 1, drop it and renumber; otherwise overwrite the 1
    with the first entry, drop the first entry, and renumber.

    >>> l_operator((4, 2, 1, 6, 3, 5))
    (1, 3, 5, 2, 4)
    """
    n = len(p)
    if n < 2:
        raise SizeTooSmall("need at least 2 entries")
    if p[0] == 1:
        return reduce_word(p[1:])
    j = p.index(1)
    return reduce_word(p[1:j] + (p[0],) + p[j + 1:])


class StepKind(Enum):
    APPENDED_MAX = "appended_max"
    LEFT_TO_RIGHT_MAX = "left_to_right_max"
    RIGHT_TO_LEFT_MIN = "right_to_left_min"
    VIOLATION = "violation"


@dataclass(frozen=True)
class ReductionStep:
    """One application of the right operator.

    position_of_max is the 1-based slot of the largest value before the
    step; moved_value is the entry relocated into that slot, or None when
    the maximum was simply dropped from the end.
    """

    position_of_max: int
    moved_value: int | None
    classification: StepKind


@dataclass(frozen=True)
class ShallowCertificate:
    """A replayable trace of right-operator reductions down to size <= 1."""

    subject: Perm
    steps: tuple[ReductionStep, ...]
    verdict: bool


def certify_shallow(p: Perm) -> ShallowCertificate:
    """
    Reduce p step by step, classifying each relocated entry.

    The verdict is True exactly when no step moves an entry that is
    neither a left-to-right maximum nor a right-to-left minimum of the
    reduced word. Sizes 0 and 1 are shallow with an empty trace. When a
    relocated entry is both kinds of extreme, it is recorded as a
    left-to-right maximum so traces are deterministic.

    >>> certify_shallow((3, 4, 1, 2)).verdict
    False
    """
    steps: list[ReductionStep] = []
    verdict = True
    current = p
    while len(current) >= 2:
        m = len(current)
        if current[-1] == m:
            steps.append(ReductionStep(m, None, StepKind.APPENDED_MAX))
            current = current[:-1]
            continue
        j = current.index(m)
        moved = current[-1]
        current = current[:j] + (moved,) + current[j + 1:-1]
        if lr_max_flags(current)[j]:
            kind = StepKind.LEFT_TO_RIGHT_MAX
        elif rl_min_flags(current)[j]:
            kind = StepKind.RIGHT_TO_LEFT_MIN
        else:
            kind = StepKind.VIOLATION
            verdict = False
        steps.append(ReductionStep(j + 1, moved, kind))
    return ShallowCertificate(subject=p, steps=tuple(steps), verdict=verdict)


def extend_right(t: Perm, position: int | None = None) -> Perm:
    """
    Invert one right-operator step: the unique word one size larger whose
    reduction is t.

    With position=None the new maximum is appended. Otherwise the entry at
    the 1-based position (which must be a left-to-right maximum or a
    right-to-left minimum of t) is overwritten with the new maximum and
    sent to the end.

    >>> extend_right((4, 2, 1, 5, 3), 4)
    (4, 2, 1, 6, 3, 5)
    """
    m = len(t) + 1
    if position is None:
        return t + (m,)
    if not 1 <= position <= len(t):
        raise IllegalSlot(f"position {position} outside 1..{len(t)}")
    i = position - 1
    if not (lr_max_flags(t)[i] or rl_min_flags(t)[i]):
        v = t[i]
        larger_before = max(t[:i])
        smaller_after = min(t[i + 1:])
        raise IllegalSlot(
            f"entry {v} at position {position} is neither a left-to-right "
            f"maximum ({larger_before} precedes it) nor a right-to-left "
            f"minimum ({smaller_after} follows it)"
        )
    return t[:i] + (m,) + t[i + 1:] + (t[i],)


def replay_certificate(cert: ShallowCertificate) -> Perm:
    """
    Rebuild the certificate's subject by undoing its steps in reverse.

    Legal steps are replayed through extend_right; violation steps use the
    same construction with the slot check skipped. Raises ValueError if a
    step's recorded moved value disagrees with the reconstruction.
    """
    size = len(cert.subject) - len(cert.steps)
    current: Perm = (1,) if size == 1 else ()
    for step in reversed(cert.steps):
        if step.classification is StepKind.APPENDED_MAX:
            current = extend_right(current)
            continue
        i = step.position_of_max - 1
        if current[i] != step.moved_value:
            raise ValueError(
                f"certificate step expects {step.moved_value} at position "
                f"{step.position_of_max}, found {current[i]}"
            )
        if step.classification is StepKind.VIOLATION:
            m = len(current) + 1
            current = current[:i] + (m,) + current[i + 1:] + (current[i],)
        else:
            current = extend_right(current, step.position_of_max)
    return current


def _children(t: Perm) -> Iterator[Perm]:
    """All words one size larger that reduce to t, each exactly once."""
    m = len(t) + 1
    yield t + (m,)
    lr = lr_max_flags(t)
    rl = rl_min_flags(t)
    for i in range(len(t)):
        if lr[i] or rl[i]:
            yield t[:i] + (m,) + t[i + 1:] + (t[i],)


def generate_shallow(n: int) -> Iterator[Perm]:
    """
    Yield every shallow permutation of size n exactly once.

    Grows level by level from the singleton word, keeping only the parents
    of the previous size in memory. Children of distinct (parent, slot)
    pairs are distinct because each child reduces back to its parent, so
    no deduplication is needed.
    """
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n == 0:
        yield ()
        return
    if n == 1:
        yield (1,)
        return
    level: list[Perm] = [(1,)]
    for _ in range(n - 2):
        level = [child for parent in level for child in _children(parent)]
    for parent in level:
        yield from _children(parent)


def wrap_n1(p: Perm) -> Perm:
    """
    Prepend the new maximum and append 1 around a lifted copy of p.

    The result is shallow exactly when p is.

    >>> wrap_n1((1, 2))
    (4, 2, 3, 1)
    """
    n = len(p) + 2
    return (n,) + tuple(v + 1 for v in p) + (1,)
