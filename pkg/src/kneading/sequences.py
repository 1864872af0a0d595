"""Pinching and kneading of finite sequences of positive integers.

Sequences are plain tuples of ``int``.  Every public function accepts any
iterable of integers and returns a tuple.

    >>> knead((2, 2, 3, 6))
    (1, 1, 3, 5, 1, 2)
    >>> unknead(_)
    (2, 2, 3, 6)
"""

from __future__ import annotations

from typing import Iterable, Tuple

from .errors import EmptySequence, KneadingError

Seq = Tuple[int, ...]


def as_sequence(seq: Iterable[int]) -> Seq:
    """Validate ``seq`` as a nonempty sequence of positive integers."""
    seq = tuple(int(q) for q in seq)
    if not seq:
        raise EmptySequence("sequence must be nonempty")
    if min(seq) < 1:
        raise KneadingError(f"entries must be positive integers: {seq}")
    return seq


def pinch_left(seq: Iterable[int]) -> Seq:
    seq = tuple(seq)
    if not seq or seq == (1,):
        return seq
    x = seq[0]
    if x >= 2:
        return (1, x - 1) + seq[1:]
    return (seq[1] + 1,) + seq[2:]


def pinch_right(seq: Iterable[int]) -> Seq:
    seq = tuple(seq)
    if not seq or seq == (1,):
        return seq
    x = seq[-1]
    if x >= 2:
        return seq[:-1] + (x - 1, 1)
    return seq[:-2] + (seq[-2] + 1,)


def _knead(seq: Seq) -> Seq:
    return pinch_right(pinch_left(seq[1:])) + seq[:1]


def _unknead(seq: Seq) -> Seq:
    return seq[-1:] + pinch_right(pinch_left(seq[:-1]))


def knead(seq: Iterable[int]) -> Seq:
    """Remove the head, pinch both ends of the rest, and append the head."""
    return _knead(as_sequence(seq))


def unknead(seq: Iterable[int]) -> Seq:
    """Inverse of :func:`knead`."""
    return _unknead(as_sequence(seq))


def kneading_cycle(seq: Iterable[int]) -> list[Seq]:
    """Orbit of ``seq`` under kneading, starting at ``seq``.

    The list stops one step before ``seq`` recurs, so its length is the
    caliber of the cycle.
    """
    start = as_sequence(seq)
    orbit = [start]
    cur = _knead(start)
    while cur != start:
        orbit.append(cur)
        cur = _knead(cur)
    return orbit


def cycle_representative(seq: Iterable[int]) -> Seq:
    """Lexicographically smallest member of the kneading cycle of ``seq``."""
    return min(kneading_cycle(seq))


def seq_sum(seq: Iterable[int]) -> int:
    return sum(as_sequence(seq))


def length_parity(seq: Iterable[int]) -> int:
    return len(as_sequence(seq)) % 2


def parse_sequence(text: str) -> Seq:
    """Parse ``"2,2,3,6"`` (surrounding parentheses allowed)."""
    body = text.strip().strip("()[]")
    try:
        return as_sequence(int(tok) for tok in body.split(","))
    except ValueError as exc:
        if isinstance(exc, KneadingError):
            raise
        raise KneadingError(f"cannot parse sequence {text!r}") from exc


def format_sequence(seq: Iterable[int]) -> str:
    return ",".join(str(q) for q in seq)
