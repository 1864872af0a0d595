"""Continuants, alternants and finite continued-fraction expansions.

All arithmetic uses Python integers, so values never overflow; continuants
of sequences with sum n grow like the Fibonacci number F(n+1).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import ImproperFraction, NoSuchExpansion, NotCoprime, KneadingError
from .sequences import Seq, as_sequence


def continuant(seq: Iterable[int]) -> int:
    """Continuant ``[q1, ..., ql]`` with ``[] = 1``.

    Evaluated by ``[q1..ql] = q1*[q2..ql] + [q3..ql]``.  Zero entries are
    accepted (the zero-merging identities are stated for them); no other
    validation is done.
    """
    cur, nxt = 1, 0
    for q in reversed(tuple(seq)):
        cur, nxt = q * cur + nxt, cur
    return cur


def continuant_matrix(seq: Iterable[int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Product of the matrices ``[[q, 1], [1, 0]]`` over ``seq``.

    Equals ``[[ [q1..ql], [q1..q(l-1)] ], [ [q2..ql], [q2..q(l-1)] ]]``.
    """
    p, q, r, s = 1, 0, 0, 1
    for x in seq:
        p, q, r, s = p * x + q, p, r * x + s, r
    return (p, q), (r, s)


def alternant(seq: Iterable[int]) -> int:
    """``[q1..ql] - [q2..q(l-1)]``, with ``q1`` for l=1 and ``q1*q2`` for l=2."""
    seq = as_sequence(seq)
    if len(seq) == 1:
        return seq[0]
    if len(seq) == 2:
        return seq[0] * seq[1]
    return continuant(seq) - continuant(seq[1:-1])


def euclid_quotients(num: int, den: int) -> list[int]:
    out = []
    while den:
        quo, rem = divmod(num, den)
        out.append(quo)
        num, den = den, rem
    return out


def cf_expand(num: int, den: int, parity: int) -> Seq:
    """Continued-fraction quotients of ``num/den`` with length parity ``parity``.

    Every rational greater than 1 has exactly two expansions, differing by a
    pinch of the right end; this returns the one of the requested parity.

    >>> cf_expand(107, 44, 0)
    (2, 2, 3, 6)
    >>> cf_expand(17, 5, 0)
    (3, 2, 1, 1)
    """
    if parity not in (0, 1):
        raise KneadingError(f"parity must be 0 or 1, got {parity}")
    if num < 1 or den < 1:
        raise ImproperFraction(f"{num}/{den} must have positive terms")
    if gcd(num, den) != 1:
        raise NotCoprime(f"gcd({num}, {den}) != 1")
    if num <= den and den > 1:
        raise ImproperFraction(f"{num}/{den} is not greater than 1")
    quotients = euclid_quotients(num, den)
    if len(quotients) % 2 == parity:
        return tuple(quotients)
    if quotients == [1]:
        raise NoSuchExpansion("1/1 only expands as (1), which has odd length")
    # canonical expansion ends in a quotient >= 2 here
    quotients[-1] -= 1
    quotients.append(1)
    return tuple(quotients)


def cf_value(seq: Sequence[int]) -> Fraction:
    """Exact value of the continued fraction with quotients ``seq``."""
    value = Fraction(seq[-1])
    for q in reversed(seq[:-1]):
        value = q + 1 / value
    return value
