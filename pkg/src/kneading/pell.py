"""Solving ``x^2 - D y^2 = 4`` and reducing arbitrary-discriminant forms by kneading.

If ``(x, y)`` solves the equation then ``y*f`` has discriminant ``x^2 - 4``,
so it corresponds to a sequence of alternant ``x`` and odd length.  Scaling
by ``y`` does not change the reducing number, hence kneading that sequence
and dividing the resulting form by ``y`` performs one reduction step on
``f``.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, Iterator, NamedTuple

from .correspondence import DiscSpec, phi, psi
from .errors import InternalInconsistency, NotReduced, SquareDiscriminant, NonpositiveDiscriminant
from .forms import QForm, is_square, is_zagier_reduced
from .sequences import knead


class PellSolution(NamedTuple):
    x: int
    y: int


def _check(D: int) -> None:
    if D <= 0:
        raise NonpositiveDiscriminant(f"D = {D} must be positive")
    if is_square(D):
        raise SquareDiscriminant(f"D = {D} is a perfect square")


def surd_expansion(P: int, Q: int, D: int) -> Iterator[int]:
    """Partial quotients of ``(P + sqrt(D)) / Q``; needs ``Q | D - P^2``.

    Uses the integer recurrence ``a = floor((P + sqrt D)/Q)``,
    ``P' = aQ - P``, ``Q' = (D - P'^2)/Q``.  The stream is infinite.
    """
    if (D - P * P) % Q:
        raise ValueError("Q must divide D - P^2")
    root = isqrt(D)
    while True:
        # floor((P + sqrt D)/Q) == floor((P + root)/Q) for nonsquare D, Q > 0;
        # for Q < 0 shift by one since the quotient is irrational
        a = (P + root) // Q if Q > 0 else (P + root + 1) // Q
        yield a
        P = a * Q - P
        Q = (D - P * P) // Q


def sqrt_period(D: int) -> list[int]:
    """``[a0; a1, ..., ak]``: the leading term and one period of ``sqrt(D)``."""
    _check(D)
    a0 = isqrt(D)
    out = [a0]
    P, Q, a = 0, 1, a0
    while a != 2 * a0:
        P = a * Q - P
        Q = (D - P * P) // Q
        a = (a0 + P) // Q
        out.append(a)
    return out


def pell4(D: int) -> PellSolution:
    """Smallest positive solution of ``x^2 - D y^2 = 4``.

    For ``D = 0, 1 (mod 4)`` this expands ``w = (s + sqrt D)/2`` with
    ``s = D mod 2`` until a convergent ``p/q`` of norm ``+-1`` appears; then
    ``(2p - s q, q)`` solves ``x^2 - D y^2 = +-4`` and a norm ``-4`` solution
    is squared.  For ``D = 2, 3 (mod 4)`` any solution has ``x, y`` even, so
    the same method is applied to ``4D`` and ``y`` doubled.

    >>> pell4(8)
    PellSolution(x=6, y=2)
    >>> pell4(5)
    PellSolution(x=3, y=1)
    """
    _check(D)
    if D % 4 in (2, 3):
        x, y = pell4(4 * D)
        return PellSolution(x, 2 * y)
    s = D % 2
    p0, q0, p1, q1 = 1, 0, 0, 1
    for a in surd_expansion(s, 2, D):
        p0, p1 = a * p0 + p1, p0
        q0, q1 = a * q0 + q1, q0
        x, y = 2 * p0 - s * q0, q0
        norm = x * x - D * y * y
        if norm == 4:
            return PellSolution(x, y)
        if norm == -4:
            return PellSolution((x * x + D * y * y) // 2, x * y)
    raise AssertionError("unreachable")  # pragma: no cover


def pell4_bruteforce(D: int, y_max: int = 10**5) -> PellSolution | None:
    """Smallest solution with ``y <= y_max`` by direct search; test oracle."""
    for y in range(1, y_max + 1):
        t = D * y * y + 4
        x = isqrt(t)
        if x * x == t:
            return PellSolution(x, y)
    return None


def reduce_via_kneading(f: Iterable[int]) -> QForm:
    """One Zagier reduction step on ``f``, computed by kneading.

    >>> reduce_via_kneading((1, 4, 2))
    QForm(A=2, B=4, C=1)
    """
    f = QForm(*f)
    D = f.discriminant
    _check(D)
    if not is_zagier_reduced(f):
        raise NotReduced(f"{f} is not Zagier-reduced")
    x, y = pell4(D)
    seq = psi(f.scale(y), DiscSpec(x, 1))
    g = phi(knead(seq))
    if any(c % y for c in g):
        raise InternalInconsistency(f"{g} is not divisible by {y}")
    return QForm(g.A // y, g.B // y, g.C // y)
