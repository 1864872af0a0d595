"""Indefinite binary quadratic forms and Zagier reduction.

A form ``A x^2 + B xy + C y^2`` is a :class:`QForm` triple.  Zagier calls a
form reduced when ``A > 0``, ``C > 0`` and ``B > A + C``.  A reduction step
acts by ``[[n, 1], [-1, 0]]`` where ``n`` is the reducing number, the unique
integer with ``n - 1 < (B + sqrt(D)) / (2A) < n``.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, NamedTuple, Sequence

from sympy import divisors

from .errors import (
    KneadingError,
    NonpositiveDiscriminant,
    NotReduced,
    NotUnimodular,
    SquareDiscriminant,
    StepLimitExceeded,
)

MAX_REDUCTION_STEPS = 10**6


class QForm(NamedTuple):
    A: int
    B: int
    C: int

    def __str__(self) -> str:
        return f"({self.A},{self.B},{self.C})"

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def scale(self, k: int) -> "QForm":
        return QForm(k * self.A, k * self.B, k * self.C)

    def opposite(self) -> "QForm":
        """The form with A and C swapped; its class is the inverse class."""
        return QForm(self.C, self.B, self.A)


Matrix = Sequence[Sequence[int]]

IDENTITY = ((1, 0), (0, 1))


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def discriminant(f: Iterable[int]) -> int:
    A, B, C = f
    return B * B - 4 * A * C


def _check_matrix(M: Matrix) -> tuple[int, int, int, int]:
    (al, be), (ga, de) = M
    if al * de - be * ga != 1:
        raise NotUnimodular(f"det {M} = {al * de - be * ga}, expected 1")
    return al, be, ga, de


def sl2_act(f: Iterable[int], M: Matrix) -> QForm:
    """Right action ``f(x, y) -> f(alpha x + beta y, gamma x + delta y)``."""
    A, B, C = f
    al, be, ga, de = _check_matrix(M)
    return QForm(
        A * al * al + B * al * ga + C * ga * ga,
        2 * A * al * be + B * (al * de + be * ga) + 2 * C * ga * de,
        A * be * be + B * be * de + C * de * de,
    )


def matmul(M: Matrix, N: Matrix) -> tuple[tuple[int, int], tuple[int, int]]:
    (a, b), (c, d) = M
    (e, f), (g, h) = N
    return (a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)


def is_zagier_reduced(f: Iterable[int]) -> bool:
    A, B, C = f
    return A > 0 and C > 0 and B > A + C


def _check_discriminant(D: int) -> None:
    if D <= 0:
        raise NonpositiveDiscriminant(f"discriminant {D} is not positive")
    if is_square(D):
        raise SquareDiscriminant(f"discriminant {D} is a perfect square")


def _reducing_number(A: int, B: int, root: int) -> int:
    # root = isqrt(D) with D nonsquare, so (B + sqrt D)/(2A) is irrational and
    # floor((B + sqrt D) / 2|A|) == floor((B + root) / 2|A|).
    if A > 0:
        return (B + root) // (2 * A) + 1
    return -((B + root) // (-2 * A))


def reducing_number(f: Iterable[int]) -> int:
    """Reducing number of a Zagier-reduced form, computed without floats.

    >>> reducing_number((44, 114, 17))
    3
    """
    f = QForm(*f)
    D = f.discriminant
    _check_discriminant(D)
    if not is_zagier_reduced(f):
        raise NotReduced(f"{f} is not Zagier-reduced")
    return _reducing_number(f.A, f.B, isqrt(D))


def _step(f: QForm, n: int) -> QForm:
    A, B, C = f
    return QForm(A * n * n - B * n + C, 2 * A * n - B, A)


def reduce_step(f: Iterable[int]) -> QForm:
    f = QForm(*f)
    return _step(f, reducing_number(f))


def reduce_to_reduced(
    f: Iterable[int], max_steps: int = MAX_REDUCTION_STEPS
) -> tuple[QForm, int]:
    """Iterate reduction steps until a Zagier-reduced form appears.

    Returns the reduced form and the number of steps taken.
    """
    f = QForm(*f)
    D = f.discriminant
    _check_discriminant(D)
    root = isqrt(D)
    steps = 0
    while not is_zagier_reduced(f):
        if steps >= max_steps:
            raise StepLimitExceeded(f"no reduced form after {max_steps} steps")
        f = _step(f, _reducing_number(f.A, f.B, root))
        steps += 1
    return f, steps


def reduction_cycle(f: Iterable[int]) -> list[QForm]:
    """The closed orbit of a reduced form under :func:`reduce_step`."""
    start = QForm(*f)
    D = start.discriminant
    _check_discriminant(D)
    if not is_zagier_reduced(start):
        raise NotReduced(f"{start} is not Zagier-reduced")
    root = isqrt(D)
    cycle = [start]
    cur = _step(start, _reducing_number(start.A, start.B, root))
    while cur != start:
        cycle.append(cur)
        cur = _step(cur, _reducing_number(cur.A, cur.B, root))
    return cycle


def cycle_key(f: QForm) -> tuple[int, int, int]:
    return (f.B, f.A, f.C)


def canonical_form(cycle: Iterable[QForm]) -> QForm:
    """Member with the smallest middle coefficient, ties by smallest A."""
    return min(cycle, key=cycle_key)


def enumerate_reduced(D: int) -> list[QForm]:
    """All Zagier-reduced forms of discriminant ``D``, sorted.

    With ``x = B - 2A`` and ``u = B - A - C`` every reduced form satisfies
    ``D = x^2 + 4Au`` with ``x^2 < D`` and ``u >= 1``, so it is found by
    running over ``x`` and the divisors ``A`` of ``(D - x^2)/4``.
    """
    _check_discriminant(D)
    if D % 4 not in (0, 1):
        return []
    root = isqrt(D)
    out = []
    for x in range(-root, root + 1):
        if (x - D) % 2:
            continue
        N = (D - x * x) // 4
        for A in divisors(N):
            u = N // A
            C = x + A - u
            if C >= 1:
                out.append(QForm(A, x + 2 * A, C))
    out.sort()
    return out


def enumerate_reduced_bruteforce(D: int) -> list[QForm]:
    """Search every (A, B) with A <= D/4 and A < B <= 2A + sqrt(D); test oracle."""
    out = []
    root = isqrt(D)
    for A in range(1, D // 4 + 1):
        for B in range(A + 1, 2 * A + root + 1):
            num = B * B - D
            if num <= 0 or num % (4 * A):
                continue
            f = QForm(A, B, num // (4 * A))
            if is_zagier_reduced(f):
                out.append(f)
    out.sort()
    return out


def reduction_cycles(D: int) -> list[list[QForm]]:
    """Partition the reduced forms of ``D`` into reduction cycles.

    Each cycle is rotated to start at its canonical form; cycles are sorted
    by canonical form.
    """
    seen = set()
    cycles = []
    for f in enumerate_reduced(D):
        if f in seen:
            continue
        cyc = reduction_cycle(f)
        seen.update(cyc)
        i = cyc.index(canonical_form(cyc))
        cycles.append(cyc[i:] + cyc[:i])
    cycles.sort(key=lambda c: cycle_key(c[0]))
    return cycles


def parse_form(text: str) -> QForm:
    """Parse ``"A,B,C"`` with optional parentheses."""
    body = text.strip().strip("()[]")
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError as exc:
        raise KneadingError(f"cannot parse form {text!r}") from exc
    if len(parts) != 3:
        raise KneadingError(f"a form needs three coefficients, got {text!r}")
    return QForm(*parts)


def format_form(f: Iterable[int]) -> str:
    return ",".join(str(c) for c in f)
