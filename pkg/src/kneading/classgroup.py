"""Form classes, Dirichlet composition and the named classes of discriminants a^2 +- 4.

Two reduced forms are equivalent exactly when they share a reduction cycle,
so a class is stored as the canonical member of its cycle (smallest B, then
smallest A).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable

from .correspondence import DiscSpec, psi
from .errors import DiscriminantMismatch, KneadingError, NotPrimitive, ZeroForm
from .forms import (
    QForm,
    canonical_form,
    cycle_key,
    reduce_to_reduced,
    reduction_cycle,
    reduction_cycles,
)


def content(f: Iterable[int]) -> int:
    A, B, C = f
    g = gcd(gcd(A, B), C)
    if g == 0:
        raise ZeroForm("the zero form has no content")
    return g


def is_primitive(f: Iterable[int]) -> bool:
    return content(f) == 1


def primitive_part(f: Iterable[int]) -> tuple[int, QForm]:
    """``(d, g)`` with ``f = d * g`` and ``g`` primitive."""
    A, B, C = f
    d = content((A, B, C))
    return d, QForm(A // d, B // d, C // d)


@dataclass(frozen=True)
class FormClass:
    representative: QForm
    discriminant: int

    def __str__(self) -> str:
        return str(self.representative)

    @cached_property
    def cycle(self) -> list[QForm]:
        return reduction_cycle(self.representative)

    @property
    def caliber(self) -> int:
        return len(self.cycle)

    @property
    def content(self) -> int:
        return content(self.representative)

    def inverse(self) -> "FormClass":
        return class_of(self.representative.opposite())

    def sum(self, spec: DiscSpec) -> int:
        """Sum invariant: the entry sum of the sequence of any member."""
        return sum(psi(self.representative, spec))


def class_of(f: Iterable[int]) -> FormClass:
    """The class of any form of positive nonsquare discriminant."""
    g, _ = reduce_to_reduced(f)
    return FormClass(canonical_form(reduction_cycle(g)), g.discriminant)


def equivalent(f: Iterable[int], g: Iterable[int]) -> bool:
    f, g = QForm(*f), QForm(*g)
    if f.discriminant != g.discriminant:
        raise DiscriminantMismatch(f"{f} and {g} have different discriminants")
    rf, _ = reduce_to_reduced(f)
    rg, _ = reduce_to_reduced(g)
    return rg in reduction_cycle(rf)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def compose_forms(f: Iterable[int], g: Iterable[int]) -> QForm:
    """Dirichlet composition of two primitive forms with ``A > 0``.

    With ``e = gcd(a1, a2, (b1 + b2)/2) = u a1 + v a2 + w (b1 + b2)/2`` the
    composite has first coefficient ``a1 a2 / e^2`` and middle coefficient
    ``(u a1 b2 + v a2 b1 + w (b1 b2 + D)/2) / e``, reduced mod ``2 a1 a2 / e^2``.
    """
    a1, b1, c1 = f
    a2, b2, c2 = g
    D = b1 * b1 - 4 * a1 * c1
    if b2 * b2 - 4 * a2 * c2 != D:
        raise DiscriminantMismatch(f"{f} and {g} have different discriminants")
    if content(f) != 1 or content(g) != 1:
        raise NotPrimitive("composition is defined on primitive forms")
    if a1 <= 0 or a2 <= 0:
        raise KneadingError("compose_forms expects positive first coefficients")
    h = (b1 + b2) // 2
    e1, u1, v1 = _xgcd(a1, a2)
    e, s, w = _xgcd(e1, h)
    u, v = s * u1, s * v1
    A = a1 * a2 // (e * e)
    B = (u * a1 * b2 + v * a2 * b1 + w * (b1 * b2 + D) // 2) // e
    B %= 2 * A
    num = B * B - D
    if num % (4 * A):
        raise AssertionError(f"composition of {f} and {g} failed")  # pragma: no cover
    return QForm(A, B, num // (4 * A))


def compose(c1: FormClass, c2: FormClass) -> FormClass:
    if c1.discriminant != c2.discriminant:
        raise DiscriminantMismatch("classes have different discriminants")
    return class_of(compose_forms(c1.representative, c2.representative))


def power(c: FormClass, k: int) -> FormClass:
    out = principal_class_of_discriminant(c.discriminant)
    for _ in range(k):
        out = compose(out, c)
    return out


def principal_class(spec: DiscSpec) -> FormClass:
    a = spec.a
    if spec.s == 0:
        return class_of(QForm(1, a + 2, a))
    return class_of(QForm(1, a, 1))


def principal_class_of_discriminant(D: int) -> FormClass:
    """Class of the form ``(1, b, (b^2 - D)/4)`` with ``b = D mod 2``."""
    b = D % 2
    return class_of(QForm(1, b, (b * b - D) // 4))


def c_class(a: int) -> FormClass:
    """Class of ``(a-2, 3a-6, 2a-5)``, of order two and caliber ``a - 2``.

    ``a = 3`` is allowed and gives the principal class of discriminant 5.
    """
    if a < 3:
        raise KneadingError(f"c_class needs a >= 3, got {a}")
    return class_of(QForm(a - 2, 3 * a - 6, 2 * a - 5))


def c_tilde_class(k: int) -> FormClass:
    """Class of ``(2k-1, 2k^2+1, k^2-k+1)``, a square root of ``c_class(2k^2-2k+3)``."""
    if k < 3 or k % 3 == 2:
        raise KneadingError(f"c_tilde_class needs k >= 3 and k != 2 mod 3, got {k}")
    return class_of(QForm(2 * k - 1, 2 * k * k + 1, k * k - k + 1))


def class_list(D: int) -> list[FormClass]:
    """One class per cycle of primitive reduced forms, sorted by representative."""
    return [
        FormClass(cyc[0], D) for cyc in reduction_cycles(D) if content(cyc[0]) == 1
    ]


def all_classes(D: int) -> list[FormClass]:
    """Like :func:`class_list` but including imprimitive cycles."""
    return [FormClass(cyc[0], D) for cyc in reduction_cycles(D)]


def class_sort_key(c: FormClass) -> tuple[int, int, int]:
    return cycle_key(c.representative)
