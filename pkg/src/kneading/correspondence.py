"""The bijection between kneading sequences and Zagier-reduced forms.

Sequences with alternant ``a`` and length parity ``s`` correspond to the
reduced forms of discriminant ``a^2 + (-1)^s * 4``, and kneading a sequence
corresponds to a reduction step on its form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .continuants import alternant, cf_expand, continuant_matrix
from .errors import DiscriminantMismatch, ExcludedSpec, NotReduced
from .forms import QForm, discriminant, is_square, is_zagier_reduced
from .sequences import Seq, as_sequence
from math import isqrt

EXCLUDED = frozenset({(1, 1), (2, 1)})


@dataclass(frozen=True, order=True)
class DiscSpec:
    """Alternant ``a`` and length parity ``s``, naming ``D = a^2 + (-1)^s 4``."""

    a: int
    s: int

    def __post_init__(self):
        if self.a < 1 or self.s not in (0, 1):
            raise ValueError(f"invalid spec (a={self.a}, s={self.s})")
        if (self.a, self.s) in EXCLUDED:
            raise ExcludedSpec(f"({self.a},{self.s}) has discriminant {self.D}")

    @property
    def D(self) -> int:
        return self.a * self.a + (4 if self.s == 0 else -4)

    def __str__(self) -> str:
        return f"(a={self.a}, s={self.s})"


def psi(f: Iterable[int], spec: DiscSpec) -> Seq:
    """Sequence attached to the reduced form ``f`` under ``spec``.

    >>> psi((44, 114, 17), DiscSpec(100, 0))
    (2, 2, 3, 6)
    """
    A, B, C = f
    if discriminant((A, B, C)) != spec.D:
        raise DiscriminantMismatch(
            f"disc{(A, B, C)} = {discriminant((A, B, C))}, spec {spec} needs {spec.D}"
        )
    if not is_zagier_reduced((A, B, C)):
        raise NotReduced(f"{(A, B, C)} is not Zagier-reduced")
    return cf_expand((spec.a + B) // 2, A, spec.s)


def phi(seq: Iterable[int]) -> QForm:
    """Reduced form attached to a sequence.

    ``([q2..ql], [q1..ql] + [q2..q(l-1)], [q1..q(l-1)])``, which for a single
    entry is ``(1, q1, 1)``.
    """
    seq = as_sequence(seq)
    spec_of_sequence(seq)
    (p, q), (r, s) = continuant_matrix(seq)
    f = QForm(r, p + s, q)
    assert is_zagier_reduced(f), f
    assert f.discriminant == (p - s) ** 2 + (4 if len(seq) % 2 == 0 else -4), f
    return f


def spec_of_sequence(seq: Iterable[int]) -> DiscSpec:
    seq = as_sequence(seq)
    return DiscSpec(alternant(seq), len(seq) % 2)


def specs_of_discriminant(D: int) -> list[DiscSpec]:
    """Every spec whose discriminant is ``D``; D = 5 has two."""
    out = []
    if D - 4 > 0 and is_square(D - 4):
        out.append(DiscSpec(isqrt(D - 4), 0))
    if is_square(D + 4) and (isqrt(D + 4), 1) not in EXCLUDED:
        out.append(DiscSpec(isqrt(D + 4), 1))
    return out
