"""Checks of the sum-invariant lemmas and conjectures over exhaustive ranges.

Every verifier returns a :class:`Report`; an empty ``violations`` list means
the statement held over the whole range.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from sympy import divisors, factorint

from ..classgroup import all_classes, c_class, class_list, compose, principal_class
from ..correspondence import DiscSpec
from .engine import CensusColumns, run_census
from .records import CycleRecord, records_from_columns


@dataclass
class Report:
    conjecture: str
    range: dict
    violations: list = field(default_factory=list)
    observations: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "range": self.range,
            "violations": self.violations,
            "observations": self.observations,
            "elapsed": round(self.elapsed, 3),
        }


@lru_cache(maxsize=64)
def census_columns(n: int, parity: int | None = 0, workers: int = 1) -> CensusColumns:
    return run_census(n, parity, workers)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius needs n >= 1, got {n}")
    exps = factorint(n).values()
    if any(e > 1 for e in exps):
        return 0
    return -1 if len(exps) % 2 else 1


def predicted_cycle_count(l: int) -> int:
    """``(1/2l) * sum over odd d | l of mu(d) 2^(l/d)``."""
    if l < 1:
        raise ValueError(f"caliber must be positive, got {l}")
    total = sum(mobius(d) * 2 ** (l // d) for d in divisors(l) if d % 2)
    q, rem = divmod(total, 2 * l)
    if rem:
        raise ArithmeticError(f"predicted count for l={l} is not an integer")
    return q


def _is_admissible(n: int, l: int) -> bool:
    return (n - 1) % l == 0 and ((n - 1) // l) % 2 == 1


def verify_divisor_conjecture(n_max: int, workers: int = 1) -> Report:
    """Even cycles of sum n and caliber l have ``n = (2r+1)l + 1``, and
    ``r > 0`` forces imprimitive forms."""
    t0 = time.perf_counter()
    rep = Report("divisor", {"n_min": 2, "n_max": n_max})
    checked = 0
    for n in range(2, n_max + 1):
        cols = census_columns(n, 0, workers)
        cal, d = cols["caliber"], cols["d"]
        checked += len(cols)
        q, rem = np.divmod(n - 1, cal)
        bad_form = (rem != 0) | (q % 2 == 0)
        r = (q - 1) // 2
        bad_prim = ~bad_form & (r > 0) & (d <= 1)
        for i in np.flatnonzero(bad_form | bad_prim):
            rec = records_from_columns(cols.select(np.array([i])))[0]
            rep.violations.append(
                {
                    "sum": n,
                    "caliber": rec.caliber,
                    "d": rec.d,
                    "representative": list(rec.representative),
                    "reason": "n-1 not an odd multiple of caliber" if bad_form[i] else "r > 0 but primitive",
                }
            )
    rep.observations["cycles_checked"] = checked
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_formula_conjecture(n_max: int, workers: int = 1) -> Report:
    """The number of even cycles of caliber l and admissible sum n is
    :func:`predicted_cycle_count` (l), whatever the sum."""
    t0 = time.perf_counter()
    rep = Report("formula", {"n_min": 2, "n_max": n_max})
    counts: dict[int, dict[int, int]] = {}
    for n in range(2, n_max + 1):
        cols = census_columns(n, 0, workers)
        cal = cols["caliber"]
        observed = dict(zip(*(a.tolist() for a in np.unique(cal, return_counts=True))))
        total_forms = int(cal.sum())
        if total_forms != 2 ** (n - 2):
            rep.violations.append({"sum": n, "reason": "form count", "observed": total_forms, "expected": 2 ** (n - 2)})
        for l in sorted(set(divisors(n - 1)) | set(observed)):
            if not _is_admissible(n, l):
                continue
            got = observed.get(l, 0)
            want = predicted_cycle_count(l)
            counts.setdefault(l, {})[n] = got
            if got != want:
                rep.violations.append({"sum": n, "caliber": l, "observed": got, "expected": want})
    rep.observations["counts"] = {str(l): {str(n): c for n, c in sorted(v.items())} for l, v in sorted(counts.items())}
    rep.observations["predicted"] = {str(l): predicted_cycle_count(l) for l in sorted(counts)}
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_composition_conjecture(a_max: int, a_min: int = 3) -> Report:
    """For primitive classes with ``c1 * c2 = c`` of discriminant ``a^2 - 4``:
    equal sums ``n <= a``, ``l1 + l2 = n - 1``, and ``2 <= l1, l2 <= n - 3``
    unless one of them is principal."""
    t0 = time.perf_counter()
    rep = Report("composition", {"a_min": a_min, "a_max": a_max})
    pairs = 0
    for a in range(a_min, a_max + 1):
        D = a * a - 4
        spec = DiscSpec(a, 1)
        c = c_class(a)
        principal = principal_class(spec)
        for c1 in class_list(D):
            c2 = compose(c, c1.inverse())
            pairs += 1
            n1, n2 = c1.sum(spec), c2.sum(spec)
            l1, l2 = c1.caliber, c2.caliber
            problems = []
            if compose(c1, c2) != c:
                problems.append("c1*c2 != c")
            if n1 != n2:
                problems.append("sums differ")
            if max(n1, n2) > a:
                problems.append("sum exceeds a")
            if l1 + l2 != n1 - 1:
                problems.append("l1 + l2 != n - 1")
            if principal not in (c1, c2) and not (2 <= min(l1, l2) and max(l1, l2) <= n1 - 3):
                problems.append("caliber bound")
            if problems:
                rep.violations.append(
                    {"a": a, "c1": list(c1.representative), "c2": list(c2.representative),
                     "sums": [n1, n2], "calibers": [l1, l2], "reasons": problems}
                )
    rep.observations["pairs_checked"] = pairs
    rep.elapsed = time.perf_counter() - t0
    return rep


def short_cycle_table(sum_max: int, workers: int = 1) -> list[CycleRecord]:
    """Even cycles with caliber below ``sum - 1``, for sums up to ``sum_max``."""
    out = []
    for n in range(2, sum_max + 1):
        cols = census_columns(n, 0, workers)
        out.extend(records_from_columns(cols.select(cols["caliber"] < n - 1)))
    out.sort(key=lambda r: (r.sum, r.caliber, r.primitive_form.B, r.primitive_form.A, r.primitive_form.C, r.d))
    return out


def sum_bound_check(a_max: int) -> Report:
    """Largest class sum is ``a + 1`` (only the principal class) for
    ``a^2 + 4``, and ``a`` (exactly the principal class and ``c``) for ``a^2 - 4``."""
    t0 = time.perf_counter()
    rep = Report("sum_bound", {"a_min": 1, "a_max": a_max})
    for a in range(1, a_max + 1):
        for s in (0, 1):
            if s == 1 and a < 3:
                continue
            spec = DiscSpec(a, s)
            sums = {cls: cls.sum(spec) for cls in all_classes(spec.D)}
            top = max(sums.values())
            winners = {cls for cls, v in sums.items() if v == top}
            if s == 0:
                want_top, want = a + 1, {principal_class(spec)}
            else:
                want_top, want = a, {principal_class(spec), c_class(a)}
            if top != want_top or winners != want:
                rep.violations.append(
                    {"a": a, "s": s, "max_sum": top, "attained_by": sorted(str(c) for c in winners)}
                )
    rep.elapsed = time.perf_counter() - t0
    return rep


def merge_zeros(seq) -> tuple[int, ...]:
    """Collapse each interior zero: ``(..., x, 0, y, ...) -> (..., x + y, ...)``."""
    out = list(seq)
    i = 0
    while i < len(out):
        if out[i] == 0 and 0 < i < len(out) - 1:
            out[i - 1 : i + 2] = [out[i - 1] + out[i + 1]]
            i = max(i - 1, 0)
        else:
            i += 1
    return tuple(out)


def principal_cycle_pattern(a: int) -> list[tuple[int, ...]]:
    """``(a,1), (1,a), (1,a-2,1,1), ..., (1,a-k,k-1,1), ..., (1,1,a-2,1)``."""
    return [(a, 1), (1, a)] + [(1, a - k, k - 1, 1) for k in range(2, a)]


def c_cycle_pattern(a: int) -> list[tuple[int, ...]]:
    """``(2,a-3,1), (1,a-3,2), (1,a-4,1,1,1), ..., (1,1,1,a-4,1)``."""
    return [(2, a - 3, 1), (1, a - 3, 2)] + [(1, a - 3 - j, 1, j, 1) for j in range(1, a - 3)]


def c_tilde_cycle_pattern(k: int) -> list[tuple[int, ...]]:
    """``(k,k-1,2)`` followed by ``(1,k-2-j,1,1,k-1,j,1)`` for ``j = 0..k-2``, zeros merged."""
    return [(k, k - 1, 2)] + [merge_zeros((1, k - 2 - j, 1, 1, k - 1, j, 1)) for j in range(k - 1)]


def verify_pell_path(d_max: int) -> Report:
    """Reduction by kneading after Pell rescaling agrees with a direct
    reduction step on every reduced form of every nonsquare ``D <= d_max``."""
    from ..forms import enumerate_reduced, is_square, reduce_step
    from ..pell import pell4, reduce_via_kneading

    t0 = time.perf_counter()
    rep = Report("pell", {"d_min": 2, "d_max": d_max})
    forms = 0
    for D in range(2, d_max + 1):
        if is_square(D):
            continue
        x, y = pell4(D)
        if x * x - D * y * y != 4 or y < 1:
            rep.violations.append({"D": D, "pell": [x, y], "reason": "not a solution"})
        for f in enumerate_reduced(D):
            forms += 1
            if reduce_via_kneading(f) != reduce_step(f):
                rep.violations.append({"D": D, "form": list(f), "reason": "paths disagree"})
    rep.observations["forms_checked"] = forms
    rep.elapsed = time.perf_counter() - t0
    return rep
