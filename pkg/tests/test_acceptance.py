"""Acceptance criteria, one test each.

Each test prints a PASS/FAIL line; the lines are repeated in the pytest
terminal summary.  Run ``python3 tests/test_acceptance.py`` to get only the
status lines.
"""

import itertools
import random
import time
from collections import Counter
from contextlib import contextmanager
from math import comb, isqrt

import pytest

from kneading.census import (
    census_columns,
    compositions,
    principal_cycle_pattern,
    short_cycle_table,
    sum_bound_check,
    verify_composition_conjecture,
    verify_divisor_conjecture,
    verify_formula_conjecture,
    verify_pell_path,
)
from kneading.classgroup import (
    c_class,
    c_tilde_class,
    class_list,
    class_of,
    compose,
    principal_class,
)
from kneading.continuants import continuant, continuant_matrix
from kneading.correspondence import DiscSpec, phi, psi, spec_of_sequence
from kneading.forms import enumerate_reduced, is_square, reduce_step, reduction_cycle
from kneading.pell import pell4
from kneading.sequences import knead

RESULTS = []


@contextmanager
def criterion(number, title, limit=None):
    t0 = time.perf_counter()
    ok, note = False, ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        ok = limit is None or elapsed < limit
        if not ok:
            note = f" over the {limit:g}s limit"
    except AssertionError as exc:
        elapsed = time.perf_counter() - t0
        note = f" {str(exc).splitlines()[0][:120]}" if str(exc) else ""
        raise
    finally:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} ({elapsed:.3f}s){note}"
        RESULTS.append(line)
        print(line)
    assert ok, line


CHAIN_TEXT = (
    "(2,2,3,6) (1,1,3,5,1,2) (4,5,1,1,1,1) (1,4,1,1,2,4) (1,3,1,1,2,3,1,1) "
    "(1,2,1,1,2,3,2,1) (1,1,1,1,2,3,3,1) (2,1,2,3,4,1) (3,3,5,2) (1,2,5,1,1,3) "
    "(1,1,5,1,1,2,1,1) (6,1,1,2,2,1) (2,2,3,6)"
)

CYCLE_125 = [
    (11, 13, 1), (19, 31, 11), (25, 45, 19), (29, 55, 25), (31, 61, 29), (31, 63, 31),
    (29, 61, 31), (25, 55, 29), (19, 45, 25), (11, 31, 19), (1, 13, 11),
]

# (sum - 1, caliber, d, A, B, C), transcribed as printed
REFERENCE_TABLE = """
3 1 2 1 3 1 | 5 1 5 1 3 1 | 6 2 5 1 4 2 | 7 1 13 1 3 1 | 9 1 34 1 3 1 | 9 3 10 1 5 3
10 2 29 1 4 2 | 11 1 89 1 3 1 | 12 4 17 1 6 4 | 12 4 37 2 8 3 | 13 1 233 1 3 1
14 2 169 1 4 2 | 15 1 610 1 3 1 | 15 3 109 1 5 3 | 15 5 130 1 5 2 | 15 5 26 1 7 5
15 5 82 3 11 3 | 17 1 1597 1 3 1 | 18 2 985 1 4 2 | 18 6 17 1 8 6 | 18 6 101 2 12 5
18 6 145 3 14 4 | 18 6 145 4 14 3 | 18 6 257 5 20 7 | 19 1 4181 1 3 1 | 20 4 305 1 6 4
20 4 1405 2 8 3 | 21 1 10946 1 3 1 | 21 3 1189 1 5 3 | 21 7 290 1 7 3 | 21 7 514 2 9 2
21 7 50 1 9 7 | 21 7 1154 4 15 5 | 21 7 226 3 17 5 | 21 7 226 5 17 3 | 21 7 442 5 25 9
21 7 362 5 25 13 | 21 7 530 7 27 7 | 22 2 5741 1 4 2 | 23 1 28657 1 3 1 | 24 8 65 1 10 8
24 8 197 2 16 7 | 24 8 325 3 20 6 | 24 8 325 6 20 3 | 24 8 401 4 22 5 | 24 8 401 5 22 4
24 8 577 5 30 16 | 24 8 677 5 30 11 | 24 8 901 7 34 9 | 24 8 901 9 34 7 | 24 8 677 7 34 17
24 8 1025 8 38 13 | 24 8 1025 13 38 8 | 24 8 1157 10 40 11 | 24 8 1297 12 46 17
24 8 1765 13 52 18 | 25 1 75025 1 3 1 | 25 5 8578 1 5 2 | 25 5 701 1 7 5 | 25 5 6805 3 11 3
"""


def reference_rows():
    return [tuple(map(int, cell.split())) for cell in REFERENCE_TABLE.replace("\n", "|").split("|") if cell.strip()]


def is_excluded(seq):
    return seq in ((1,), (2,)) or (len(seq) == 3 and seq[0] == seq[2] == 1)


def test_c01_kneading_chain():
    with criterion(1, "kneading chain from (2,2,3,6)", 1e-3):
        seq, chain = (2, 2, 3, 6), [(2, 2, 3, 6)]
        for _ in range(12):
            seq = knead(seq)
            chain.append(seq)
        text = " ".join("(" + ",".join(map(str, s)) + ")" for s in chain)
        assert text == CHAIN_TEXT, text


def test_c02_worked_example():
    spec = DiscSpec(100, 0)
    with criterion(2, "psi/reduce_step worked example", 1e-3):
        assert psi((44, 114, 17), spec) == (2, 2, 3, 6)
        g = reduce_step((44, 114, 17))
        assert g == (71, 150, 44)
        assert psi(g, spec) == (1, 1, 3, 5, 1, 2)


def test_c03_discriminant_125():
    with criterion(3, "discriminant 125 forms and cycle", 1e-2):
        assert Counter(enumerate_reduced(125)) == Counter([(5, 15, 5)] + CYCLE_125)
        cyc = reduction_cycle((11, 13, 1))
        i = cyc.index(CYCLE_125[0])
        assert cyc[i:] + cyc[:i] == CYCLE_125


def test_c04_bijection():
    with criterion(4, "psi.phi and phi.psi are identities", 60):
        bad = 0
        for n in range(1, 19):
            for seq in compositions(n):
                if not is_excluded(seq) and psi(phi(seq), spec_of_sequence(seq)) != seq:
                    bad += 1
        for a in range(3, 201):
            for s in (0, 1):
                spec = DiscSpec(a, s)
                bad += sum(phi(psi(f, spec)) != f for f in enumerate_reduced(spec.D))
        assert bad == 0, f"{bad} failures"


def test_c05_commutation():
    with criterion(5, "phi(knead q) = reduce_step(phi q), n <= 18", 60):
        bad = 0
        for n in range(1, 19):
            for seq in compositions(n):
                if not is_excluded(seq) and phi(knead(seq)) != reduce_step(phi(seq)):
                    bad += 1
        assert bad == 0, f"{bad} failures"


def right_continuant(seq):
    # [q1..ql] = ql [q1..q(l-1)] + [q1..q(l-2)], run left to right
    prev, cur = 0, 1
    for q in seq:
        prev, cur = cur, q * cur + prev
    return cur


def matrix_product(seq):
    M = ((1, 0), (0, 1))
    for q in seq:
        (a, b), (c, d) = M
        M = ((a * q + b, a), (c * q + d, c))
    return M


def test_c06_continuant_identities():
    rng = random.Random(6)
    with criterion(6, "continuant identities on 10^4 random sequences"):
        bad = Counter()
        for _ in range(10**4):
            seq = tuple(rng.randint(1, 9) for _ in range(rng.randint(1, 12)))
            l = len(seq)
            K = continuant
            bad["recurrence"] += K(seq) != right_continuant(seq)
            bad["matrix"] += continuant_matrix(seq) != matrix_product(seq) or (
                l >= 2 and continuant_matrix(seq) != ((K(seq), K(seq[:-1])), (K(seq[1:]), K(seq[1:-1])))
            )
            bad["reversal"] += K(seq) != K(seq[::-1])
            if l >= 2:
                bad["determinant"] += K(seq) * K(seq[1:-1]) - K(seq[:-1]) * K(seq[1:]) != (-1) ** l
            if l >= 2:
                i = rng.randint(1, l - 1)
                merged = seq[: i - 1] + (seq[i - 1] + seq[i],) + seq[i + 1 :]
                bad["zero"] += K(seq[:i] + (0,) + seq[i:]) != K(merged)
            bad["end zero"] += K((0,) + seq) != K(seq[1:])
            bad["one"] += K((1,) + seq) != K((seq[0] + 1,) + seq[1:])
        assert not +bad, dict(+bad)


def test_c07_count_identity():
    with criterion(7, "2^(n-2) even compositions and forms, n <= 24, 8 workers", 300):
        for n in range(2, 25):
            even = sum(comb(n - 1, k - 1) for k in range(2, n + 1, 2))
            forms = int(census_columns(n, 0, 8)["caliber"].sum())
            assert even == 2 ** (n - 2) == forms, n
        # direct count over discriminants for small sums
        for n in range(2, 11):
            total = 0
            for a in range(1, 90):
                spec = DiscSpec(a, 0)
                total += sum(sum(psi(f, spec)) == n for f in enumerate_reduced(spec.D))
            assert total == 2 ** (n - 2), n


def test_c08_divisor_and_formula():
    with criterion(8, "divisor and formula conjectures, n <= 26", 900):
        div = verify_divisor_conjecture(26)
        form = verify_formula_conjecture(26)
        assert div.ok, div.violations[:3]
        assert form.ok, form.violations[:3]
        counts = form.observations["counts"]
        assert counts["4"] == {"5": 2, "13": 2, "21": 2}
        assert counts["7"] == {"8": 9, "22": 9}


def test_c09_short_cycle_table():
    with criterion(9, "short-cycle table rows with sum-1 <= 25"):
        got = Counter(r.table_row() for r in short_cycle_table(26))
        want = Counter(reference_rows())
        for row in [(3, 1, 2, 1, 3, 1), (12, 4, 17, 1, 6, 4), (12, 4, 37, 2, 8, 3),
                    (15, 5, 130, 1, 5, 2), (21, 7, 514, 2, 9, 2)]:
            assert got[row] == 1, row
        missing, extra = want - got, got - want
        assert not missing and not extra, f"missing {sorted(missing)}, extra {sorted(extra)}"


def test_c10_pell_path():
    with criterion(10, "reduction by kneading for nonsquare D <= 500", 60):
        rep = verify_pell_path(500)
        assert rep.ok, rep.violations[:3]
        for D in range(2, 501):
            if not is_square(D):
                x, y = pell4(D)
                assert x * x - D * y * y == 4, D


def test_c11_class_group():
    with criterion(11, "class-group suite"):
        for a in range(3, 31):
            for s in (0, 1):
                spec = DiscSpec(a, s)
                classes = class_list(spec.D)
                e = principal_class(spec)
                members = set(classes)
                for c in classes:
                    assert compose(c, e) == c and compose(c, c.inverse()) == e
                for x, y in itertools.product(classes, repeat=2):
                    xy = compose(x, y)
                    assert xy in members and xy == compose(y, x)
                rng = random.Random(a * 2 + s)
                for _ in range(100):
                    x, y, z = (rng.choice(classes) for _ in range(3))
                    assert compose(compose(x, y), z) == compose(x, compose(y, z))
        for a in range(4, 61):
            c = c_class(a)
            assert compose(c, c) == principal_class(DiscSpec(a, 1)), a
        for k in (3, 4, 6, 7):
            ct = c_tilde_class(k)
            assert compose(ct, ct) == c_class(2 * k * k - 2 * k + 3), k
        f, g = class_of((5, 30, 11)), class_of((7, 34, 17))
        assert f.discriminant == g.discriminant == 680 and f != g
        spec = DiscSpec(26, 0)
        assert f.sum(spec) == g.sum(spec) == 9


def test_c12_composition():
    with criterion(12, "composition conjecture, a <= 60", 300):
        rep = verify_composition_conjecture(60)
        assert rep.ok, rep.violations[:3]


def test_c13_lemmas():
    with criterion(13, "principal pattern and sum bounds, a <= 100"):
        for a in range(3, 101):
            spec = DiscSpec(a, 0)
            cyc = sorted(psi(f, spec) for f in principal_class(spec).cycle)
            assert cyc == sorted(principal_cycle_pattern(a)), a
        rep = sum_bound_check(100)
        assert rep.ok, rep.violations[:3]


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except AssertionError:
                pass
