from collections import Counter

import pytest

from kneading.census import compositions
from kneading.continuants import alternant
from kneading.correspondence import DiscSpec, phi, psi, spec_of_sequence, specs_of_discriminant
from kneading.errors import DiscriminantMismatch, ExcludedSpec, NotReduced
from kneading.forms import enumerate_reduced, reduce_step, reducing_number
from kneading.sequences import knead

EXCLUDED_SEQS = ((1,), (2,))


def is_excluded(seq):
    return seq in EXCLUDED_SEQS or (len(seq) == 3 and seq[0] == seq[2] == 1)


def expected_reducing_number(seq):
    if len(seq) == 1:
        return seq[0]
    if len(seq) == 2 and seq[1] == 1:
        return seq[0] + 2
    return seq[0] + 1


def test_worked_example():
    spec = DiscSpec(100, 0)
    assert spec.D == 10004
    assert psi((44, 114, 17), spec) == (2, 2, 3, 6)
    assert phi((2, 2, 3, 6)) == (44, 114, 17)
    assert psi((71, 150, 44), spec) == (1, 1, 3, 5, 1, 2)


def test_single_entry():
    assert phi((5,)) == (1, 5, 1)
    assert psi((1, 5, 1), DiscSpec(5, 1)) == (5,)


def test_excluded():
    for seq in [(1,), (2,), (1, 4, 1)]:
        with pytest.raises(ExcludedSpec):
            phi(seq)
    for a, s in [(1, 1), (2, 1)]:
        with pytest.raises(ExcludedSpec):
            DiscSpec(a, s)


def test_psi_errors():
    with pytest.raises(DiscriminantMismatch):
        psi((1, 3, 1), DiscSpec(4, 0))
    with pytest.raises(NotReduced):
        psi((1, 1, -1), DiscSpec(1, 0))


def test_specs_of_discriminant():
    assert specs_of_discriminant(5) == [DiscSpec(1, 0), DiscSpec(3, 1)]
    assert specs_of_discriminant(125) == [DiscSpec(11, 0)]
    assert specs_of_discriminant(13) == [DiscSpec(3, 0)]
    assert specs_of_discriminant(10) == []


def test_roundtrips_and_commutation():
    for n in range(1, 19):
        for seq in compositions(n):
            if is_excluded(seq):
                continue
            f = phi(seq)
            assert psi(f, spec_of_sequence(seq)) == seq
            assert phi(knead(seq)) == reduce_step(f)
            assert reducing_number(f) == expected_reducing_number(seq)


def test_phi_of_psi():
    for a in range(3, 61):
        for s in (0, 1):
            spec = DiscSpec(a, s)
            for f in enumerate_reduced(spec.D):
                assert phi(psi(f, spec)) == f


def test_counts_match():
    # sequences with alternant a have sum at most a + 1
    n_max = 17
    counts = Counter()
    for n in range(1, n_max + 1):
        for seq in compositions(n):
            counts[alternant(seq), len(seq) % 2] += 1
    for a in range(3, n_max):
        for s in (0, 1):
            assert counts[a, s] == len(enumerate_reduced(DiscSpec(a, s).D)), (a, s)
