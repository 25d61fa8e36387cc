import itertools
from collections import Counter

import pytest

from pretzelhfk.kauffman import (Bigrading, KauffmanState, chain_summary,
                                 delta, enumerate_states, grading, parity)
from pretzelhfk.pretzel import FamilyTag, PretzelClass

K111 = PretzelClass(FamilyTag.THM1, 1, 1, 1)
K222 = PretzelClass(FamilyTag.THM2, 2, 2, 2)


def thm1(a, b, c):
    return PretzelClass(FamilyTag.THM1, a, b, c)


def test_parity():
    assert parity(0) == 0
    assert parity(1) == 1
    assert parity(4) == 0


def test_state_counts_small():
    states = enumerate_states(K111, "b")
    assert len(states) == 21
    assert Counter(s.family for s in states) == {"A": 9, "B": 6, "C": 6}


def test_state_counts_larger():
    states = enumerate_states(thm1(2, 2, 2), "a")
    counts = Counter(s.family for s in states)
    assert counts == {"A": 25, "B": 20, "C": 20}
    assert len(states) == 65


def test_state_lists_variant_independent():
    for a, b, c in [(1, 1, 1), (2, 1, 3)]:
        sa = enumerate_states(thm1(a, b, c), "a")
        sb = enumerate_states(thm1(a, b, c), "b")
        assert [(s.family, s.idx1, s.idx2) for s in sa] == \
               [(s.family, s.idx1, s.idx2) for s in sb]


def test_enumerate_requires_thm1_and_valid_variant():
    with pytest.raises(ValueError):
        enumerate_states(K222, "b")
    with pytest.raises(ValueError):
        enumerate_states(PretzelClass(FamilyTag.MIRROR_THM1, 1, 1, 1), "b")
    with pytest.raises(ValueError):
        enumerate_states(K111, "c")


def test_grading_known_values():
    assert grading(KauffmanState("A", 0, 0, "a"), K111) == Bigrading(-2, 0)
    assert grading(KauffmanState("B", 1, 0, "a"), K111) == Bigrading(-1, 2)
    assert grading(KauffmanState("C", 0, 0, "a"), K111) == Bigrading(-2, 1)
    assert grading(KauffmanState("B", 0, 1, "b"), K111) == Bigrading(-1, 2)
    # i = 0 rows are special in variant (a) only
    assert grading(KauffmanState("B", 0, 0, "a"), K111) == Bigrading(-3, 0)
    assert grading(KauffmanState("B", 0, 0, "b"), K111) == Bigrading(0, 3)
    assert grading(KauffmanState("C", 0, 2, "a"), K111) == Bigrading(0, 3)


def test_grading_rejects_out_of_range():
    with pytest.raises(ValueError):
        grading(KauffmanState("A", 3, 0, "b"), K111)
    with pytest.raises(ValueError):
        grading(KauffmanState("B", 2, 0, "b"), K111)
    with pytest.raises(ValueError):
        grading(KauffmanState("C", 0, 3, "b"), K111)


def test_delta_separates_families():
    for a, b, c in [(1, 1, 1), (2, 1, 2), (1, 3, 2)]:
        cls = thm1(a, b, c)
        for variant in ("a", "b"):
            for state in enumerate_states(cls, variant):
                expected = 0 if state.family == "A" else 1
                assert delta(state, cls) == expected, state


def test_family_count_identities():
    for a, b, c in [(1, 1, 1), (2, 3, 1), (3, 2, 2)]:
        summary = chain_summary(thm1(a, b, c), "b")
        totals = Counter()
        for (fam, _), n in summary.per_family.items():
            totals[fam] += n
        assert totals["A"] == (2 * b + 1) * (2 * c + 1)
        assert totals["B"] == 2 * a * (2 * c + 1)
        assert totals["C"] == 2 * a * (2 * b + 1)
        assert summary.total() == totals["A"] + totals["B"] + totals["C"]


def test_two_line_chain_structure():
    # every A state one Maslov step above the B/C states of its spin grading
    for a, b, c in [(1, 1, 1), (2, 2, 3)]:
        cls = thm1(a, b, c)
        for variant in ("a", "b"):
            for state in enumerate_states(cls, variant):
                g = grading(state, cls)
                if state.family == "A":
                    assert g.m == g.s - (b + c)
                else:
                    assert g.m == g.s - (b + c) - 1


def test_known_counts_per_spin():
    summary = chain_summary(K111, "b")
    n_a = {s: summary.a_count(s) for s in summary.spins() if summary.a_count(s)}
    n_bc = {s: summary.bc_count(s) for s in summary.spins() if summary.bc_count(s)}
    assert n_a == {2: 1, 1: 2, 0: 3, -1: 2, -2: 1}
    assert n_bc == {3: 1, 2: 2, 1: 2, 0: 2, -1: 2, -2: 2, -3: 1}


def test_spin_coincidence_of_b_and_c():
    # in variant (b), B and C states share a spin grading only at one corner
    for a, b, c in [(1, 1, 1), (2, 1, 3), (1, 3, 1)]:
        cls = thm1(a, b, c)
        b_states = [(s, grading(s, cls)) for s in enumerate_states(cls, "b")
                    if s.family == "B"]
        c_states = [(s, grading(s, cls)) for s in enumerate_states(cls, "b")
                    if s.family == "C"]
        for (bs, gb), (cs, gc) in itertools.product(b_states, c_states):
            if gb.s == gc.s:
                assert gb.s == b - c
                assert bs.idx2 == 2 * c and bs.idx1 % 2 == 1
                assert cs.idx2 == 2 * b and cs.idx1 % 2 == 0


def test_euler_counts_variant_independent():
    for a, b, c in itertools.product(range(1, 4), repeat=3):
        cls = thm1(a, b, c)
        assert chain_summary(cls, "a").euler_by_spin() == \
               chain_summary(cls, "b").euler_by_spin()
