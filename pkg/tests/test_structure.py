import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mealygroup import AutomatonGroup, ResourceLimitExceeded, build_automaton
from mealygroup.automaton import parse
from mealygroup.group import ElementTable, reduce_word, vertices, word_inverse
from mealygroup.structure import (
    FAILS,
    HOLDS,
    PropertyReport,
    activity_class,
    canonical_cycle,
    check_fractal,
    check_open_set_condition,
    compute_nucleus,
    depth_sections,
    enumerate_relations,
    is_level_transitive,
    rigid_stabilizer_member,
    stabilizer_level,
    stabilizer_member,
    verify_contraction,
    verify_portrait_table,
    verify_weak_branch_witness,
)

from oracles import word_action

LAMPLIGHTER = """alphabet: 2
state e: 0 -> 0 / e ; 1 -> 1 / e
state a: 0 -> 1 / a ; 1 -> 0 / b
state b: 0 -> 0 / a ; 1 -> 1 / b
"""

words = st.lists(st.sampled_from([2, -2, 3, -3, 4, -4, 5, -5]), max_size=8).map(reduce_word)


def group(name):
    return AutomatonGroup(build_automaton(name))


@pytest.mark.parametrize(
    "name, expected",
    [
        ("trivial", ["1"]),
        ("adding-machine", ["1", "a", "a^-1"]),
        ("grigorchuk", ["1", "a", "b", "c", "d"]),
    ],
)
def test_small_nuclei(name, expected):
    g = group(name)
    t = ElementTable(g)
    n = compute_nucleus(g, table=t)
    assert {t.canonical(w) for w in n} == {t.canonical(g.parse(e)) for e in expected}


def test_paper_nucleus_size_and_depths(nucleus):
    assert len(nucleus) == 67
    assert nucleus.contraction_depth == 7
    assert nucleus.lemma_depth == 10


def test_nucleus_closed_under_inverse_and_sections(pi, table, nucleus):
    members = set(nucleus)
    for w in nucleus:
        assert table.canonical(word_inverse(w)) in members
        for s in pi.split(w)[1]:
            assert table.canonical(s) in members


def test_nucleus_is_minimal(pi, table, nucleus):
    # every member survives as a deep section of some member
    reached = set()
    for w in nucleus:
        reached |= set(depth_sections(pi, w, 10, table))
    assert reached == set(nucleus)


def test_contraction_depth_is_least(pi, table, nucleus):
    assert verify_contraction(pi, nucleus, 7, table).holds
    assert verify_contraction(pi, nucleus, 6, table).verdict == FAILS


def test_generators_alone_are_not_the_nucleus(pi, table):
    gens = [()] + [(s,) for s in pi.symmetric_generators]
    assert verify_contraction(pi, gens, 7, table).verdict == FAILS


def test_non_contracting_hits_cap():
    g = AutomatonGroup(parse(LAMPLIGHTER), cap=300)
    with pytest.raises(ResourceLimitExceeded):
        compute_nucleus(g, cap=300)


def test_fractal(pi):
    rep = check_fractal(pi)
    assert rep.holds
    assert len(rep.witnesses) == 2 * len(pi.symmetric_generators)
    for wit in rep.witnesses:
        w = pi.parse(wit["element"])
        assert stabilizer_member(pi, w, 1)
        assert pi.words_equal(pi.section(w, (wit["letter"],)), pi.parse(wit["section"]))


def test_fractal_negative():
    rep = check_fractal(group("trivial"))
    assert rep.verdict == FAILS


def test_level_transitive(pi):
    assert all(is_level_transitive(pi, n) for n in range(1, 9))
    assert not is_level_transitive(group("trivial"), 1)


def test_open_set(pi, nucleus):
    rep = check_open_set_condition(pi, nucleus, 4)
    assert rep.holds
    assert len(rep.witnesses) == len(nucleus)


def test_open_set_negative_control():
    g = group("adding-machine")
    assert check_open_set_condition(g, [g.word("a^2")], 3).holds
    # in the lamplighter automaton every section of a is a or b
    lamp = AutomatonGroup(parse(LAMPLIGHTER))
    assert check_open_set_condition(lamp, [lamp.word("a")], 4).verdict == FAILS


def test_activity_classes():
    act = activity_class(build_automaton("paper-Pi"))
    assert act.kind == "exponential"
    assert ("a", "d", "b", "a") in act.cycles
    assert ("a", "d", "b", "c", "a") in act.cycles
    for name in ("adding-machine", "grigorchuk", "trivial"):
        assert activity_class(build_automaton(name)).kind == "bounded"
    assert activity_class(parse(LAMPLIGHTER)).kind == "exponential"


def test_canonical_cycle_rotation():
    m = build_automaton("paper-Pi")
    assert canonical_cycle(m, ("d", "b", "a", "d")) == ("a", "d", "b", "a")


@settings(max_examples=50, deadline=None)
@given(words, st.integers(0, 7))
def test_stabilizer_matches_oracle(pi, w, n):
    m = pi.automaton
    expected = all(np.array_equal(word_action(m, w, k), np.arange(2**k)) for k in range(1, n + 1))
    assert stabilizer_member(pi, w, n) == expected


@settings(max_examples=50, deadline=None)
@given(words)
def test_stabilizer_tower_is_nested(pi, w):
    k = stabilizer_level(pi, w, 9)
    assert all(stabilizer_member(pi, w, j) for j in range(k + 1))
    if k < 9:
        assert not stabilizer_member(pi, w, k + 1)


@settings(max_examples=40, deadline=None)
@given(words, st.lists(st.integers(0, 1), min_size=1, max_size=3).map(tuple))
def test_rigid_agrees_with_portrait(pi, w, v):
    p = pi.portrait(w, len(v))
    others = [s for u, s in zip(vertices(2, len(v)), p.sections) if u != v]
    expected = p.is_trivial_permutation and all(pi.is_trivial(s) for s in others)
    assert rigid_stabilizer_member(pi, w, v) == expected


def test_stabilizer_power_laws(pi):
    # x^(2^n) lies in St(3n + offset) and not one level deeper
    for name, offset in [("a", 0), ("b", 1), ("c", 1), ("d", 2)]:
        for n in (1, 2, 3):
            assert stabilizer_level(pi, pi.word(f"{name}^{2 ** n}"), 16) == 3 * n + offset


def test_weak_branch(pi):
    rep = verify_weak_branch_witness(pi, 3)
    assert rep.holds
    assert [w["k"] for w in rep.witnesses] == [3, 2, 1]


def test_weak_branch_negative(pi):
    assert verify_weak_branch_witness(pi, 2, vertex="0110").verdict == FAILS
    assert verify_weak_branch_witness(pi, 2, x="b").verdict == FAILS


def test_no_short_relators(pi):
    assert len(enumerate_relations(pi, 1)) == 0
    assert len(enumerate_relations(pi, 3)) == 0
    assert len(enumerate_relations(pi, 5, mode="raw")) == 0


def test_length_8_relator(pi):
    found = enumerate_relations(pi, 8)
    assert len(found) == 1
    assert found.contains_cyclic(pi.parse("[d,d^a]"))
    assert all(pi.is_trivial(r) for r in enumerate_relations(pi, 8, mode="raw"))


def test_raw_enumeration_matches_brute_force():
    g = group("grigorchuk")
    letters = g.symmetric_generators
    brute = set()
    for n in range(1, 5):
        for w in itertools.product(letters, repeat=n):
            if reduce_word(w) == w and g.is_trivial(w):
                brute.add(w)
    assert set(enumerate_relations(g, 4, mode="raw")) == brute
    assert brute


def test_minimal_relators_grigorchuk():
    g = group("grigorchuk")
    found = enumerate_relations(g, 4)
    for r in ["a^2", "b^2", "c^2", "d^2", "bcd"]:
        assert found.contains_cyclic(g.parse(r)), r
    # b^-1 c^-1 d^-1 etc. collapse onto the same classes
    assert all(len(r) <= 3 for r in found)


def test_portrait_rows_negative_control(pi):
    good = [("d^2", 2, ["1", "1", "a^2", "c^2"])]
    assert verify_portrait_table(pi, good).holds
    bad = [("d^2", 2, ["1", "1", "c^2", "a^2"])]
    rep = verify_portrait_table(pi, bad)
    assert rep.verdict == FAILS
    assert {m["vertex"] for m in rep.counterexamples[0]["mismatches"]} == {"10", "11"}
    short = [("d^2", 2, ["1", "1", "a^2"])]
    assert verify_portrait_table(pi, short).verdict == FAILS


def test_report_json():
    rep = PropertyReport("x", HOLDS, {"k": 1}, [{"a": "b"}], [])
    data = json.loads(rep.to_json())
    assert data == {"property": "x", "verdict": "holds", "parameters": {"k": 1}, "witnesses": [{"a": "b"}], "counterexamples": []}
