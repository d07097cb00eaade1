import pytest
from hypothesis import given, strategies as st

from mealygroup.automaton import (
    AutomatonError,
    AutomatonParseError,
    MealyAutomaton,
    build_automaton,
    invert_automaton,
    moore_diagram,
    parse,
    render,
)


def test_paper_preset_tables():
    m = build_automaton("paper-Pi")
    assert m.states == ("e", "a", "b", "c", "d")
    a = m.index("a")
    assert m.output[a] == (1, 0)
    assert [m.states[t] for t in m.transition[a]] == ["d", "e"]
    assert m.is_identity(m.index("e"))


def test_identity_only_definition():
    m = parse("alphabet: 2\nstate e: 0 -> 0 / e ; 1 -> 1 / e\n")
    assert m.generators == ()


def test_adding_machine_is_valid():
    m = build_automaton("adding-machine")
    a = m.index("a")
    assert sorted(m.output[a]) == [0, 1]


def test_inverse_of_paper_automaton():
    inv = invert_automaton(build_automaton("paper-Pi"))
    a = inv.index("a_inv")
    # a^-1 = σ(1, d^-1)
    assert inv.output[a] == (1, 0)
    assert [inv.states[t] for t in inv.transition[a]] == ["e", "d_inv"]
    d = inv.index("d_inv")
    assert [inv.states[t] for t in inv.transition[d]] == ["e", "b_inv"]
    c = inv.index("c_inv")
    assert [inv.states[t] for t in inv.transition[c]] == ["a_inv", "a_inv"]


def test_inverse_is_involution():
    m = build_automaton("paper-Pi")
    assert invert_automaton(invert_automaton(m)) == m
    t = build_automaton("trivial")
    assert invert_automaton(t) == t


def test_moore_diagram():
    m = build_automaton("paper-Pi")
    arcs = moore_diagram(m).arcs
    assert len(arcs) == 10
    assert ("a", "d", 0, 1) in [(x.source, x.target, x.input, x.output) for x in arcs]
    assert ("e", "e", 0, 0) in [(x.source, x.target, x.input, x.output) for x in arcs]
    triv = moore_diagram(build_automaton("trivial")).arcs
    assert len(triv) == 2 and all(x.source == x.target == "e" and x.input == x.output for x in triv)
    add = {(x.source, x.target, x.input, x.output) for x in moore_diagram(build_automaton("adding-machine")).arcs}
    assert {("a", "e", 0, 1), ("a", "a", 1, 0)} <= add


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("state a: 0 -> 1 / e ; 1 -> 0 / e", "must precede"),
        ("alphabet: 2\nstate a: 0 -> 0 / e ; 1 -> 0 / e", "not invertible"),
        ("alphabet: 2\nstate a: 0 -> 1 / z ; 1 -> 0 / e", "undefined state 'z'"),
        ("alphabet: 2\nstate a: 0 -> 1 / e", "no clause"),
        ("alphabet: 2\nstate a: 0 -> 3 / e ; 1 -> 0 / e", "outside alphabet"),
        ("alphabet: 2\nstate a 0 -> 1 / e", "expected"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(AutomatonError, match=fragment):
        parse(text)


def test_parse_error_position():
    with pytest.raises(AutomatonParseError) as err:
        parse("alphabet: 2\n\n  state a: 0 -> 1 / e ; 1 => 0 / e\n")
    assert err.value.line == 3
    assert err.value.column > 3


def test_invertibility_error_names_state():
    with pytest.raises(AutomatonError, match="'b'"):
        MealyAutomaton(2, ("a", "b"), ((0, 0), (1, 1)), ((1, 0), (0, 0)))


@st.composite
def automata(draw):
    q = draw(st.integers(2, 3))
    k = draw(st.integers(1, 4))
    names = ["e"] + [f"s{i}" for i in range(k)]
    trans = [tuple([0] * q)]
    out = [tuple(range(q))]
    for _ in range(k):
        trans.append(tuple(draw(st.integers(0, k)) for _ in range(q)))
        out.append(tuple(draw(st.permutations(range(q)))))
    return MealyAutomaton(q, tuple(names), tuple(trans), tuple(out), 0)


@given(automata())
def test_render_round_trip(m):
    assert parse(render(m)) == m


@given(automata())
def test_inverse_round_trip(m):
    assert invert_automaton(invert_automaton(m)) == m
