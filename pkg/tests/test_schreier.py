import numpy as np
import pytest

from mealygroup import ResourceLimitExceeded
from mealygroup.schreier import (
    MULTIGRAPH,
    SIMPLICIAL,
    ball_isometry_radius,
    build_schreier,
    check_covering_actions,
    components,
    export_graph,
    import_graph,
    is_connected,
    verify_covering,
)

from oracles import level_perm


def test_level_one_edges(pi):
    g = build_schreier(pi, 1)
    edges = {(g.vertex(u), g.vertex(v), s) for u, v, s in g.edges}
    assert edges == {
        ("0", "1", "a"), ("1", "0", "a"),
        ("0", "0", "b"), ("1", "1", "b"),
        ("0", "0", "c"), ("1", "1", "c"),
        ("0", "0", "d"), ("1", "1", "d"),
    }


def test_level_two_simplicial(pi):
    g = build_schreier(pi, 2, SIMPLICIAL)
    edges = {(g.vertex(u), g.vertex(v), s) for u, v, s in g.edges}
    assert edges == {("00", "10", "a"), ("01", "11", "a"), ("00", "01", "b,c"), ("10", "11", "c")}
    assert is_connected(g)


def test_edges_match_table_oracle(pi):
    m = pi.automaton
    for n in range(1, 7):
        fwd, _ = level_perm(m, n)
        g = build_schreier(pi, n)
        assert len(g.edges) == 4 * 2**n
        for u, v, s in g.edges:
            assert fwd[m.index(s)][u] == v


def test_connected_levels(pi):
    for n in range(1, 13):
        assert is_connected(build_schreier(pi, n))


def test_disconnected_negative_control():
    from mealygroup import AutomatonGroup, build_automaton

    g = build_schreier(AutomatonGroup(build_automaton("trivial")), 3, SIMPLICIAL)
    assert components(g) == 8


def test_covering(pi):
    for n in range(1, 11):
        assert verify_covering(pi, n).holds


def test_covering_negative_control(pi):
    lower = {0: pi.level_permutations(2)[2]}
    upper = {0: np.array(pi.level_permutations(3)[2])}
    upper[0][[0, 4]] = upper[0][[4, 0]]
    rep = check_covering_actions(lower, upper, 2, 2)
    assert not rep.holds
    assert rep.failures


def test_level_cap(pi):
    with pytest.raises(ResourceLimitExceeded):
        build_schreier(pi, 15)
    with pytest.raises(ValueError):
        build_schreier(pi, 0)


def test_ball_isometry(pi):
    g5, g6 = build_schreier(pi, 5, SIMPLICIAL), build_schreier(pi, 6, SIMPLICIAL)
    base5, base6 = "0" * 5, "0" * 6
    r = ball_isometry_radius(g5, base5, g6, base6, 6)
    assert r >= 1
    assert ball_isometry_radius(g6, base6, g6, base6, 4) == 4
    assert ball_isometry_radius(build_schreier(pi, 1, SIMPLICIAL), "0", build_schreier(pi, 1, SIMPLICIAL), "1", 3) == 3


@pytest.mark.parametrize("mode", [MULTIGRAPH, SIMPLICIAL])
@pytest.mark.parametrize("fmt", ["dot", "csv"])
def test_export_round_trip(pi, mode, fmt):
    g = build_schreier(pi, 4, mode)
    back = import_graph(export_graph(g, fmt), fmt, mode=mode)
    assert back == g


def test_dot_header(pi):
    text = export_graph(build_schreier(pi, 2, SIMPLICIAL), "dot")
    assert text.startswith("graph schreier_level_2 {")
    assert "// mode=simplicial level=2 q=2" in text
    assert '"00" -- "10" [label="a"];' in text


def test_import_errors():
    with pytest.raises(ValueError):
        import_graph("digraph x {}", "dot")
    with pytest.raises(ValueError):
        import_graph("a,b,c\n", "csv")
