"""Level-n Schreier graphs, the covering tower and graph export."""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
import numpy as np
from networkx.algorithms import isomorphism

from .group import AutomatonGroup, ResourceLimitExceeded, index_vertex

MULTIGRAPH = "multigraph"
SIMPLICIAL = "simplicial"
MAX_LEVEL = 14


@dataclass(frozen=True)
class SchreierGraph:
    """Vertices are level-n words in lexicographic order (index i is the
    base-q expansion of i).  Multigraph edges are ``(v, s(v), s)`` for every
    generator s and vertex v.  Simplicial edges are ``(u, v, labels)`` with
    u < v and ``labels`` the generator names joining them, comma separated."""

    level: int
    q: int
    mode: str
    edges: tuple[tuple[int, int, str], ...]

    @property
    def order(self) -> int:
        return self.q**self.level

    def vertex(self, i: int) -> str:
        return "".join(str(x) for x in index_vertex(i, self.q, self.level))

    def vertex_index(self, name: str) -> int:
        if len(name) != self.level or any(not ch.isdigit() or int(ch) >= self.q for ch in name):
            raise ValueError(f"{name!r} is not a level-{self.level} vertex")
        return _index(name, self.q)

    @property
    def vertices(self) -> list[str]:
        return [self.vertex(i) for i in range(self.order)]

    def adjacency(self) -> np.ndarray:
        """Symmetric 0/1 adjacency of the underlying simple graph."""
        a = np.zeros((self.order, self.order))
        for u, v, _ in self.edges:
            if u != v:
                a[u, v] = a[v, u] = 1.0
        return a

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        for u, v, label in self.edges:
            if u == v:
                continue
            if g.has_edge(u, v):
                labels = set(g.edges[u, v]["label"].split(",")) | set(label.split(","))
                g.edges[u, v]["label"] = ",".join(sorted(labels))
            else:
                g.add_edge(u, v, label=label)
        return g


def _index(name: str, q: int) -> int:
    i = 0
    for ch in name:
        i = i * q + int(ch)
    return i


def build_schreier(group: AutomatonGroup, n: int, mode: str = MULTIGRAPH, max_level: int = MAX_LEVEL) -> SchreierGraph:
    if n < 1:
        raise ValueError("level must be >= 1")
    if n > max_level:
        raise ResourceLimitExceeded(f"level {n} exceeds the cap of {max_level}")
    if mode not in (MULTIGRAPH, SIMPLICIAL):
        raise ValueError(f"unknown mode {mode!r}")
    perms = group.level_permutations(n)
    size = group.q**n
    if mode == MULTIGRAPH:
        edges = tuple(
            (v, int(perms[g][v]), group.names[g]) for v in range(size) for g in group.generators
        )
        return SchreierGraph(n, group.q, mode, edges)
    labels: dict[tuple[int, int], set[str]] = {}
    for g in group.generators:
        img = perms[g]
        name = group.names[g]
        for v in range(size):
            w = int(img[v])
            if w != v:
                labels.setdefault((min(v, w), max(v, w)), set()).add(name)
    order = {name: i for i, name in enumerate(group.names[g] for g in group.generators)}
    edges = tuple(
        (u, v, ",".join(sorted(ls, key=order.__getitem__))) for (u, v), ls in sorted(labels.items())
    )
    return SchreierGraph(n, group.q, mode, edges)


def components(g: SchreierGraph) -> int:
    parent = list(range(g.order))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = g.order
    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def is_connected(g: SchreierGraph) -> bool:
    return components(g) == 1


# -- covering tower ---------------------------------------------------------


@dataclass
class CoveringCheck:
    level: int
    holds: bool
    checked: int
    failures: list = field(default_factory=list)  # (generator, level-(n+1) vertex)


def check_covering_actions(lower: dict, upper: dict, q: int, level: int, names: Optional[dict] = None) -> CoveringCheck:
    """``lower[s]``/``upper[s]`` are image arrays on levels n and n+1; the
    tower is a covering iff truncation commutes with every generator."""
    failures = []
    checked = 0
    for s in sorted(lower):
        up = np.asarray(upper[s])
        low = np.asarray(lower[s])
        idx = np.arange(len(up))
        bad = np.nonzero(up // q != low[idx // q])[0]
        checked += len(up)
        label = names[s] if names else s
        failures.extend((label, "".join(map(str, index_vertex(int(i), q, level + 1)))) for i in bad)
    return CoveringCheck(level, not failures, checked, failures)


def verify_covering(group: AutomatonGroup, n: int) -> CoveringCheck:
    if n < 1:
        raise ValueError("level must be >= 1")
    lower = {g: group.level_permutations(n)[g] for g in group.generators}
    upper = {g: group.level_permutations(n + 1)[g] for g in group.generators}
    return check_covering_actions(lower, upper, group.q, n, group.names)


# -- local comparison -------------------------------------------------------


def _ball(g: nx.Graph, base: int, r: int) -> nx.Graph:
    dist = nx.single_source_shortest_path_length(g, base, cutoff=r)
    ball = g.subgraph(dist).copy()
    for v in ball:
        ball.nodes[v]["root"] = v == base
    return ball


def ball_isometry_radius(
    graph_a: SchreierGraph, base_a: str, graph_b: SchreierGraph, base_b: str, r_max: int
) -> int:
    """Largest r <= r_max for which the labeled balls of radius r around the
    two bases are isomorphic as rooted edge-labeled graphs."""
    ga, gb = graph_a.to_networkx(), graph_b.to_networkx()
    ia, ib = graph_a.vertex_index(base_a), graph_b.vertex_index(base_b)
    best = 0
    for r in range(1, r_max + 1):
        ba, bb = _ball(ga, ia, r), _ball(gb, ib, r)
        if ba.number_of_nodes() != bb.number_of_nodes() or ba.number_of_edges() != bb.number_of_edges():
            break
        matcher = isomorphism.GraphMatcher(
            ba,
            bb,
            node_match=lambda x, y: x["root"] == y["root"],
            edge_match=lambda x, y: x["label"] == y["label"],
        )
        if not matcher.is_isomorphic():
            break
        best = r
    return best


# -- export / import --------------------------------------------------------


def export_graph(g: SchreierGraph, fmt: str = "dot") -> str:
    if fmt == "dot":
        kind, arrow = ("digraph", "->") if g.mode == MULTIGRAPH else ("graph", "--")
        lines = [f"{kind} schreier_level_{g.level} {{", f"  // mode={g.mode} level={g.level} q={g.q}"]
        lines += [f'  "{g.vertex(i)}";' for i in range(g.order)]
        lines += [f'  "{g.vertex(u)}" {arrow} "{g.vertex(v)}" [label="{label}"];' for u, v, label in g.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["source", "target", "label"])
        for u, v, label in g.edges:
            w.writerow([g.vertex(u), g.vertex(v), label])
        return buf.getvalue()
    raise ValueError(f"unsupported graph format {fmt!r}")


_DOT_HEAD = re.compile(r"//\s*mode=(\w+)\s+level=(\d+)\s+q=(\d+)")
_DOT_EDGE = re.compile(r'"(\w+)"\s*(?:->|--)\s*"(\w+)"\s*\[label="([^"]*)"\]')


def import_graph(text: str, fmt: str = "dot", q: int = 2, mode: Optional[str] = None, level: Optional[int] = None) -> SchreierGraph:
    """Inverse of :func:`export_graph`.  CSV carries no header metadata, so
    ``q`` and ``mode`` (default multigraph) come from the caller; ``level``
    is read off the vertex names when not given."""
    if fmt == "dot":
        m = _DOT_HEAD.search(text)
        if not m:
            raise ValueError("missing '// mode=... level=... q=...' header")
        mode, level, q = m.group(1), int(m.group(2)), int(m.group(3))
        rows = _DOT_EDGE.findall(text)
    elif fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header != ["source", "target", "label"]:
            raise ValueError("expected header 'source,target,label'")
        rows = [tuple(r) for r in reader if r]
        mode = mode or MULTIGRAPH
    else:
        raise ValueError(f"unsupported graph format {fmt!r}")
    if level is None:
        if not rows:
            raise ValueError("cannot infer the level of an edgeless graph")
        level = len(rows[0][0])
    g = SchreierGraph(level, q, mode, ())
    edges = tuple((g.vertex_index(u), g.vertex_index(v), label) for u, v, label in rows)
    return SchreierGraph(level, q, mode, edges)
