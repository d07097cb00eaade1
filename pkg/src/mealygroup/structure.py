"""Structural properties of an automaton group: nucleus, contraction,
fractalness, open set condition, activity growth, stabilizers, weak-branch
witnesses, relators and portrait tables.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence

import networkx as nx

from .automaton import MealyAutomaton
from .group import (
    EMPTY,
    AutomatonGroup,
    ElementTable,
    ResourceLimitExceeded,
    Vertex,
    Word,
    commutator,
    cyclic_shifts,
    index_vertex,
    is_cyclically_reduced,
    shortlex,
    vertices,
    word_inverse,
    word_multiply,
    word_power,
)

HOLDS = "holds"
FAILS = "fails"
UNDECIDED = "undecided-at-cap"


def vertex_str(v: Sequence[int]) -> str:
    return "".join(str(x) for x in v)


def parse_vertex(text: str) -> Vertex:
    return tuple(int(ch) for ch in text.strip())


@dataclass
class PropertyReport:
    property: str
    verdict: str
    parameters: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)


# -- nucleus -------------------------------------------------------------


@dataclass(frozen=True)
class Nucleus:
    """Nucleus elements in shortlex order of their representatives.

    ``contraction_depth`` is the least k with (S ∪ S^-1)·N sections at depth k
    inside N; ``lemma_depth`` is the least k with the same for (S ∪ N)^2.
    """

    elements: tuple[Word, ...]
    contraction_depth: int
    lemma_depth: Optional[int] = None
    iterations: int = 0

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _section_graph(group: AutomatonGroup, roots: Iterable[Word], table: ElementTable, cap: int) -> dict[Word, list[Word]]:
    graph: dict[Word, list[Word]] = {}
    stack = [table.canonical(r) for r in roots]
    while stack:
        u = stack.pop()
        if u in graph:
            continue
        succ = [table.canonical(s) for s in group.split(u)[1]]
        graph[u] = succ
        if len(graph) > cap:
            raise ResourceLimitExceeded(f"section graph exceeded {cap} elements; not proven contracting at this cap")
        stack.extend(s for s in succ if s not in graph)
    return graph


def _recurrent(graph: dict[Word, list[Word]]) -> set[Word]:
    """Elements lying on a cycle of the section graph."""
    g = nx.DiGraph()
    for u, succ in graph.items():
        g.add_node(u)
        g.add_edges_from((u, s) for s in succ)
    out: set[Word] = set()
    for comp in nx.strongly_connected_components(g):
        if len(comp) > 1 or any(g.has_edge(u, u) for u in comp):
            out |= comp
    return out


def depth_sections(group: AutomatonGroup, w: Word, k: int, table: ElementTable) -> dict[Word, Vertex]:
    """Distinct depth-k sections of ``w`` (canonical) with one vertex each."""
    frontier: dict[Word, Vertex] = {table.canonical(w): ()}
    for _ in range(k):
        nxt: dict[Word, Vertex] = {}
        for u, v in frontier.items():
            for x, s in enumerate(group.split(u)[1]):
                nxt.setdefault(table.canonical(s), v + (x,))
        frontier = nxt
    return frontier


def _inclusion_depth(group, left: Sequence[Word], right: Sequence[Word], members: set[Word], table, max_depth) -> Optional[int]:
    products = {word_multiply(x, y) for x in left for y in right}
    # sections of elements of a section-closed set stay inside it, so it is
    # enough to find the least k per product and take the maximum
    worst = 0
    for p in sorted(products, key=shortlex):
        k = 0
        while not set(depth_sections(group, p, k, table)) <= members:
            k += 1
            if k > max_depth:
                return None
        worst = max(worst, k)
    return worst


def compute_nucleus(
    group: AutomatonGroup,
    cap: int = 10_000,
    max_iterations: int = 64,
    max_depth: int = 32,
    table: Optional[ElementTable] = None,
) -> Nucleus:
    """Nucleus by fixed-point iteration.

    Start from the recurrent elements of the section graph of S ∪ S^-1 and
    close under sections. Then repeatedly add the recurrent sections of the
    products (N ∪ S^±)·N until nothing new appears. Every element kept lies on
    a cycle of sections, so it belongs to the nucleus; the fixed point is
    certified by the depth at which all (S ∪ S^-1)·N sections fall into N.
    """
    table = table or ElementTable(group)
    gens = [(g,) for g in group.symmetric_generators]
    roots = [EMPTY] + gens
    members = set(_section_graph(group, _recurrent(_section_graph(group, roots, table, cap)), table, cap))
    members.add(table.canonical(EMPTY))
    iterations = 0
    while True:
        iterations += 1
        if iterations > max_iterations:
            raise ResourceLimitExceeded(f"nucleus iteration did not stabilise in {max_iterations} rounds")
        left = sorted(members | {table.canonical(g) for g in gens}, key=shortlex)
        right = sorted(members, key=shortlex)
        products = [word_multiply(x, y) for x in left for y in right]
        new = _recurrent(_section_graph(group, products, table, cap)) - members
        if not new:
            break
        members |= set(_section_graph(group, new, table, cap))
        if len(members) > cap:
            raise ResourceLimitExceeded(f"nucleus exceeded {cap} elements; not proven contracting at this cap")
    ordered = sorted(members, key=shortlex)
    depth = _inclusion_depth(group, [table.canonical(g) for g in gens], ordered, members, table, max_depth)
    if depth is None:
        raise ResourceLimitExceeded(f"no contraction depth up to {max_depth}; not proven contracting")
    lemma = _inclusion_depth(group, sorted(members | {table.canonical(g) for g in gens}, key=shortlex), ordered, members, table, max_depth)
    return Nucleus(tuple(ordered), depth, lemma, iterations)


def verify_contraction(group: AutomatonGroup, nucleus: Iterable[Word], depth: int, table: Optional[ElementTable] = None) -> PropertyReport:
    """Check that every depth-``depth`` section of every (S ∪ S^-1)·N product
    lies in N (up to group equality)."""
    table = table or ElementTable(group)
    members = {table.canonical(w) for w in nucleus}
    members.add(table.canonical(EMPTY))
    report = PropertyReport("contracting", HOLDS, {"depth": depth, "nucleus_size": len(members)})
    for s in group.symmetric_generators:
        for y in sorted(members, key=shortlex):
            p = word_multiply((s,), y)
            for sec, v in depth_sections(group, p, depth, table).items():
                if sec in members:
                    report.witnesses.append({"product": group.render(p), "vertex": vertex_str(v), "member": group.render(sec)})
                else:
                    report.verdict = FAILS
                    report.counterexamples.append({"product": group.render(p), "vertex": vertex_str(v), "section": group.render(sec)})
    return report


# -- self-replication and open set condition ------------------------------


def is_level_transitive(group: AutomatonGroup, n: int) -> bool:
    """Whether the generators act transitively on level ``n``."""
    q = group.q
    perms = group.level_permutations(n)
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for g in group.generators:
            j = int(perms[g][i])
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return len(seen) == q**n


def reduced_words(group: AutomatonGroup, max_length: int) -> Iterable[Word]:
    """All freely reduced words up to ``max_length``, by length then letter."""
    letters = group.symmetric_generators
    layer: list[Word] = [EMPTY]
    yield EMPTY
    for _ in range(max_length):
        nxt = []
        for w in layer:
            for g in letters:
                if not w or w[-1] != -g:
                    nxt.append(w + (g,))
        yield from nxt
        layer = nxt


def check_fractal(group: AutomatonGroup, search_radius: int = 3) -> PropertyReport:
    """Level-1 transitivity plus, for every generator s (and inverse) and every
    letter x, some g in the first-level stabilizer with g|_x = s."""
    report = PropertyReport("fractal", HOLDS, {"search_radius": search_radius})
    if not is_level_transitive(group, 1):
        report.verdict = FAILS
        report.counterexamples.append({"reason": "not transitive on the first level"})
        return report
    ident = tuple(range(group.q))
    wanted = {(x, s) for x in range(group.q) for s in group.symmetric_generators}
    found: dict[tuple[int, int], Word] = {}
    for w in reduced_words(group, search_radius):
        if not wanted:
            break
        perm, secs = group.split(w)
        if perm != ident:
            continue
        for x, s in sorted(wanted):
            if group.words_equal(secs[x], (s,)):
                found[(x, s)] = w
                wanted.discard((x, s))
    for (x, s), w in sorted(found.items()):
        report.witnesses.append({"element": group.render(w), "letter": x, "section": group.render((s,))})
    if wanted:
        report.verdict = UNDECIDED
        for x, s in sorted(wanted):
            report.counterexamples.append({"letter": x, "generator": group.render((s,))})
    return report


def trivial_restriction(group: AutomatonGroup, w: Word, max_depth: int) -> Optional[Vertex]:
    """First vertex (breadth-first, lexicographic) where ``w`` restricts to 1."""
    for n in range(max_depth + 1):
        for v in vertices(group.q, n):
            if group.is_trivial(group.section(w, v)):
                return v
    return None


def check_open_set_condition(group: AutomatonGroup, nucleus: Iterable[Word], max_depth: int = 4) -> PropertyReport:
    report = PropertyReport("open-set", HOLDS, {"max_depth": max_depth})
    for w in nucleus:
        v = trivial_restriction(group, w, max_depth)
        if v is None:
            report.verdict = FAILS
            report.counterexamples.append({"element": group.render(w)})
        else:
            report.witnesses.append({"element": group.render(w), "vertex": vertex_str(v)})
    return report


# -- activity growth ------------------------------------------------------


@dataclass(frozen=True)
class Activity:
    kind: str  # "bounded", "polynomial" or "exponential"
    degree: Optional[int] = None
    cycles: tuple[tuple[str, ...], ...] = ()

    def __str__(self):
        if self.kind == "polynomial":
            return f"polynomial({self.degree})"
        return self.kind


def _rotate(cycle: list[str], order: dict[str, int]) -> tuple[str, ...]:
    i = min(range(len(cycle)), key=lambda k: order[cycle[k]])
    c = cycle[i:] + cycle[:i]
    return tuple(c + [c[0]])


def canonical_cycle(m: MealyAutomaton, cycle: Sequence[str]) -> tuple[str, ...]:
    """Closed cycle (first state repeated at the end) rotated to start at its
    earliest-declared state."""
    body = list(cycle[:-1]) if len(cycle) > 1 and cycle[0] == cycle[-1] else list(cycle)
    return _rotate(body, {name: i for i, name in enumerate(m.states)})


def activity_class(m: MealyAutomaton) -> Activity:
    """Activity growth read off the Moore diagram of the non-identity states."""
    g = nx.MultiDiGraph()
    live = [s for s in range(len(m.states)) if not m.is_identity(s)]
    g.add_nodes_from(m.states[s] for s in live)
    for s in live:
        for x in range(m.q):
            t = m.transition[s][x]
            if not m.is_identity(t):
                g.add_edge(m.states[s], m.states[t])
    order = {name: i for i, name in enumerate(m.states)}
    cyclic = []
    for comp in nx.strongly_connected_components(g):
        sub = g.subgraph(comp)
        edges = sub.number_of_edges()
        if edges > len(comp):
            cycles = sorted(
                {_rotate(c, order) for c in nx.simple_cycles(nx.DiGraph(sub))},
                key=lambda c: (len(c), [order[x] for x in c]),
            )
            return Activity("exponential", None, tuple(cycles))
        if edges == len(comp):
            cyclic.append(comp)
    if not cyclic:
        return Activity("bounded", 0)
    # longest chain of cycles in the condensation
    cond = nx.condensation(g)
    weight = {}
    for node, data in cond.nodes(data=True):
        weight[node] = 1 if any(data["members"] == set(c) for c in cyclic) else 0
    best = {}
    for node in reversed(list(nx.topological_sort(cond))):
        tail = max((best[s] for s in cond.successors(node)), default=0)
        best[node] = weight[node] + tail
    degree = max(best.values()) - 1
    cycles = tuple(sorted(_rotate(next(nx.simple_cycles(nx.DiGraph(g.subgraph(c)))), order) for c in cyclic))
    if degree == 0:
        return Activity("bounded", 0, cycles)
    return Activity("polynomial", degree, cycles)


# -- stabilizers ----------------------------------------------------------


def stabilizer_member(group: AutomatonGroup, w: Word, n: int) -> bool:
    """Whether ``w`` fixes every vertex of level ``n``."""
    if n < 0:
        raise ValueError("level must be non-negative")
    ident = tuple(range(group.q))
    frontier = {w}
    for _ in range(n):
        nxt = set()
        for u in frontier:
            if not u:
                continue
            perm, secs = group.split(u)
            if perm != ident:
                return False
            nxt.update(secs)
        frontier = nxt
    return True


def stabilizer_level(group: AutomatonGroup, w: Word, max_level: int) -> int:
    """Largest n <= max_level with ``w`` in St(n)."""
    n = 0
    while n < max_level and stabilizer_member(group, w, n + 1):
        n += 1
    return n


def rigid_stabilizer_member(group: AutomatonGroup, w: Word, v: Sequence[int]) -> bool:
    v = tuple(v)
    if not stabilizer_member(group, w, len(v)):
        return False
    for u in vertices(group.q, len(v)):
        if u != v and not group.is_trivial(group.section(w, u)):
            return False
    return True


def verify_weak_branch_witness(group: AutomatonGroup, k: int, x: str = "a", y: str = "c", vertex: str = "0111") -> PropertyReport:
    """Check w_k = [x, y^(-2^k)] for k down to 1: w_k is nontrivial, lies in the
    rigid stabilizer of vertex^k, and restricts to w_(k-1) at ``vertex``
    (with w_0 = [x, y^-1]) while its other sections at that level are trivial."""
    if k < 1:
        raise ValueError("k must be >= 1")
    a, c = (group.letter(x),), (group.letter(y),)
    v = parse_vertex(vertex)
    report = PropertyReport("weak-branch", HOLDS, {"k": k, "vertex": vertex})

    def w(j):
        return commutator(a, word_power(c, -(2**j))) if j > 0 else commutator(a, word_inverse(c))

    for j in range(k, 0, -1):
        wj = w(j)
        checks = {
            "nontrivial": not group.is_trivial(wj),
            "rigid": rigid_stabilizer_member(group, wj, v * j),
            "other_sections_trivial": rigid_stabilizer_member(group, wj, v),
            "section": group.words_equal(group.section(wj, v), w(j - 1)),
        }
        if all(checks.values()):
            report.witnesses.append({"k": j, "element": group.render(wj), "vertex": vertex_str(v * j), "section": group.render(w(j - 1))})
        else:
            report.verdict = FAILS
            report.counterexamples.append({"k": j, "element": group.render(wj), **{n: ok for n, ok in checks.items()}})
            break
    return report


# -- relators -------------------------------------------------------------


@dataclass(frozen=True)
class RelatorSet:
    max_length: int
    relators: tuple[Word, ...]
    mode: str = "minimal"

    def __len__(self):
        return len(self.relators)

    def __iter__(self):
        return iter(self.relators)

    def contains_cyclic(self, w: Word) -> bool:
        """Whether some relator is a cyclic permutation of ``w`` or of ``w^-1``."""
        target = canonical_cyclic(w)
        return any(canonical_cyclic(r) == target for r in self.relators)


def canonical_cyclic(w: Word) -> Word:
    """Shortlex-least word among the cyclic permutations of ``w`` and ``w^-1``."""
    if not w:
        return w
    cands = list(cyclic_shifts(w)) + list(cyclic_shifts(word_inverse(w)))
    return min(cands, key=shortlex)


def _equality_classes(group: AutomatonGroup, words: list[Word]) -> list[list[Word]]:
    buckets: dict[bytes, list[list[Word]]] = {}
    for w in words:
        classes = buckets.setdefault(group.fingerprint(w), [])
        for cls in classes:
            if group.words_equal(w, cls[0]):
                cls.append(w)
                break
        else:
            classes.append([w])
    return [cls for classes in buckets.values() for cls in classes if len(cls) > 1]


def _shortened_by(r: Word, rho: Word) -> bool:
    # some cyclic conjugate of r (or r^-1) contains more than half of a
    # cyclic conjugate of rho, so r is a consequence of rho and a shorter word
    half = len(rho) // 2 + 1
    pieces = {c[:m] for c in itertools.chain(cyclic_shifts(rho), cyclic_shifts(word_inverse(rho))) for m in range(half, len(rho) + 1)}
    for c in itertools.chain(cyclic_shifts(r), cyclic_shifts(word_inverse(r))):
        for m in range(half, min(len(rho), len(r)) + 1):
            if c[:m] in pieces:
                return True
    return False


def enumerate_relations(group: AutomatonGroup, max_length: int, hash_level: int = 8, mode: str = "minimal") -> RelatorSet:
    """Trivial reduced words of length <= ``max_length``.

    Meet in the middle: a word u·v^-1 with |u| - |v| in {0, 1} is trivial iff
    u = v in the group, so only words of length <= ceil(L/2) are enumerated,
    bucketed by their action on level ``hash_level`` and compared exactly.
    ``mode="raw"`` returns every trivial reduced word; ``"minimal"`` keeps one
    cyclically reduced representative per cyclic/inverse class and drops those
    that are shortened by a shorter relator.
    """
    if max_length < 1:
        raise ValueError("max_length must be >= 1")
    if mode not in ("raw", "minimal"):
        raise ValueError(f"unknown mode {mode!r}")
    saved = group.fingerprint_level
    group.fingerprint_level = hash_level
    try:
        half = (max_length + 1) // 2
        classes = _equality_classes(group, list(reduced_words(group, half)))
    finally:
        group.fingerprint_level = saved
    found: set[Word] = set()
    for cls in classes:
        for u in cls:
            for v in cls:
                if u == v or not 0 <= len(u) - len(v) <= 1 or len(u) + len(v) > max_length:
                    continue
                if u and v and u[-1] == v[-1]:
                    continue  # u·v^-1 would not be reduced
                found.add(u + word_inverse(v))
    if mode == "raw":
        return RelatorSet(max_length, tuple(sorted(found, key=shortlex)), mode)
    reps = sorted({canonical_cyclic(r) for r in found if is_cyclically_reduced(r)}, key=shortlex)
    kept: list[Word] = []
    for r in reps:
        if not any(len(rho) < len(r) and _shortened_by(r, rho) for rho in kept):
            kept.append(r)
    return RelatorSet(max_length, tuple(kept), mode)


# -- portrait tables ------------------------------------------------------


def verify_portrait_table(group: AutomatonGroup, rows: Optional[Sequence[tuple[str, int, Sequence[str]]]] = None) -> PropertyReport:
    """Replay ``(element, level, sections)`` rows; each row asserts a trivial
    level permutation and the listed sections in lexicographic vertex order."""
    if rows is None:
        from .reference import portrait_rows

        rows = portrait_rows()
    report = PropertyReport("portrait-table", HOLDS, {"rows": len(rows)})
    for element, level, sections in rows:
        w = group.parse(element)
        p = group.portrait(w, level)
        bad = []
        if len(sections) != len(p.sections):
            bad.append({"reason": f"row lists {len(sections)} sections, level {level} has {len(p.sections)}"})
        else:
            for i, (got, text) in enumerate(zip(p.sections, sections)):
                if not group.words_equal(got, group.parse(text)):
                    bad.append({"vertex": vertex_str(index_vertex(i, group.q, level)), "expected": text, "computed": group.render(got)})
        entry = {"element": element, "level": level}
        if not p.is_trivial_permutation:
            bad.append({"reason": "permutation is not trivial"})
        if bad:
            report.verdict = FAILS
            report.counterexamples.append({**entry, "mismatches": bad})
        else:
            report.witnesses.append(entry)
    return report
