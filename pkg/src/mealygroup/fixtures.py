"""Replays the published data for the ``paper-Pi`` automaton (see
:mod:`mealygroup.reference`) and returns one :class:`PropertyReport` per
fixture."""

from __future__ import annotations

import random
from typing import Callable, Optional

from . import reference as ref
from .group import AutomatonGroup, ElementTable, word_inverse, word_power
from .structure import (
    FAILS,
    HOLDS,
    Nucleus,
    PropertyReport,
    activity_class,
    canonical_cycle,
    check_fractal,
    check_open_set_condition,
    compute_nucleus,
    depth_sections,
    enumerate_relations,
    parse_vertex,
    rigid_stabilizer_member,
    stabilizer_member,
    verify_contraction,
    verify_portrait_table,
    verify_weak_branch_witness,
)


class FixtureContext:
    """Shared group, element table and (lazily computed) nucleus."""

    def __init__(self, group: AutomatonGroup):
        self.group = group
        self.table = ElementTable(group)
        self._nucleus: Optional[Nucleus] = None

    @property
    def nucleus(self) -> Nucleus:
        if self._nucleus is None:
            self._nucleus = compute_nucleus(self.group, table=self.table)
        return self._nucleus

    def element_set(self, exprs) -> set:
        return {self.table.canonical(self.group.parse(e)) for e in exprs}

    def nucleus_members(self) -> set:
        return {self.table.canonical(w) for w in self.nucleus}


def _report(name: str, failures: list, parameters=None, witnesses=None) -> PropertyReport:
    return PropertyReport(name, FAILS if failures else HOLDS, parameters or {}, witnesses or [], failures)


def nucleus_fixture(ctx: FixtureContext) -> PropertyReport:
    g = ctx.group
    n = ctx.nucleus
    members = ctx.nucleus_members()
    listed = [g.parse(e) for e in ref.NUCLEUS_HALF]
    listed += [word_inverse(w) for w in listed]
    missing = [g.render(w) for w in listed if ctx.table.canonical(w) not in members]
    failures = [{"missing": m} for m in missing]
    if len(n) != ref.NUCLEUS_SIZE:
        failures.append({"size": len(n), "expected": ref.NUCLEUS_SIZE})
    distinct_listed = len({ctx.table.canonical(w) for w in listed})
    return _report(
        "nucleus",
        failures,
        {"size": len(n), "listed_distinct_nonidentity": distinct_listed, "contraction_depth": n.contraction_depth, "lemma_depth": n.lemma_depth},
    )


def contraction_fixture(ctx: FixtureContext) -> PropertyReport:
    rep = verify_contraction(ctx.group, ctx.nucleus, ref.CONTRACTION_DEPTH, ctx.table)
    if ctx.nucleus.contraction_depth != ref.CONTRACTION_DEPTH:
        rep.verdict = FAILS
        rep.counterexamples.append({"computed_depth": ctx.nucleus.contraction_depth})
    rep.witnesses = rep.witnesses[:20]
    return rep


def appendix_fixture(ctx: FixtureContext, sample: Optional[int] = None, seed: int = 0) -> PropertyReport:
    """Depth-7 section sets of s·x against the appendix rows."""
    g = ctx.group
    rows = ref.appendix_rows()
    if sample is not None:
        rows = random.Random(seed).sample(rows, sample)
    members = ctx.nucleus_members()
    failures = []
    for expr, items in rows:
        got = set(depth_sections(g, g.parse(expr), ref.CONTRACTION_DEPTH, ctx.table))
        want = ctx.element_set(items)
        if got != want or not got <= members:
            failures.append({"product": expr, "listed": items, "computed": sorted(g.render(w) for w in got)})
    return _report("appendix-sections", failures, {"rows": len(rows), "depth": ref.CONTRACTION_DEPTH})


def closure_fixture(ctx: FixtureContext) -> PropertyReport:
    """Sections of ab: the listed set is the depth-7 set and sits inside the
    depth <= 7 closure."""
    g = ctx.group
    w = g.parse("ab")
    listed = ctx.element_set(["1", "d", "a", "c", "cb", "b"])
    exact = set(g.section_closure(w, 7, min_depth=7, table=ctx.table).members)
    upto = set(g.section_closure(w, 7, table=ctx.table).members)
    failures = []
    if exact != listed:
        failures.append({"depth_7": sorted(g.render(u) for u in exact)})
    if not listed <= upto:
        failures.append({"not_in_closure": sorted(g.render(u) for u in listed - upto)})
    return _report("closure-ab", failures, {"depth_le_7": sorted(g.render(u) for u in upto)})


def fractal_fixture(ctx: FixtureContext) -> PropertyReport:
    g = ctx.group
    rep = check_fractal(g, 3)
    for elem, letter, gen in ref.FRACTAL_WITNESSES:
        w = g.parse(elem)
        ok = stabilizer_member(g, w, 1) and g.words_equal(g.section(w, parse_vertex(letter)), g.parse(gen))
        if not ok:
            rep.verdict = FAILS
            rep.counterexamples.append({"element": elem, "letter": letter, "expected": gen})
    return rep


def open_set_fixture(ctx: FixtureContext) -> PropertyReport:
    g = ctx.group
    rep = check_open_set_condition(g, ctx.nucleus, 4)
    for elem, vertex in ref.OPEN_SET_WITNESSES:
        if not g.is_trivial(g.section(g.parse(elem), parse_vertex(vertex))):
            rep.verdict = FAILS
            rep.counterexamples.append({"element": elem, "vertex": vertex})
    return rep


def activity_fixture(ctx: FixtureContext) -> PropertyReport:
    act = activity_class(ctx.group.automaton)
    failures = []
    if act.kind != "exponential":
        failures.append({"activity": str(act)})
    for cyc in ref.INTERSECTING_CYCLES:
        if canonical_cycle(ctx.group.automaton, cyc) not in act.cycles:
            failures.append({"missing_cycle": "->".join(cyc)})
    return _report("activity", failures, {"activity": str(act)}, ["->".join(c) for c in act.cycles])


def weak_branch_fixture(ctx: FixtureContext, k_max: int = 3) -> PropertyReport:
    failures, witnesses = [], []
    for k in range(1, k_max + 1):
        rep = verify_weak_branch_witness(ctx.group, k)
        (witnesses if rep.holds else failures).append({"k": k, **(rep.witnesses[0] if rep.holds else rep.counterexamples[0])})
    return _report("weak-branch", failures, {"k_max": k_max}, witnesses)


def stabilizer_law_fixture(ctx: FixtureContext, n_max: int = 3) -> PropertyReport:
    g = ctx.group
    failures, witnesses = [], []
    for name, offset in ref.STABILIZER_POWER_LAWS:
        for n in range(1, n_max + 1):
            w = word_power((g.letter(name),), 2**n)
            lo = 3 * n + offset
            inside, outside = stabilizer_member(g, w, lo), stabilizer_member(g, w, lo + 1)
            entry = {"element": f"{name}^{2 ** n}", "in": lo, "not_in": lo + 1}
            (witnesses if inside and not outside else failures).append(entry)
    return _report("stabilizer-laws", failures, {"n_max": n_max}, witnesses)


def stabilizer_list_fixture(ctx: FixtureContext) -> PropertyReport:
    g = ctx.group
    failures = []
    count = 0
    for level, items in ref.STABILIZER_GENERATORS.items():
        for item in items:
            for e in ref.expand_signs(item):
                count += 1
                if not stabilizer_member(g, g.parse(e), level):
                    failures.append({"element": e, "level": level})
    return _report("stabilizer-generators", failures, {"checked": count})


def rigid_list_fixture(ctx: FixtureContext) -> PropertyReport:
    g = ctx.group
    failures = []
    count = 0
    for vertex, items in ref.RIGID_GENERATORS.items():
        for item in items:
            for e in ref.expand_signs(item):
                count += 1
                if not rigid_stabilizer_member(g, g.parse(e), parse_vertex(vertex)):
                    failures.append({"element": e, "vertex": vertex})
    return _report("rigid-generators", failures, {"checked": count})


def relator_fixture(ctx: FixtureContext) -> PropertyReport:
    g = ctx.group
    failures = []
    words = ref.relators()
    for e in words:
        if not g.is_trivial(g.parse(e)):
            failures.append({"relator": e})
    return _report("relators", failures, {"listed": len(ref.RELATORS), "expanded": len(words)})


def enumeration_fixture(ctx: FixtureContext, max_length: int = 8) -> PropertyReport:
    g = ctx.group
    found = enumerate_relations(g, max_length)
    short = enumerate_relations(g, 3)
    failures = []
    if not found.contains_cyclic(g.parse("[d,d^a]")):
        failures.append({"missing": "[d,d^a]"})
    if len(short):
        failures.append({"short_relators": [g.render(r) for r in short]})
    return _report("relation-enumeration", failures, {"max_length": max_length}, [g.render(r) for r in found])


def portrait_fixture(ctx: FixtureContext) -> PropertyReport:
    return verify_portrait_table(ctx.group)


FIXTURES: dict[str, Callable[[FixtureContext], PropertyReport]] = {
    "nucleus": nucleus_fixture,
    "contraction": contraction_fixture,
    "appendix-sections": appendix_fixture,
    "closure-ab": closure_fixture,
    "fractal": fractal_fixture,
    "open-set": open_set_fixture,
    "activity": activity_fixture,
    "weak-branch": weak_branch_fixture,
    "stabilizer-laws": stabilizer_law_fixture,
    "stabilizer-generators": stabilizer_list_fixture,
    "rigid-generators": rigid_list_fixture,
    "relators": relator_fixture,
    "relation-enumeration": enumeration_fixture,
    "portrait-table": portrait_fixture,
}


def run_fixtures(group: AutomatonGroup, names=None) -> list[PropertyReport]:
    ctx = FixtureContext(group)
    return [FIXTURES[name](ctx) for name in (names or FIXTURES)]
