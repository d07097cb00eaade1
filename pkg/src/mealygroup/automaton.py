"""Finite invertible Mealy automata and their text format.

A definition looks like::

    alphabet: 2
    # comments start with '#'
    state a: 0 -> 1 / d ; 1 -> 0 / e
    state b: 0 -> 0 / a ; 1 -> 1 / c

Each clause ``x -> y / t`` reads "on input letter x, output y and move to t".
The name ``e`` is reserved for the identity state; it is added implicitly when
referenced without being declared.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

IDENTITY_NAME = "e"

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class AutomatonError(ValueError):
    """Invalid automaton: non-invertible state, dangling reference, ..."""


class AutomatonParseError(AutomatonError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class MealyAutomaton:
    """Invertible transducer over the alphabet ``0..q-1``.

    ``transition[s][x]`` is the index of the state reached from state ``s`` on
    letter ``x``; ``output[s][x]`` is the emitted letter.
    """

    q: int
    states: tuple[str, ...]
    transition: tuple[tuple[int, ...], ...]
    output: tuple[tuple[int, ...], ...]
    identity_state: Optional[int] = None

    def __post_init__(self):
        validate(self)

    @property
    def alphabet(self) -> range:
        return range(self.q)

    @property
    def generators(self) -> tuple[int, ...]:
        """Indices of the non-identity states, in declaration order."""
        return tuple(i for i in range(len(self.states)) if i != self.identity_state)

    def index(self, name: str) -> int:
        try:
            return self.states.index(name)
        except ValueError:
            raise KeyError(f"unknown state {name!r}") from None

    def is_identity(self, s: int) -> bool:
        return s == self.identity_state

    def __str__(self):
        return render(self)


def validate(m: MealyAutomaton) -> None:
    if m.q < 2:
        raise AutomatonError(f"alphabet size must be >= 2, got {m.q}")
    n = len(m.states)
    if n == 0:
        raise AutomatonError("automaton has no states")
    if len(set(m.states)) != n:
        dup = sorted({s for s in m.states if m.states.count(s) > 1})
        raise AutomatonError(f"duplicate state names: {', '.join(dup)}")
    for name in m.states:
        if not _NAME_RE.match(name):
            raise AutomatonError(f"invalid state name {name!r}")
    if len(m.transition) != n or len(m.output) != n:
        raise AutomatonError("transition/output tables do not match the state list")
    for s, name in enumerate(m.states):
        row_t, row_o = m.transition[s], m.output[s]
        if len(row_t) != m.q or len(row_o) != m.q:
            raise AutomatonError(f"state {name!r}: expected {m.q} entries per row")
        for t in row_t:
            if not 0 <= t < n:
                raise AutomatonError(f"state {name!r}: dangling transition target {t}")
        if sorted(row_o) != list(range(m.q)):
            raise AutomatonError(
                f"state {name!r} is not invertible: outputs {list(row_o)} are not a permutation"
            )
    if m.identity_state is not None:
        i = m.identity_state
        if not 0 <= i < n:
            raise AutomatonError(f"identity state index {i} out of range")
        if any(m.output[i][x] != x or m.transition[i][x] != i for x in range(m.q)):
            raise AutomatonError(f"state {m.states[i]!r} is marked identity but acts nontrivially")


def from_tables(
    q: int,
    table: dict[str, list[tuple[int, str]]],
    identity: Optional[str] = IDENTITY_NAME,
) -> MealyAutomaton:
    """Build from ``{state: [(output, target) for each input letter]}``.

    An identity state named ``identity`` is prepended when some row refers to
    it and it is not listed.
    """
    names = list(table)
    targets = {t for rows in table.values() for _, t in rows}
    if identity is not None and identity in targets and identity not in table:
        names.insert(0, identity)
        table = {identity: [(x, identity) for x in range(q)], **table}
    missing = sorted(targets - set(names))
    if missing:
        raise AutomatonError(f"dangling state reference(s): {', '.join(missing)}")
    pos = {name: i for i, name in enumerate(names)}
    trans = tuple(tuple(pos[t] for _, t in table[name]) for name in names)
    out = tuple(tuple(y for y, _ in table[name]) for name in names)
    id_index = pos.get(identity) if identity is not None else None
    return MealyAutomaton(q, tuple(names), trans, out, id_index)


def parse(text: str) -> MealyAutomaton:
    q = None
    rows: dict[str, list[Optional[tuple[int, str]]]] = {}
    where: dict[str, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col0 = len(line) - len(line.lstrip()) + 1
        body = line.strip()
        if body.startswith("alphabet"):
            m = re.fullmatch(r"alphabet\s*:\s*(\d+)\s*", body)
            if not m:
                raise AutomatonParseError("expected 'alphabet: <q>'", lineno, col0)
            if q is not None:
                raise AutomatonParseError("alphabet declared twice", lineno, col0)
            q = int(m.group(1))
            if q < 2:
                raise AutomatonParseError("alphabet size must be >= 2", lineno, col0 + m.start(1))
            continue
        m = re.match(r"state\s+([^\s:]+)\s*:", body)
        if not m:
            raise AutomatonParseError("expected 'alphabet:' or 'state <name>:'", lineno, col0)
        if q is None:
            raise AutomatonParseError("'alphabet: <q>' must precede state lines", lineno, col0)
        name = m.group(1)
        if not _NAME_RE.match(name):
            raise AutomatonParseError(f"invalid state name {name!r}", lineno, col0 + m.start(1))
        if name in rows:
            raise AutomatonParseError(f"state {name!r} defined twice", lineno, col0 + m.start(1))
        row: list[Optional[tuple[int, str]]] = [None] * q
        offset = m.end()
        for clause in body[offset:].split(";"):
            ccol = col0 + offset + (len(clause) - len(clause.lstrip()))
            offset += len(clause) + 1
            if not clause.strip():
                continue
            cm = re.fullmatch(r"\s*(\d+)\s*->\s*(\d+)\s*/\s*([^\s;]+)\s*", clause)
            if not cm:
                raise AutomatonParseError("expected '<letter> -> <letter> / <state>'", lineno, ccol)
            x, y, target = int(cm.group(1)), int(cm.group(2)), cm.group(3)
            for letter in (x, y):
                if letter >= q:
                    raise AutomatonParseError(f"letter {letter} outside alphabet 0..{q - 1}", lineno, ccol)
            if row[x] is not None:
                raise AutomatonParseError(f"letter {x} given twice", lineno, ccol)
            if not _NAME_RE.match(target):
                raise AutomatonParseError(f"invalid state name {target!r}", lineno, ccol)
            row[x] = (y, target)
        absent = [x for x in range(q) if row[x] is None]
        if absent:
            raise AutomatonParseError(f"state {name!r} has no clause for letter(s) {absent}", lineno, col0)
        rows[name] = row
        where[name] = (lineno, col0)
    if q is None:
        raise AutomatonParseError("missing 'alphabet: <q>' line", 1, 1)
    if not rows:
        raise AutomatonParseError("no states defined", 1, 1)
    known = set(rows) | {IDENTITY_NAME}
    for name, row in rows.items():
        for _, target in row:
            if target not in known:
                line, col = where[name]
                raise AutomatonParseError(f"state {name!r} refers to undefined state {target!r}", line, col)
    return from_tables(q, rows)  # type: ignore[arg-type]


def render(m: MealyAutomaton) -> str:
    lines = [f"alphabet: {m.q}"]
    for s, name in enumerate(m.states):
        clauses = " ; ".join(
            f"{x} -> {m.output[s][x]} / {m.states[m.transition[s][x]]}" for x in range(m.q)
        )
        lines.append(f"state {name}: {clauses}")
    return "\n".join(lines) + "\n"


def inverse_name(name: str) -> str:
    if name == IDENTITY_NAME:
        return name
    return name[: -len("_inv")] if name.endswith("_inv") else name + "_inv"


def invert_automaton(m: MealyAutomaton) -> MealyAutomaton:
    """Automaton whose state ``s_inv`` acts as the inverse of ``s``.

    ``s_inv`` outputs ``x`` on input ``s(x)`` and moves to ``(s|_x)_inv``.
    """
    trans, out = [], []
    for s in range(len(m.states)):
        t_row, o_row = [0] * m.q, [0] * m.q
        for x in range(m.q):
            y = m.output[s][x]
            o_row[y] = x
            t_row[y] = m.transition[s][x]
        trans.append(tuple(t_row))
        out.append(tuple(o_row))
    names = tuple(inverse_name(n) for n in m.states)
    return MealyAutomaton(m.q, names, tuple(trans), tuple(out), m.identity_state)


@dataclass(frozen=True)
class Arc:
    source: str
    target: str
    input: int
    output: int


@dataclass(frozen=True)
class MooreDiagram:
    vertices: tuple[str, ...]
    arcs: tuple[Arc, ...]


def moore_diagram(m: MealyAutomaton) -> MooreDiagram:
    arcs = tuple(
        Arc(m.states[s], m.states[m.transition[s][x]], x, m.output[s][x])
        for s in range(len(m.states))
        for x in range(m.q)
    )
    return MooreDiagram(m.states, arcs)


PRESETS = {
    # a = σ(d, 1), b = (a, c), c = (a, a), d = (1, b)
    "paper-Pi": """\
alphabet: 2
state e: 0 -> 0 / e ; 1 -> 1 / e
state a: 0 -> 1 / d ; 1 -> 0 / e
state b: 0 -> 0 / a ; 1 -> 1 / c
state c: 0 -> 0 / a ; 1 -> 1 / a
state d: 0 -> 0 / e ; 1 -> 1 / b
""",
    "adding-machine": """\
alphabet: 2
state e: 0 -> 0 / e ; 1 -> 1 / e
state a: 0 -> 1 / e ; 1 -> 0 / a
""",
    "grigorchuk": """\
alphabet: 2
state e: 0 -> 0 / e ; 1 -> 1 / e
state a: 0 -> 1 / e ; 1 -> 0 / e
state b: 0 -> 0 / a ; 1 -> 1 / c
state c: 0 -> 0 / a ; 1 -> 1 / d
state d: 0 -> 0 / e ; 1 -> 1 / b
""",
    "trivial": """\
alphabet: 2
state e: 0 -> 0 / e ; 1 -> 1 / e
""",
}


def build_automaton(definition: str) -> MealyAutomaton:
    """Parse a definition, or return a preset when given a preset name."""
    if definition.strip() in PRESETS:
        return parse(PRESETS[definition.strip()])
    return parse(definition)


def load_automaton(source: str) -> MealyAutomaton:
    """Preset name or path to a definition file."""
    if source in PRESETS:
        return parse(PRESETS[source])
    with open(source, encoding="utf-8") as fh:
        return parse(fh.read())
