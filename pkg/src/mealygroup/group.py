"""The group generated by an invertible Mealy automaton.

Group elements are words over the non-identity states and their inverses,
stored as tuples of nonzero ints: ``+(i + 1)`` is state ``i`` and ``-(i + 1)``
its inverse.  Words are always freely reduced.

Words act on the left and the rightmost letter acts first, so
``(uv)(x) = u(v(x))`` and ``(uv)|_x = u|_{v(x)} v|_x``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .automaton import MealyAutomaton

Word = tuple[int, ...]
Vertex = tuple[int, ...]

EMPTY: Word = ()

DEFAULT_CAP = 10**6


class ResourceLimitExceeded(RuntimeError):
    """A search outgrew its cap; the question is undecided at that cap."""


def reduce_word(letters: Iterable[int]) -> Word:
    stack: list[int] = []
    for g in letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return tuple(stack)


def word_multiply(u: Word, v: Word) -> Word:
    # u, v are reduced, so cancellation only happens at the seam
    i = 0
    n = min(len(u), len(v))
    while i < n and u[-1 - i] == -v[i]:
        i += 1
    return u[: len(u) - i] + v[i:]


def word_inverse(w: Word) -> Word:
    return tuple(-g for g in reversed(w))


def word_power(w: Word, k: int) -> Word:
    if k < 0:
        w, k = word_inverse(w), -k
    out = EMPTY
    for _ in range(k):
        out = word_multiply(out, w)
    return out


def conjugate(x: Word, y: Word) -> Word:
    """``x^y = y^-1 x y``."""
    return word_multiply(word_multiply(word_inverse(y), x), y)


def commutator(x: Word, y: Word) -> Word:
    """``[x, y] = x^-1 y^-1 x y``."""
    return word_multiply(
        word_multiply(word_inverse(x), word_inverse(y)), word_multiply(x, y)
    )


def is_cyclically_reduced(w: Word) -> bool:
    return len(w) < 2 or w[0] != -w[-1]


def cyclic_shifts(w: Word) -> Iterator[Word]:
    for i in range(len(w)):
        yield w[i:] + w[:i]


def vertices(q: int, n: int) -> Iterator[Vertex]:
    """Level-n vertices in lexicographic order."""
    return itertools.product(range(q), repeat=n)


def vertex_index(v: Sequence[int], q: int) -> int:
    i = 0
    for x in v:
        i = i * q + x
    return i


def index_vertex(i: int, q: int, n: int) -> Vertex:
    out = [0] * n
    for k in range(n - 1, -1, -1):
        i, out[k] = divmod(i, q)
    return tuple(out)


@dataclass(frozen=True)
class Portrait:
    """Level-n permutation (as image indices) plus the q^n sections."""

    level: int
    permutation: tuple[int, ...]
    sections: tuple[Word, ...]

    @property
    def is_trivial_permutation(self) -> bool:
        return all(i == p for i, p in enumerate(self.permutation))


@dataclass(frozen=True)
class SectionClosure:
    root: Word
    members: tuple[Word, ...]


class AutomatonGroup:
    """Word arithmetic, tree action and the word problem for ``<m>``.

    The instance memoizes section computations and word-problem answers; it
    holds no other mutable state.
    """

    def __init__(self, automaton: MealyAutomaton, cap: int = DEFAULT_CAP, fingerprint_level: int = 8):
        self.automaton = automaton
        self.q = automaton.q
        self.cap = cap
        self.fingerprint_level = fingerprint_level
        m = automaton
        self.generators: Word = tuple(i + 1 for i in m.generators)
        self.names = {i + 1: m.states[i] for i in m.generators}
        self._by_name = {name: g for g, name in self.names.items()}
        # out[g][x], sec[g][x] for signed letters g; sec is a letter or 0
        self._out: dict[int, tuple[int, ...]] = {}
        self._sec: dict[int, tuple[int, ...]] = {}
        for g in self.generators:
            s = g - 1
            o = m.output[s]
            self._out[g] = o
            self._sec[g] = tuple(self._letter(m.transition[s][x]) for x in range(m.q))
            inv_o = [0] * m.q
            inv_s = [0] * m.q
            for x in range(m.q):
                inv_o[o[x]] = x
                inv_s[o[x]] = -self._letter(m.transition[s][x])
            self._out[-g] = tuple(inv_o)
            self._sec[-g] = tuple(inv_s)
        self._split_cache: dict[Word, tuple[tuple[int, ...], tuple[Word, ...]]] = {}
        self._trivial: set[Word] = {EMPTY}
        self._nontrivial: set[Word] = set()
        self._level_perms: dict[int, dict[int, np.ndarray]] = {}

    def _letter(self, state: int) -> int:
        return 0 if self.automaton.is_identity(state) else state + 1

    # -- names ---------------------------------------------------------

    @property
    def symmetric_generators(self) -> Word:
        """S ∪ S^-1 in the order a, a^-1, b, b^-1, ..."""
        return tuple(x for g in self.generators for x in (g, -g))

    def letter(self, name: str) -> int:
        return self._by_name[name]

    def word(self, *names: str) -> Word:
        """``group.word("a", "b^-1")`` style helper for plain letters."""
        out = EMPTY
        for name in names:
            base, _, exp = name.partition("^")
            out = word_multiply(out, word_power((self.letter(base),), int(exp) if exp else 1))
        return out

    def render(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        for g, run in itertools.groupby(w):
            k = len(list(run))
            name = self.names[abs(g)]
            e = k if g > 0 else -k
            parts.append(name if e == 1 else f"{name}^{e}")
        return " ".join(parts)

    def parse(self, text: str) -> Word:
        from .expr import parse_word_expression

        return parse_word_expression(text, self)

    # -- action and sections -------------------------------------------

    def split(self, w: Word) -> tuple[tuple[int, ...], tuple[Word, ...]]:
        """Root permutation of ``w`` and its first-level sections."""
        hit = self._split_cache.get(w)
        if hit is not None:
            return hit
        q = self.q
        perm = [0] * q
        secs = []
        out, sec = self._out, self._sec
        for x in range(q):
            y = x
            parts = []
            for g in reversed(w):
                h = sec[g][y]
                y = out[g][y]
                if h:
                    parts.append(h)
            perm[x] = y
            parts.reverse()
            secs.append(reduce_word(parts))
        result = (tuple(perm), tuple(secs))
        if len(self._split_cache) < 4 * self.cap:
            self._split_cache[w] = result
        return result

    def root_permutation(self, w: Word) -> tuple[int, ...]:
        return self.split(w)[0]

    def apply(self, w: Word, v: Sequence[int]) -> Vertex:
        states = list(w)
        out, sec = self._out, self._sec
        image = []
        for x in v:
            y = x
            for i in range(len(states) - 1, -1, -1):
                g = states[i]
                if g:
                    states[i] = sec[g][y]
                    y = out[g][y]
            image.append(y)
        return tuple(image)

    def section(self, w: Word, v: Sequence[int]) -> Word:
        for x in v:
            if not w:
                break
            w = self.split(w)[1][x]
        return w

    # -- word problem ----------------------------------------------------

    def level_permutations(self, n: int) -> dict[int, np.ndarray]:
        """For each signed letter, its action on level-n vertex indices."""
        if n in self._level_perms:
            return self._level_perms[n]
        q = self.q
        letters = list(self.symmetric_generators)
        code = {g: i + 1 for i, g in enumerate(letters)}  # 0 is the identity
        out_tab = np.zeros((len(letters) + 1, q), dtype=np.int64)
        sec_tab = np.zeros((len(letters) + 1, q), dtype=np.int64)
        out_tab[0] = np.arange(q)
        for g in letters:
            out_tab[code[g]] = self._out[g]
            sec_tab[code[g]] = [code[h] if h else 0 for h in self._sec[g]]
        result = {}
        for g in letters:
            img = np.zeros(1, dtype=np.int64)
            st = np.array([code[g]], dtype=np.int64)
            for _ in range(n):
                img = (img[:, None] * q + out_tab[st]).reshape(-1)
                st = sec_tab[st].reshape(-1)
            result[g] = img
        self._level_perms[n] = result
        return result

    def level_action(self, w: Word, n: int) -> np.ndarray:
        """Image indices of all level-n vertices under ``w``."""
        perms = self.level_permutations(n)
        idx = np.arange(self.q**n, dtype=np.int64)
        for g in reversed(w):
            idx = perms[g][idx]
        return idx

    def fingerprint(self, w: Word) -> bytes:
        return self.level_action(w, self.fingerprint_level).astype(np.int32).tobytes()

    def is_trivial(self, w: Word, cap: Optional[int] = None) -> bool:
        """Exact word problem: BFS over the section closure of ``w``.

        Every section is at most as long as ``w``, so the closure is finite;
        ``ResourceLimitExceeded`` is raised if it exceeds ``cap`` members.
        """
        w = reduce_word(w)
        if w in self._trivial:
            return True
        if w in self._nontrivial:
            return False
        cap = self.cap if cap is None else cap
        ident = tuple(range(self.q))
        seen = {w}
        queue = deque([w])
        while queue:
            u = queue.popleft()
            if u in self._trivial:
                continue
            if u in self._nontrivial:
                self._nontrivial.add(w)
                return False
            perm, secs = self.split(u)
            if perm != ident:
                self._nontrivial.add(w)
                return False
            for s in secs:
                if s not in seen:
                    seen.add(s)
                    if len(seen) > cap:
                        raise ResourceLimitExceeded(
                            f"section closure exceeded {cap} words; triviality undecided"
                        )
                    queue.append(s)
        self._trivial.update(seen)
        return True

    def words_equal(self, u: Word, v: Word) -> bool:
        return self.is_trivial(word_multiply(u, word_inverse(v)))

    def portrait(self, w: Word, n: int, max_vertices: int = 1 << 22) -> Portrait:
        if n < 0:
            raise ValueError("level must be non-negative")
        if self.q**n > max_vertices:
            raise ResourceLimitExceeded(f"level {n} has more than {max_vertices} vertices")
        perm = [0]
        secs = [w]
        q = self.q
        for _ in range(n):
            new_perm = [0] * (len(perm) * q)
            new_secs: list[Word] = [EMPTY] * (len(perm) * q)
            for i, (p, s) in enumerate(zip(perm, secs)):
                if s:
                    sp, ss = self.split(s)
                else:
                    sp, ss = tuple(range(q)), (EMPTY,) * q
                for x in range(q):
                    new_perm[i * q + x] = p * q + sp[x]
                    new_secs[i * q + x] = ss[x]
            perm, secs = new_perm, new_secs
        return Portrait(n, tuple(perm), tuple(secs))

    def section_closure(
        self,
        w: Word,
        max_depth: Optional[int] = None,
        min_depth: int = 0,
        table: Optional["ElementTable"] = None,
    ) -> SectionClosure:
        """Sections of ``w`` at depths ``min_depth..max_depth``, deduplicated
        as group elements.  ``max_depth=None`` means all depths."""
        table = table or ElementTable(self)
        collected: dict[Word, None] = {}
        frontier = {table.canonical(w)}
        seen = set(frontier)
        depth = 0
        while frontier:
            if depth >= min_depth:
                for u in frontier:
                    collected.setdefault(u, None)
            if max_depth is not None and depth >= max_depth:
                break
            nxt = {table.canonical(s) for u in frontier for s in self.split(u)[1]}
            if max_depth is None:
                # all depths: plain reachability, stop once nothing is new
                nxt -= seen
                seen |= nxt
            frontier = nxt
            depth += 1
            if len(collected) > self.cap:
                raise ResourceLimitExceeded("section closure exceeded cap")
        members = tuple(sorted(collected, key=shortlex))
        return SectionClosure(w, members)


def shortlex(w: Word) -> tuple:
    return (len(w), tuple((abs(g), g < 0) for g in w))


class ElementTable:
    """Canonical representatives of group elements.

    Words are bucketed by their action on a fixed level, then compared exactly
    with ``words_equal`` inside a bucket.  The first word seen for an element
    becomes its representative unless a shortlex-smaller one is registered
    through ``canonical(..., prefer=True)``.
    """

    def __init__(self, group: AutomatonGroup):
        self.group = group
        self._rep: dict[Word, Word] = {}
        self._buckets: dict[bytes, list[Word]] = {}

    def canonical(self, w: Word) -> Word:
        hit = self._rep.get(w)
        if hit is not None:
            return hit
        bucket = self._buckets.setdefault(self.group.fingerprint(w), [])
        for r in bucket:
            if self.group.words_equal(w, r):
                self._rep[w] = r
                return r
        bucket.append(w)
        self._rep[w] = w
        return w

    def find(self, w: Word) -> Optional[Word]:
        """Representative of ``w`` if its element is registered, else None."""
        hit = self._rep.get(w)
        if hit is not None:
            return hit
        for r in self._buckets.get(self.group.fingerprint(w), ()):
            if self.group.words_equal(w, r):
                self._rep[w] = r
                return r
        return None

    def __len__(self):
        return sum(len(b) for b in self._buckets.values())
