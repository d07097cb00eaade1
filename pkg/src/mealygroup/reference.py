"""Published tables for the 5-state automaton ``a = σ(d, 1), b = (a, c),
c = (a, a), d = (1, b)`` (preset ``paper-Pi``), transcribed into the word
grammar of :mod:`mealygroup.expr`.

Entries containing ``±``/``∓`` stand for two words: every ``±`` takes the same
sign and every ``∓`` the opposite one (see :func:`expand_signs`).
"""

from __future__ import annotations


def expand_signs(text: str) -> list[str]:
    """``"[d, d^(a^±1)]"`` -> ``["[d, d^(a^1)]", "[d, d^(a^-1)]"]``."""
    if "±" not in text and "∓" not in text:
        return [text]
    plus = text.replace("±", "").replace("∓", "-")
    minus = text.replace("±", "-").replace("∓", "")
    return [plus, minus]


# Half of the nucleus; the nucleus is U ∪ U^-1 ∪ {1}.
NUCLEUS_HALF = (
    "a", "b", "d", "c", "da", "bd", "cb", "ac", "a^-1b", "d^-1c", "a^-1c",
    "d^-1a", "b^-1d", "c^-1b", "a^2", "a^-1da", "d^-1bd", "b^-1cb", "c^-1ac",
    "a^-1bd", "d^-1cb", "b^-1ac", "c^-1da", "a^-1cb", "d^-1ac", "b^-1da",
    "c^-1bd", "a^-1d^-1bd", "d^-1b^-1cb", "b^-1c^-1ac", "c^-1a^-1da",
    "a^-1d^-1cb", "d^-1b^-1ac",
)
NUCLEUS_SIZE = 67
CONTRACTION_DEPTH = 7

# (element, vertex) with a trivial section there
OPEN_SET_WITNESSES = (
    ("a", "1"), ("d", "0"), ("b", "01"), ("c", "11"),
    ("c^-1a^-1bd", "000"), ("b^-1c^-1da", "110"), ("d^-1b^-1ac", "000"),
    ("a^-1d^-1cb", "111"), ("a^-1d^-1ac", "111"), ("c^-1a^-1cb", "010"),
    ("b^-1c^-1bd", "000"), ("d^-1b^-1da", "000"), ("c^-1a^-1da", "001"),
    ("b^-1c^-1ac", "110"), ("d^-1b^-1cb", "110"), ("a^-1d^-1bd", "000"),
    ("d^-1b^-1c", "000"),
)

# (element of the first-level stabilizer, letter, generator it restricts to)
FRACTAL_WITNESSES = (
    ("c", "0", "a"), ("c", "1", "a"), ("c^-1", "0", "a^-1"), ("c^-1", "1", "a^-1"),
    ("ada^-1", "0", "b"), ("aba^-1", "0", "c"), ("a^2", "1", "d"),
    ("ad^-1a^-1", "0", "b^-1"), ("ab^-1a^-1", "0", "c^-1"), ("a^-2", "0", "d^-1"),
)

# Moore-diagram cycles through nontrivial states that intersect
INTERSECTING_CYCLES = (("b", "a", "d", "b"), ("b", "c", "a", "d", "b"))

# (generator, first level n such that g^(2^k) ∈ St(3k + n) \ St(3k + n + 1))
STABILIZER_POWER_LAWS = (("a", 0), ("b", 1), ("c", 1), ("d", 2))

STABILIZER_GENERATORS = {
    1: ("b", "c", "d", "a^2", "ac^±1a", "ab^±1a", "ad^±1a"),
    2: (
        "d", "a^2", "b^2", "c^2", "ad^±1a", "bd^±1b", "cd^±1c", "ab^±2a",
        "cb^±2c", "ba^±2b", "ca^±2c", "ad^±2a", "cd^±2c", "bc^±2b", "bd^±2b",
        "[a,c^±1]", "[a,d^±1]", "[b,c^±1]", "[b,d^±1]", "[c,d^±1]",
    ),
    3: (
        "a^2", "b^2", "c^2", "d^2", "(ac^±1)^2", "(bc^±1)^2", "(bd^±1)^2",
        "[a,c^±1]", "[b,c^±1]", "[b,d^±1]",
    ),
}

RIGID_GENERATORS = {
    "0": ("d^(a^±1)",),
    "1": (
        "d", "c^-1b", "cb^-1", "bdc^-1", "bc^-1d", "dc^-1b", "c^-1db",
        "cb^-1d^-1", "bd^-1b^-1", "b^-1d^-1c", "cdb^-1", "c^-1d^-1b",
    ),
    "00": ("[ac,ac^-1]", "[ac,c^2]", "[ac^-1,c^2]"),
    "01": ("[a,c^2]", "[a^2,da]", "[ad,a^-1d]", "[ca,c^2]", "[ca,a^-1c]"),
    "10": (
        "[b,c]", "[b,bc]", "[b,cb]", "[b,dc]", "[b,b^-1c]", "[c,b^2]", "[c,cb]",
        "[b^2,bc]", "[b^2,cb]", "[b^2,dc]", "[b^2,b^-1c]", "[c^2,a^-1c]",
    ),
    "11": (
        "[b,d]", "[b,bd]", "[b,bc^-1]", "[b,bd^-1]", "[b,db]", "[b,d^2]",
        "[b,b^-1d]", "[b,c^-1d]", "[c,bc]", "[c,bc^-1]", "[c,b^-1c]", "[d,a^2]",
        "[d,b^2]", "[d,bd]", "[d,bd^-1]", "[d,db]", "[d,b^-1d]", "[a^2,ad]",
        "[a^2,ad^-1]", "[a^2,d^2]", "[a^2,a^-1d]", "[ad^-1,da]", "[b^2,bd]",
        "[b^2,bc^-1]", "[b^2,bd^-1]", "[b^2,db]", "[b^2,d^2]", "[b^2,b^-1d]",
        "[b^2,c^-1d]", "[bc,b^-1c]", "[bd,bd^-1]", "[bd,db]", "[bd,d^2]",
        "[bd,b^-1d]", "[bc^-1,cb]", "[bd^-1,c^2]", "[bd^-1,db]", "[bd^-1,d^2]",
        "[bd^-1,b^-1d]", "[c^2,b^-1d]", "[db,d^2]", "[db,b^-1d]", "[d^2,b^-1d]",
    ),
}

# (element, level, comma-separated level-n sections in lexicographic vertex order)
_ONES16 = ", ".join(["1"] * 16)
PORTRAIT_TABLE = (
    ("b^-1c^2b", 4, "1, 1, a, c, 1, 1, a, c, a, b^-1cb, 1, 1, a, b^-1cb, 1, 1"),
    ("(c^4)^b", 4, "1, 1, a^2, c^2, 1, 1, a^2, c^2, a^2, (c^2)^b, 1, 1, a^2, (c^2)^b, 1, 1"),
    ("(b^2)^c", 4, "1, 1, a, c, 1, 1, a, c, 1, b, 1, b^c, 1, b, 1, b"),
    ("bcbc^-1", 3, "1, b, 1, b, d, d, bd, db^-1"),
    ("[c,b^-1]", 3, "1, 1, 1, 1, 1, 1, d^-1b^-1, b"),
    ("[ac,ac^-1]", 4, "1, 1, 1, [c,a], 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1"),
    ("[ac,c^2]", 4, "1, 1, 1, [a,c]^c, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1"),
    ("[a^2,da]", 4, "1, 1, 1, 1, 1, 1, [a,d]^a, 1, 1, 1, 1, 1, 1, 1, 1, 1"),
    ("[c,b^2]", 4, "1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, [c,b], 1, 1, 1, 1"),
    ("[b,d^2]", 4, "1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, [b,d], 1, 1"),
    ("[d,a^2]", 4, "1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, [d,a], 1"),
    ("(b^-1c)^2", 3, "1, 1, 1, 1, d^-1, d^-1b, d^-1b, d^-1"),
    ("a^2", 3, "1, 1, a, c, 1, 1, a, c"),
    ("(db^-1)^2", 3, "1, b^-1, 1, b^-1, 1, 1, ad^-1a, a^2d^-1"),
    ("ba^2b^-1", 3, "a, c, 1, 1, 1, 1, c, dad^-1"),
    ("db^-1db", 3, "1, 1, 1, 1, d, d, ad^-1ad, a^2"),
    ("[b^±1,d^±1]", 3, "1, 1, 1, 1, 1, 1, [d^±1,a^±1], 1"),
    ("b^2", 4, "1, 1, a, c, 1, 1, a, c, 1, b, 1, b, 1, b, 1, b"),
    ("(c^2)^b", 4, "1, 1, a, c, 1, 1, a, c, a, c, 1, 1, a, c, 1, 1"),
    ("c^2", 4, "1, 1, a, c, 1, 1, a, c, 1, 1, a, c, 1, 1, a, c"),
    ("b^2", 4, "1, 1, a, c, 1, 1, a, c, c^2, a^2, d, d, 1, b, 1, b"),
    ("(c^2)^(a^-1)", 4, "1, 1, a, c, 1, 1, a, c, c^2, a^2, d, d, b, 1, 1, b^(a^-1)"),
    ("(b^2)^(a^-1)", 4, "c^2, a^2, d, d, 1, b, 1, b, 1, 1, a, c, 1, 1, a^(c^-1), c^(a^-1)"),
    ("d^2", 5, _ONES16 + ", 1, 1, a, c, 1, 1, a, c, c^2, a^2, d, d, 1, b, 1, b"),
    ("a^4", 6, ", ".join([_ONES16 + ", 1, 1, a, c, 1, 1, a, c, c^2, a^2, d, d, 1, b, 1, b"] * 2)),
    ("[c^±2,a^-1]", 5, ", ".join(["1"] * 14 + ["[a^±1,d^-1]"] + ["1"] * 17)),
)

RELATORS = (
    "[d,d^(a^±1)]", "[a^2,a^(c^±1)]", "[bc^-1,d^(a^±1)]", "[c^2,c^(b^±1)]",
    "[d^2,d^(a^±1)]", "[b^-1c,d^(a^±1)]", "[d^(a^-1),d^(b^±1)]",
    "[d^(a^-1),bdc^-1]", "[d^(a^-1),bc^-1d^±1]", "[d^(a^-1),bd^-1c^±1]",
    "[d^(a^-1),d^(c^±1)]", "[d^(a^-1),dc^-1b]", "[d^(a^-1),b^-1cd]",
    "[d^(a^-1),b^-1d^±1c]", "[d^(a^-1),c^-1bd]", "[d^(b^±1),d^(a^∓1)]",
    "[bdc^-1,d^a]", "[bd^-1c^-1,d^a]", "[d^(c^±1),d^a]", "[cb^-1d^±1,d^a]",
    "[db^-1c,d^a]", "[dc^-1b,d^a]", "[d^a,d^b]", "[d^a,b^-1d^±1c]",
    "[d^(a^-1),bd^±1c^-1]", "[d^(a^-1),cb^-1d^±1]", "[d^(a^±1),d^3]",
    "[d^(a^-1),db^-1c]", "[d^(a^±1),b^-1cd]", "[d^(a^±1),b^-1dc]",
    "[d^(a^±1),d^c]", "[bc^-1d^±1,d^a]", "[cb^-1d^±1,d^a]",
    "[d^(a^±1),c^-1bd]", "[bc^-1d^±1,d^a]", "[d^a,b^-1d^±1c]", "[d^a,b^-1dc]",
)

# (s, x, depth-7 sections of the product s·x)
APPENDIX_ROWS = (
    ("a", "b", "1, d, a, c, cb, b"),
    ("a", "b^-1", "1, d, a, c, a^-1, c^-1, b^-1, d^-1"),
    ("a", "d", "1, d, a, c, b"),
    ("a", "d^-1", "1, d, a, c, b^-1, d^-1, a^-1"),
    ("a", "c^-1", "1, d, a, c, a^-1, c^-1, b^-1"),
    ("a", "da", "1, b, d, a, a^2, ac, c"),
    ("a", "bd", "1, d, a, c, cb, b, da"),
    ("a", "cb", "1, a, c, b, d, cb, bd"),
    ("a", "ac", "1, d, a, c, cb, b"),
    ("a", "d^-1b^-1", "1, d, a, c, a^-1, c^-1, b^-1, d^-1, a^-1d^-1"),
    ("a", "b^-1c^-1", "1, a^-1, c^-1, b^-1, d, a, c, d^-1, d^-1b^-1"),
    ("a", "c^-1a^-1", "1, a^-1, c^-1, b^-1, d, a, c, d^-1, b^-1c^-1"),
    ("a", "d^-1c", "1, d, a, c, cb, b, d^-1, a^-1, a^-1b, b^-1"),
    ("a", "b^-1a", "1, b^-1, d^-1, d, a, c, d^-1c, a^-1, c^-1"),
    ("a", "c^-1d", "1, d, a, c, a^-1, c^-1, b^-1, b, b^-1a"),
    ("a", "d^-1a", "1, b^-1, d^-1, a, c, a^-1c, d"),
    ("a", "b^-1d", "1, d, a, c, a^-1, c^-1, b^-1, d^-1a"),
    ("a", "c^-1b", "1, d, a, c, b, a^-1, c^-1, b^-1d"),
    ("a", "c^-1a", "1, d, a, b^-1c, b^-1, c, a^-1, c^-1"),
    ("a", "d^-1b", "1, d, a, c, cb, b, a^-1d, a^-1, d^-1"),
    ("a", "b^-1c", "1, d, a, c, d^-1b, d^-1, b^-1"),
    ("a", "d^-1bd", "1, d, a, c, cb, b, a^-1da"),
    ("a", "b^-1cb", "1, d, a, c, cb, b, d^-1bd"),
    ("a", "c^-1ac", "1, d, a, c, b^-1cb"),
    ("a", "d^-1b^-1d", "1, d, a, c, a^-1, c^-1, b^-1, d^-1, a^-1d^-1a"),
    ("a", "b^-1c^-1b", "1, d, a, c, a^-1, c^-1, b^-1, d^-1b^-1d"),
    ("a", "c^-1a^-1c", "1, d^-1, a^-1, c^-1, b^-1c^-1b, d, a, c"),
    ("a", "d^-1cb", "1, a, c, b, d, cb, a^-1bd, a^-1, d^-1"),
    ("a", "b^-1ac", "1, d, a, c, d^-1cb, d^-1, b^-1"),
    ("a", "c^-1da", "1, b, d, a, a^2, b^-1ac, b^-1, c, a^-1, c^-1"),
    ("a", "d^-1b^-1a", "1, b^-1, d^-1, a, c, a^-1d^-1c, d, a^-1, c^-1"),
    ("a", "b^-1c^-1d", "1, a^-1, c^-1, b^-1, d, a, c, d^-1b^-1a"),
    ("a", "c^-1a^-1b", "1, a, c, cb, d, a^-1, c^-1, b^-1c^-1d, d^-1"),
    ("a", "d^-1ac", "1, a, c, a^-1cb, d^-1, b, b^-1, d, cb"),
    ("a", "b^-1da", "1, d, a, a^2, d^-1ac, b^-1, c, a^-1, c^-1"),
    ("a", "c^-1bd", "1, d, a, c, b, b^-1da, a^-1, c^-1"),
    ("a", "b^-1c^-1a", "1, b^-1, d^-1, d, a, d^-1b^-1c, a^-1, c^-1, c"),
    ("a", "c^-1a^-1d", "1, a^-1, c^-1, b^-1, a, c, cb, d, b^-1c^-1a"),
    ("a", "d^-1b^-1c", "1, d, a, c, d^-1, a^-1, a^-1d^-1b, b^-1"),
    ("a", "d^-1b^-1cb", "1, d, a, c, cb, b, a^-1d^-1bd, a^-1, d^-1, b^-1"),
    ("a", "b^-1c^-1ac", "1, d, a, c, d^-1b^-1cb, d^-1, b^-1, a^-1, c^-1"),
    ("a", "c^-1a^-1da", "1, a, c, cb, d, b^-1c^-1ac, b^-1, a^-1, c^-1"),
    ("a", "d^-1b^-1da", "1, b^-1, d^-1, d, a, a^-1d^-1ac, c, a^-1, c^-1"),
    ("a", "b^-1c^-1bd", "1, d, a, c, a^-1, c^-1, b^-1, b, d^-1b^-1da"),
    ("a", "c^-1a^-1cb", "1, a, c, b, a^-1, c^-1, b^-1c^-1bd, d, d^-1, cb"),
    ("a", "d^-1b^-1ac", "1, a, c, a^-1d^-1cb, d^-1, b^-1, d"),
    ("a", "b^-1c^-1da", "1, d, a, a^2, d^-1b^-1ac, b^-1, a^-1, c^-1, c"),
    ("a", "c^-1a^-1bd", "1, d, a, b, c, cb, b^-1c^-1da, a^-1, c^-1"),
    ("a", "a^2", "1, d, a, c"),
    ("b", "a", "1, b, d, da, a, c"),
    ("b", "a^-1", "1, b, d, a, c, d^-1, a^-1, c^-1"),
    ("b", "b", "1, a, c, b, d"),
    ("b", "d^-1", "1, a, c, b, d, d^-1, a^-1"),
    ("b", "c^-1", "1, b, d, a^-1, c^-1, b^-1"),
    ("b", "c", "1, a, c, b, d"),
    ("b", "da", "1, b, d, a, da, a^2, ac, c"),
    ("b", "bd", "1, a, c, b, d, da"),
    ("b", "cb", "1, a, c, b, bd, d"),
    ("b", "ac", "1, b, d, da, a, c, cb"),
    ("b", "a^-1d^-1", "1, b, d, a, c, b^-1, d^-1, a^-1, c^-1, a^-2, c^-1a^-1"),
    ("b", "d^-1b^-1", "1, b^-1, d^-1, a^-1, b, d, a^-1d^-1"),
    ("b", "c^-1a^-1", "1, b, d, a^-1, c^-1, b^-1, d^-1"),
    ("b", "a^-1b", "1, b, d, a, c, bd, a^-1, c^-1, c^-1d, d^-1"),
    ("b", "d^-1c", "1, a, c, b, d, d^-1, a^-1, a^-1b"),
    ("b", "c^-1d", "1, b, d, da, a, b^-1, b^-1a, a^-1, c^-1"),
    ("b", "a^-1c", "1, b, d, a, c, d^-1, a^-1, c^-1b"),
    ("b", "d^-1a", "1, b, d, a, c, d^-1, a^-1c"),
    ("b", "c^-1b", "1, a, c, b, d, a^-1, c^-1, b^-1d"),
    ("b", "c^-1a", "1, b, d, da, a, b^-1c, b^-1"),
    ("b", "a^-1d", "1, b, d, a, c, bd, c^-1a, a^-1, c^-1"),
    ("b", "d^-1b", "1, a, c, b, d, a^-1d, a^-1, d^-1"),
    ("b", "a^-1da", "1, a, c, b, bd, d, c^-1ac"),
    ("b", "d^-1bd", "1, a, c, b, d, a^-1da"),
    ("b", "c^-1ac", "1, b, d, da, a, c, b^-1cb"),
    ("b", "a^-1d^-1a", "1, a, c, b, b^-1, d^-1, a^-1, c^-1a^-1c, d"),
    ("b", "d^-1b^-1d", "1, b^-1, d^-1, a^-1d^-1a, b, d"),
    ("b", "c^-1a^-1c", "1, b, d, d^-1, a^-1, c^-1b"),
    ("b", "a^-1bd", "1, b, d, a, c, bd, c^-1da, a^-1, c^-1"),
    ("b", "d^-1cb", "1, a, c, b, a^-1bd, a^-1, d, d^-1"),
    ("b", "c^-1da", "1, b, d, a, da, a^2, b^-1ac, b^-1"),
    ("b", "d^-1b^-1a", "1, b^-1, d^-1, d, da, c, b, a^-1d^-1c"),
    ("b", "c^-1a^-1b", "1, b, d, a^-1, c^-1, c^-1d, d^-1"),
    ("b", "a^-1d^-1c", "1, b, d, a, c, d^-1, a^-1, a^-2, c^-1a^-1b, b^-1"),
    ("b", "a^-1cb", "1, b, d, a, c, c^-1bd, a^-1, d^-1, bd"),
    ("b", "d^-1ac", "1, b, d, a, c, a^-1cb, d^-1"),
    ("b", "c^-1bd", "1, a, c, b, d, b^-1da, a^-1, c^-1, da"),
    ("b", "c^-1a^-1d", "1, b, d, a^-1, c^-1, b^-1, c^-1a"),
    ("b", "a^-1d^-1b", "1, b, d, a, c, a^-1, c^-1, c^-1a^-1d, a^-2, d^-1"),
    ("b", "d^-1b^-1c", "1, a, c, b, d^-1, a^-1, d, da, a^-1d^-1b, b^-1"),
    ("b", "a^-1d^-1bd", "1, b, d, a, c, bd, c^-1a^-1da, a^-1, c^-1, d^-1"),
    ("b", "d^-1b^-1cb", "1, a, c, b, d, da, a^-1d^-1bd, a^-1, d^-1"),
    ("b", "c^-1a^-1da", "1, b, d, a, c^-1ac, a^-1, c^-1, b^-1"),
    ("b", "d^-1b^-1da", "1, d, a, d^-1, a^-1d^-1ac, b^-1, da, c, b"),
    ("b", "c^-1a^-1cb", "1, b, d, a, c, c^-1bd, a^-1, d^-1"),
    ("b", "a^-1d^-1ac", "1, d^-1, a^-1, a, c, c^-1a^-1cb, b, b^-1, d"),
    ("b", "a^-1d^-1cb", "1, b, d, a, c, c^-1a^-1bd, a^-2, d^-1, a^-1"),
    ("b", "d^-1b^-1ac", "1, b, a, c, d, da, a^-1d^-1cb, d^-1, b^-1"),
    ("b", "c^-1a^-1bd", "1, b, d, c^-1da, a^-1, c^-1"),
    ("b", "a^2", "1, a, c, b, d, da"),
    ("b", "a^-2", "1, a, c, b, d^-1, a^-1, c^-1, d"),
    ("c", "a", "1, a, c, b, d"),
    ("c", "a^-1", "1, a, c, b, d^-1, a^-1, c^-1"),
    ("c", "b^-1", "1, a, c, b, b^-1, d^-1"),
    ("c", "d", "1, a, c, b, bd, d"),
    ("c", "d^-1", "1, a, c, b, b^-1, d^-1, a^-1"),
    ("c", "c", "1, a, c, b"),
    ("c", "da", "1, a, c, b, bd, d, a^2, ac"),
    ("c", "bd", "1, a, c, b, d, bd, da"),
    ("c", "cb", "1, a, c, b, bd, d"),
    ("c", "ac", "1, d, a, c, cb, b"),
    ("c", "a^-1d^-1", "1, a, c, b, b^-1, d^-1, a^-1, c^-1, a^-2, c^-1a^-1"),
    ("c", "d^-1b^-1", "1, b^-1, d^-1, a, c, b, a^-1, a^-1d^-1"),
    ("c", "b^-1c^-1", "1, a^-1, c^-1, b^-1, d^-1, a, c, b, d^-1b^-1"),
    ("c", "a^-1b", "1, a, c, b, bd, d, a^-1, c^-1, c^-1d, d^-1"),
    ("c", "d^-1c", "1, a, c, b, d^-1, a^-1, a^-1b, b^-1"),
    ("c", "b^-1a", "1, a, c, b, b^-1, d^-1, d, d^-1c"),
    ("c", "a^-1c", "1, a, c, b, d^-1, a^-1, c^-1b"),
    ("c", "d^-1a", "1, a, c, b, b^-1, d^-1, a^-1c"),
    ("c", "b^-1d", "1, a, c, b, d, b^-1, d^-1a"),
    ("c", "a^-1d", "1, a, c, b, bd, d, c^-1a, a^-1, c^-1"),
    ("c", "d^-1b", "1, a, c, b, a^-1d, a^-1, d^-1"),
    ("c", "b^-1c", "1, a, c, b, d^-1b, d^-1, b^-1"),
    ("c", "a^-1da", "1, a, c, b, bd, d, c^-1ac"),
    ("c", "d^-1bd", "1, a, c, b, bd, d, a^-1da"),
    ("c", "b^-1cb", "1, a, c, b, d^-1bd"),
    ("c", "a^-1d^-1a", "1, a, c, b, b^-1, d^-1, a^-1, c^-1a^-1c"),
    ("c", "d^-1b^-1d", "1, a, c, b, b^-1, d^-1, a^-1d^-1a"),
    ("c", "b^-1c^-1b", "1, a^-1, c^-1, b^-1, d^-1b^-1d, a, c, b"),
    ("c", "a^-1bd", "1, a, c, b, d, bd, c^-1da, a^-1, c^-1"),
    ("c", "d^-1cb", "1, a, c, b, a^-1bd, a^-1, d^-1"),
    ("c", "b^-1ac", "1, d, a, c, d^-1cb, d^-1, b, b^-1"),
    ("c", "d^-1b^-1a", "1, b^-1, d^-1, a, c, b, a^-1d^-1c"),
    ("c", "b^-1c^-1d", "1, a^-1, c^-1, b^-1, b, bd, a, c, d^-1b^-1a"),
    ("c", "a^-1d^-1c", "1, a, c, b, d^-1, a^-1, a^-2, c^-1a^-1b, b^-1"),
    ("c", "a^-1cb", "1, a, c, b, c^-1bd, a^-1, d, d^-1, bd"),
    ("c", "d^-1ac", "1, a, c, a^-1cb, d^-1, b, b^-1"),
    ("c", "b^-1da", "1, a, c, b, d, a^2, d^-1ac, b^-1"),
    ("c", "b^-1c^-1a", "1, b^-1, d^-1, b, bd, a, c, d^-1b^-1c, a^-1, c^-1"),
    ("c", "a^-1d^-1b", "1, a, c, b, a^-1, c^-1, c^-1a^-1d, a^-2, d^-1"),
    ("c", "d^-1b^-1c", "1, a, c, b, d^-1, a^-1, a^-1d^-1b, b^-1"),
    ("c", "a^-1d^-1bd", "1, a, c, b, bd, d, c^-1a^-1da, a^-1, c^-1, d^-1"),
    ("c", "d^-1b^-1cb", "1, a, c, b, a^-1d^-1bd, a^-1, d^-1, b^-1"),
    ("c", "b^-1c^-1ac", "1, b, bd, a, c, d^-1b^-1cb, d^-1, b^-1"),
    ("c", "d^-1b^-1da", "1, a, c, b, b^-1, d^-1, d, a^-1d^-1ac"),
    ("c", "b^-1c^-1bd", "1, b, d, b^-1, d^-1b^-1da, a, a^-1, c^-1, bd, c"),
    ("c", "a^-1d^-1ac", "1, d^-1, a^-1, a, c, c^-1a^-1cb, b, b^-1"),
    ("c", "a^-1d^-1cb", "1, a, c, b, c^-1a^-1bd, a^-2, d^-1, a^-1"),
    ("c", "d^-1b^-1ac", "1, a, c, a^-1d^-1cb, d^-1, b^-1, b"),
    ("c", "b^-1c^-1da", "1, a, c, d, b, bd, a^2, d^-1b^-1ac, b^-1, a^-1, c^-1"),
    ("c", "a^2", "1, a, c, b, d"),
    ("c", "a^-2", "1, a, c, b, d^-1, a^-1, c^-1"),
    ("d", "a^-1", "1, b, d, a, d^-1, a^-1, c^-1"),
    ("d", "b", "1, a, c, b, d"),
    ("d", "b^-1", "1, a^-1, c^-1, b^-1, d, a, d^-1"),
    ("d", "d", "1, b, d, a"),
    ("d", "c^-1", "1, a^-1, c^-1, b^-1, d, a, b"),
    ("d", "c", "1, a, c, b, d, a^2, ac"),
    ("d", "da", "1, b, d, a^2, a, ac"),
    ("d", "bd", "1, a, c, b, d, da"),
    ("d", "cb", "1, a, c, b, d, a^2, ac, bd"),
    ("d", "ac", "1, d, a, c, a^2, ac, cb, b"),
    ("d", "a^-1d^-1", "1, b, d, a, b^-1, d^-1, a^-1, c^-1, a^-2, c^-1a^-1"),
    ("d", "b^-1c^-1", "1, a^-1, c^-1, b^-1, d, a, d^-1"),
    ("d", "c^-1a^-1", "1, d, a, b, a^-1, c^-1, b^-1, d^-1, b^-1c^-1"),
    ("d", "a^-1b", "1, d, a, a^2, ac, b, a^-1, c^-1, c^-1d, d^-1"),
    ("d", "b^-1a", "1, d, a, a^2, ac, d^-1, d^-1c, b^-1, a^-1, c^-1"),
    ("d", "c^-1d", "1, a^-1, c^-1, b^-1, d, a, b, da, b^-1a"),
    ("d", "a^-1c", "1, d, a, a^2, ac, b, d^-1, a^-1, c^-1b"),
    ("d", "b^-1d", "1, a^-1, c^-1, b^-1, b, d, a, d^-1a"),
    ("d", "c^-1b", "1, d, a, b, a^-1, c^-1, b^-1d"),
    ("d", "c^-1a", "1, d, a, b, da, b^-1c, b^-1, a^-1, c^-1"),
    ("d", "a^-1d", "1, b, d, a, c^-1a, a^-1, c^-1"),
    ("d", "b^-1c", "1, d, a, a^2, ac, d^-1b, d^-1"),
    ("d", "a^-1da", "1, b, d, a, c^-1ac"),
    ("d", "b^-1cb", "1, a, c, b, d, a^2, ac, d^-1bd"),
    ("d", "c^-1ac", "1, b, d, da, a, c, b^-1cb"),
    ("d", "a^-1d^-1a", "1, b^-1, d^-1, a^-1, c^-1a^-1c, b, d, a"),
    ("d", "b^-1c^-1b", "1, a^-1, c^-1, b^-1, d, a, b^-1d"),
    ("d", "c^-1a^-1c", "1, b, d, a, d^-1, a^-1, c^-1, b^-1c^-1b"),
    ("d", "a^-1bd", "1, d, a, a^2, ac, b, c^-1da, a^-1, c^-1"),
    ("d", "b^-1ac", "1, d, a, c, a^2, ac, d^-1cb, d^-1"),
    ("d", "c^-1da", "1, d, a, b, da, a^2, b^-1ac, b^-1, a^-1, c^-1"),
    ("d", "b^-1c^-1d", "1, a^-1, c^-1, b^-1, d, a, b^-1a"),
    ("d", "c^-1a^-1b", "1, b, d, a, a^-1, c^-1, b^-1c^-1d, d^-1"),
    ("d", "a^-1d^-1c", "1, d, a, a^2, ac, b, d^-1, a^-1, a^-2, c^-1a^-1b, b^-1"),
    ("d", "a^-1cb", "1, b, d, a, c, a^2, ac, c^-1bd, a^-1, d^-1"),
    ("d", "b^-1da", "1, b, d, a^2, a, d^-1ac, b^-1, ac, a^-1, c^-1"),
    ("d", "c^-1bd", "1, d, a, b, b^-1da, a^-1, c^-1, da"),
    ("d", "b^-1c^-1a", "1, d, a, b^-1, d^-1, b^-1c, a^-1, c^-1"),
    ("d", "c^-1a^-1d", "1, d, a, b, a^-1, c^-1, b^-1, b^-1c^-1a"),
    ("d", "a^-1d^-1b", "1, d, a, a^2, ac, b, a^-1, c^-1, c^-1a^-1d, a^-2, d^-1"),
    ("d", "a^-1d^-1bd", "1, d, a, a^2, ac, b, c^-1a^-1da, a^-1, c^-1, d^-1"),
    ("d", "b^-1c^-1ac", "1, d, a, c, b^-1cb, b^-1, d^-1, a^-1, c^-1"),
    ("d", "c^-1a^-1da", "1, b, d, a, b^-1c^-1ac, b^-1, a^-1, c^-1"),
    ("d", "b^-1c^-1bd", "1, a^-1, c^-1, b^-1, d, a, b, b^-1da"),
    ("d", "c^-1a^-1cb", "1, d, a, a^2, ac, b, a^-1, c^-1, b^-1c^-1bd, d^-1"),
    ("d", "a^-1d^-1ac", "1, d^-1, a^-1, a, c, c^-1a^-1cb, b, b^-1, d, a^2, ac"),
    ("d", "a^-1d^-1cb", "1, b, d, a, c, a^2, ac, c^-1a^-1bd, a^-2, d^-1, a^-1"),
    ("d", "b^-1c^-1da", "1, d, a, a^2, b^-1ac, b^-1, a^-1, c^-1"),
    ("d", "c^-1a^-1bd", "1, b, d, a, b^-1c^-1da, a^-1, c^-1"),
    ("d", "a^2", "1, d, a, c, b, a^2, ac"),
    ("d", "a^-2", "1, d^-1, a^-1, c^-1, b, d, a"),
    ("a^-1", "b^-1", "1, a^-1, c^-1, b^-1, d^-1, a^-1d^-1"),
    ("a^-1", "c^-1", "1, a^-1, c^-1, b^-1, d^-1"),
    ("a^-1", "a^-1d^-1", "1, d^-1, a^-1, c^-1, b^-1, a^-2, c^-1a^-1"),
    ("a^-1", "d^-1b^-1", "1, a^-1, c^-1, b^-1, d^-1, a^-2, c^-1a^-1, a^-1d^-1"),
    ("a^-1", "b^-1c^-1", "1, a^-1, c^-1, b^-1, d^-1, a^-1d^-1, d^-1b^-1"),
    ("a^-1", "c^-1a^-1", "1, d^-1, a^-1, c^-1, b^-1, b^-1c^-1"),
    ("a^-1", "a^-1b", "1, d^-1, a^-1, b, c^-1b, d, c^-1, c^-1d"),
    ("a^-1", "b^-1a", "1, b^-1, d^-1, d, c^-1a, a^-1, c^-1, a, c, a^-1d^-1c"),
    ("a^-1", "c^-1d", "1, a^-1, c^-1, b^-1, b, d, c^-1d, d^-1, a, b^-1a"),
    ("a^-1", "a^-1c", "1, d^-1, a^-1, b, c^-1b"),
    ("a^-1", "b^-1d", "1, a^-1, c^-1, b^-1, d, c^-1a, d^-1, a^-1d^-1a"),
    ("a^-1", "c^-1b", "1, a^-1, c^-1, b, d, c^-1d, d^-1, b^-1d"),
    ("a^-1", "c^-1a", "1, d^-1, a^-1, c^-1, d, a, b^-1c, b^-1"),
    ("a^-1", "a^-1d", "1, d^-1, a^-1, c^-1, b, d, c^-1a"),
    ("a^-1", "b^-1c", "1, a^-1, c^-1, a, c, a^-1d^-1b, d^-1, b^-1"),
    ("a^-1", "a^-1da", "1, b, d, a, c^-1ac, d^-1, a^-1, c^-1"),
    ("a^-1", "b^-1cb", "1, a, c, b, a^-1d^-1bd, a^-1, d^-1, c^-1"),
    ("a^-1", "c^-1ac", "1, d, a, c, b^-1cb, d^-1, a^-1, c^-1"),
    ("a^-1", "a^-1d^-1a", "1, b^-1, d^-1, a^-1, c^-1a^-1c, c^-1"),
    ("a^-1", "d^-1b^-1d", "1, a^-1, c^-1, b^-1, d^-1, a^-1d^-1a"),
    ("a^-1", "b^-1c^-1b", "1, a^-1, c^-1, b^-1, d^-1, d^-1b^-1d"),
    ("a^-1", "c^-1a^-1c", "1, d^-1, a^-1, c^-1, b^-1c^-1b"),
    ("a^-1", "a^-1bd", "1, d^-1, a^-1, b, c^-1b, d, c^-1da, c^-1"),
    ("a^-1", "b^-1ac", "1, d, c^-1a, a^-1, c^-1, a, c, a^-1d^-1cb, d^-1, b^-1"),
    ("a^-1", "c^-1da", "1, a^-1, c^-1, b, d, c^-1d, d^-1, a, a^2, b^-1ac, b^-1"),
    ("a^-1", "d^-1b^-1a", "1, b^-1, d^-1, a^-1, c^-1, a^-1c, a^-1d^-1c"),
    ("a^-1", "b^-1c^-1d", "1, a^-1, c^-1, b^-1, d^-1, d, a, d^-1b^-1a"),
    ("a^-1", "c^-1a^-1b", "1, d^-1, a^-1, c^-1, b, d, b^-1c^-1d"),
    ("a^-1", "a^-1d^-1c", "1, d^-1, a^-1, b, c^-1b, a^-2, c^-1a^-1b, b^-1"),
    ("a^-1", "a^-1cb", "1, a, c, b, d^-1, a^-1, c^-1b, c^-1bd, d"),
    ("a^-1", "b^-1da", "1, d, c^-1a, d^-1, a, a^-1d^-1ac, b^-1, c, a^-1, c^-1"),
    ("a^-1", "c^-1bd", "1, b, a^-1d, a^-1, c^-1, d, c^-1d, b^-1da, a"),
    ("a^-1", "b^-1c^-1a", "1, a^-1, c^-1, b^-1, d^-1, a^-1d^-1, d, a, d^-1b^-1c"),
    ("a^-1", "c^-1a^-1d", "1, d^-1, a^-1, c^-1, b^-1, b, d, b^-1c^-1a"),
    ("a^-1", "a^-1d^-1b", "1, d^-1, a^-1, b, c^-1b, c^-1, c^-1a^-1d, a^-2"),
    ("a^-1", "d^-1b^-1c", "1, a^-1, c^-1, d^-1, a^-2, c^-1a^-1, a^-1c, a^-1d^-1b, b^-1"),
    ("a^-1", "a^-1d^-1bd", "1, d^-1, a^-1, b, c^-1b, d, c^-1a^-1da, c^-1"),
    ("a^-1", "d^-1b^-1cb", "1, a, c, b, d^-1, a^-1c, a^-1d^-1bd, a^-1, c^-1, a^-2, c^-1a^-1, b^-1"),
    ("a^-1", "b^-1c^-1ac", "1, d, a, c, d^-1b^-1cb, d^-1, b^-1, a^-1, c^-1, a^-1d^-1"),
    ("a^-1", "c^-1a^-1da", "1, b, d, a, b^-1c^-1ac, b^-1, a^-1, c^-1, d^-1"),
    ("a^-1", "d^-1b^-1da", "1, b^-1, d^-1, d, c^-1a, a^-1, c^-1, a, a^-1d^-1ac, a^-1c"),
    ("a^-1", "b^-1c^-1bd", "1, a^-1, c^-1, b^-1, b, d, c^-1d, d^-1, d^-1b^-1da, a"),
    ("a^-1", "c^-1a^-1cb", "1, d^-1, a^-1, b, c^-1b, c^-1, b^-1c^-1bd, d"),
    ("a^-1", "a^-1d^-1ac", "1, d^-1, a^-1, a, c, c^-1a^-1cb, b, b^-1, c^-1b"),
    ("a^-1", "a^-1d^-1cb", "1, a, c, b, d^-1, a^-1, c^-1b, c^-1a^-1bd, a^-2"),
    ("a^-1", "d^-1b^-1ac", "1, a^-1, c^-1, a, c, d^-1, a^-1c, a^-1d^-1cb, b^-1"),
    ("a^-1", "b^-1c^-1da", "1, d^-1, a^-1, c^-1, d, a, a^2, d^-1b^-1ac, b^-1"),
    ("a^-1", "c^-1a^-1bd", "1, d^-1, a^-1, c^-1, b, d, b^-1c^-1da"),
    ("a^-1", "a^-2", "1, d^-1, a^-1, c^-1"),
    ("b^-1", "a^-1", "1, b^-1, d^-1, a^-1, c^-1, b^-1c^-1"),
    ("b^-1", "b^-1", "1, a^-1, c^-1, b^-1, d^-1"),
    ("b^-1", "d^-1", "1, a^-1, c^-1, b^-1, d^-1"),
    ("b^-1", "a^-1d^-1", "1, b^-1, d^-1, a^-1, b^-1c^-1, c^-1, a^-2, c^-1a^-1"),
    ("b^-1", "d^-1b^-1", "1, a^-1, c^-1, b^-1, d^-1, a^-1d^-1"),
    ("b^-1", "b^-1c^-1", "1, a^-1, c^-1, b^-1, d^-1, d^-1b^-1"),
    ("b^-1", "c^-1a^-1", "1, b^-1, d^-1, a^-1, c^-1, d^-1b^-1, b^-1c^-1"),
    ("b^-1", "a^-1b", "1, a, c, d^-1b, d^-1, b^-1, b, d, a^-1, c^-1, b^-1c^-1d"),
    ("b^-1", "d^-1c", "1, d^-1, a^-1, a, d^-1c, b^-1, b, a^-1b"),
    ("b^-1", "b^-1a", "1, b^-1, d^-1, a, d^-1a, c, d^-1c, a^-1, c^-1"),
    ("b^-1", "a^-1c", "1, a, c, d^-1b, d^-1, b^-1, a^-1, c^-1, b^-1c^-1b"),
    ("b^-1", "d^-1a", "1, b^-1, d^-1, a, d^-1c, a^-1c, a^-1, c^-1"),
    ("b^-1", "b^-1d", "1, a^-1, c^-1, b^-1, d^-1, a, d^-1a"),
    ("b^-1", "a^-1d", "1, b^-1, d^-1, b, d, b^-1c^-1a, a^-1, c^-1"),
    ("b^-1", "d^-1b", "1, b^-1, d^-1, b, a^-1d, a^-1"),
    ("b^-1", "b^-1c", "1, a^-1, c^-1, b^-1, d^-1, a, c, d^-1b"),
    ("b^-1", "a^-1da", "1, b, d, a, b^-1c^-1ac, b^-1, a^-1, c^-1, d^-1"),
    ("b^-1", "d^-1bd", "1, b, d, a^-1da, b^-1, d^-1"),
    ("b^-1", "b^-1cb", "1, a, c, b, d^-1bd, b^-1, d^-1"),
    ("b^-1", "a^-1d^-1a", "1, b^-1, d^-1, a^-1, c^-1a^-1c, c^-1"),
    ("b^-1", "d^-1b^-1d", "1, a^-1, c^-1, b^-1, d^-1, a^-1d^-1a"),
    ("b^-1", "b^-1c^-1b", "1, a^-1, c^-1, b^-1, d^-1, d^-1b^-1d"),
    ("b^-1", "c^-1a^-1c", "1, b^-1, d^-1, a^-1, c^-1, b^-1c^-1b"),
    ("b^-1", "a^-1bd", "1, a, c, d^-1b, d^-1, b^-1, b, d, b^-1c^-1da, a^-1, c^-1"),
    ("b^-1", "d^-1cb", "1, a, c, b, d^-1, d^-1c, b^-1, a^-1bd, a^-1"),
    ("b^-1", "b^-1ac", "1, b^-1, a, d^-1a, c, d^-1cb, d^-1, a^-1, c^-1"),
    ("b^-1", "d^-1b^-1a", "1, b^-1, d^-1, a, c, a^-1d^-1c, a^-1, c^-1"),
    ("b^-1", "b^-1c^-1d", "1, a^-1, c^-1, b^-1, d^-1, a, d^-1a, d^-1b^-1a"),
    ("b^-1", "c^-1a^-1b", "1, b^-1, d^-1, a^-1, c^-1, d, b^-1d, b^-1c^-1d"),
    ("b^-1", "a^-1d^-1c", "1, a, c, d^-1b, d^-1, b^-1, a^-1, c^-1b, a^-2, c^-1a^-1b"),
    ("b^-1", "a^-1cb", "1, a, c, d^-1b, d^-1, a^-1, c^-1, b, b^-1c^-1bd, d"),
    ("b^-1", "d^-1ac", "1, a, b^-1c, d^-1, d^-1c, a^-1cb, b, b^-1"),
    ("b^-1", "b^-1da", "1, b^-1, d^-1, d, a, d^-1a, a^2, d^-1ac, c, a^-1, c^-1"),
    ("b^-1", "b^-1c^-1a", "1, b^-1, d^-1, a, d^-1a, d^-1b^-1c, a^-1, c^-1"),
    ("b^-1", "c^-1a^-1d", "1, b^-1, d^-1, a^-1, c^-1, d^-1b^-1, d, b^-1d, b^-1c^-1a"),
    ("b^-1", "a^-1d^-1b", "1, a, c, d^-1b, d^-1, b^-1, a^-1, b^-1c^-1, c^-1b, c^-1a^-1d, a^-2"),
    ("b^-1", "d^-1b^-1c", "1, a^-1, c^-1, b^-1, d^-1, a, c, a^-1d^-1b"),
    ("b^-1", "a^-1d^-1bd", "1, a, c, d^-1b, d^-1, b^-1, b, d, a^-1, c^-1b, c^-1a^-1da, b^-1c^-1"),
    ("b^-1", "d^-1b^-1cb", "1, a, c, b, a^-1d^-1bd, a^-1, d^-1, b^-1"),
    ("b^-1", "b^-1c^-1ac", "1, b^-1, a, d^-1a, c, d^-1b^-1cb, d^-1, a^-1, c^-1"),
    ("b^-1", "c^-1a^-1da", "1, a^-1, c^-1, d, b^-1d, a, b^-1c^-1ac, b^-1, d^-1, d^-1b^-1"),
    ("b^-1", "d^-1b^-1da", "1, b^-1, d^-1, a, d^-1a, a^-1d^-1ac, c, a^-1, c^-1"),
    ("b^-1", "b^-1c^-1bd", "1, a^-1, c^-1, b^-1, d, d^-1b^-1da, a, d^-1a"),
    ("b^-1", "c^-1a^-1cb", "1, a, c, d^-1b, d^-1, b^-1, a^-1, c^-1, b, b^-1c^-1bd, d, b^-1d"),
    ("b^-1", "a^-1d^-1ac", "1, d^-1, a^-1, a, b^-1c, b^-1, c^-1a^-1cb, c^-1b, c, d^-1b"),
    ("b^-1", "a^-1d^-1cb", "1, a, c, d^-1b, d^-1, b^-1, b, a^-1, c^-1b, c^-1a^-1bd, a^-2"),
    ("b^-1", "d^-1b^-1ac", "1, b^-1, d^-1, a, c, a^-1d^-1cb, a^-1, c^-1"),
    ("b^-1", "b^-1c^-1da", "1, b^-1, d^-1, d, a, d^-1a, a^2, d^-1b^-1ac, a^-1, c^-1"),
    ("b^-1", "c^-1a^-1bd", "1, b^-1, d^-1, b, d, a^-1, c^-1, b^-1d, b^-1c^-1da"),
    ("b^-1", "a^2", "1, d, a, b^-1c, b^-1, d^-1, c, d^-1c"),
    ("b^-1", "a^-2", "1, d^-1, a^-1, c^-1, b^-1, b^-1c^-1"),
    ("c^-1", "b^-1", "1, a^-1, c^-1, b^-1, d^-1"),
    ("c^-1", "d^-1", "1, a^-1, c^-1, b^-1, d^-1, a^-2, c^-1a^-1"),
    ("c^-1", "c^-1", "1, a^-1, c^-1, b^-1"),
    ("c^-1", "a^-1d^-1", "1, a^-1, c^-1, b^-1, d^-1, b^-1c^-1, a^-2, c^-1a^-1"),
    ("c^-1", "d^-1b^-1", "1, a^-1, c^-1, b^-1, d^-1, a^-2, c^-1a^-1, a^-1d^-1"),
    ("c^-1", "b^-1c^-1", "1, a^-1, c^-1, b^-1, d^-1, d^-1b^-1"),
    ("c^-1", "c^-1a^-1", "1, a^-1, c^-1, b^-1, d^-1, b^-1c^-1"),
    ("c^-1", "d^-1c", "1, d^-1, a^-1, a, b^-1c, b^-1, b, a^-2, c^-1a^-1b"),
    ("c^-1", "b^-1a", "1, b^-1, d^-1, d, a, b^-1a, a^-1, c^-1, c, d^-1c"),
    ("c^-1", "c^-1d", "1, a^-1, c^-1, b^-1, d, b^-1d, a, b^-1a"),
    ("c^-1", "d^-1a", "1, b^-1, d^-1, a, b^-1c, a^-1, c^-1a^-1c, c^-1"),
    ("c^-1", "b^-1d", "1, a^-1, c^-1, b^-1, d, a, b^-1a, d^-1a"),
    ("c^-1", "c^-1b", "1, a^-1, c^-1, b^-1, d, b^-1d"),
    ("c^-1", "c^-1a", "1, a^-1, c^-1, b^-1, d, a, b^-1c"),
    ("c^-1", "d^-1b", "1, b^-1, b, c^-1a^-1d, a^-2, d^-1, a^-1"),
    ("c^-1", "b^-1c", "1, a^-1, c^-1, b^-1, a, c, d^-1b, d^-1"),
    ("c^-1", "d^-1bd", "1, b, d, c^-1a^-1da, a^-1, b^-1"),
    ("c^-1", "b^-1cb", "1, a, c, b, d^-1bd, a^-1, c^-1, b^-1"),
    ("c^-1", "c^-1ac", "1, d, a, c, b^-1cb, a^-1, c^-1, b^-1"),
    ("c^-1", "a^-1d^-1a", "1, b^-1, d^-1, a^-1, c^-1a^-1c, c^-1"),
    ("c^-1", "d^-1b^-1d", "1, a^-1, c^-1, b^-1, d^-1, a^-1d^-1a"),
    ("c^-1", "b^-1c^-1b", "1, a^-1, c^-1, b^-1, d^-1b^-1d"),
    ("c^-1", "c^-1a^-1c", "1, a^-1, c^-1, b^-1, d^-1, b^-1c^-1b"),
    ("c^-1", "d^-1cb", "1, a, c, b, b^-1c, b^-1, c^-1a^-1bd, a^-2, d^-1, a^-1"),
    ("c^-1", "b^-1ac", "1, b^-1, d, a, b^-1a, a^-1, c^-1, c, d^-1cb, d^-1"),
    ("c^-1", "c^-1da", "1, a^-1, c^-1, d, b^-1d, a, a^2, b^-1ac, b^-1"),
    ("c^-1", "d^-1b^-1a", "1, b^-1, d^-1, a^-1, c^-1, a, c, a^-1d^-1c"),
    ("c^-1", "b^-1c^-1d", "1, a^-1, c^-1, b^-1, d, a, d^-1b^-1a"),
    ("c^-1", "c^-1a^-1b", "1, a^-1, c^-1, b^-1, d, b^-1d, b^-1c^-1d, d^-1"),
    ("c^-1", "a^-1d^-1c", "1, d^-1, a^-1, b^-1, c^-1b, a^-2, c^-1a^-1b"),
    ("c^-1", "d^-1ac", "1, a, b^-1c, a^-1, c^-1a^-1cb, d^-1, b, b^-1"),
    ("c^-1", "b^-1da", "1, d, c^-1a, b^-1, a, b^-1a, a^2, d^-1ac, c, a^-1, c^-1"),
    ("c^-1", "c^-1bd", "1, a^-1, c^-1, b^-1, b, d, b^-1d, b^-1da, a"),
    ("c^-1", "b^-1c^-1a", "1, a^-1, c^-1, b^-1, d^-1, d, a, d^-1b^-1c"),
    ("c^-1", "c^-1a^-1d", "1, a^-1, c^-1, b^-1, d, b^-1d, b^-1c^-1a"),
    ("c^-1", "a^-1d^-1b", "1, b^-1, a^-1, b^-1c^-1, c^-1b, c^-1a^-1d, a^-2, d^-1"),
    ("c^-1", "d^-1b^-1c", "1, a^-1, c^-1, b^-1, d^-1, a^-2, c^-1a^-1, a, c, a^-1d^-1b"),
    ("c^-1", "a^-1d^-1bd", "1, b, d, a^-1, c^-1b, c^-1a^-1da, b^-1, b^-1c^-1, d^-1"),
    ("c^-1", "d^-1b^-1cb", "1, a, c, b, a^-1d^-1bd, a^-1, d^-1, b^-1, a^-2, c^-1a^-1"),
    ("c^-1", "b^-1c^-1ac", "1, d, a, c, d^-1b^-1cb, d^-1, b^-1, a^-1, c^-1"),
    ("c^-1", "c^-1a^-1da", "1, a^-1, c^-1, d, b^-1d, a, b^-1c^-1ac, b^-1"),
    ("c^-1", "d^-1b^-1da", "1, b^-1, d^-1, d, a, b^-1a, a^-1, c^-1, a^-1d^-1ac, c"),
    ("c^-1", "b^-1c^-1bd", "1, a^-1, c^-1, b^-1, d, b^-1d, d^-1b^-1da, a"),
    ("c^-1", "c^-1a^-1cb", "1, a^-1, c^-1, b, b^-1c^-1bd, d, d^-1, b^-1d"),
    ("c^-1", "a^-1d^-1ac", "1, d^-1, a^-1, a, b^-1c, b^-1, c^-1a^-1cb, c^-1b"),
    ("c^-1", "a^-1d^-1cb", "1, a, c, b, b^-1, a^-1, c^-1b, c^-1a^-1bd, a^-2, d^-1"),
    ("c^-1", "d^-1b^-1ac", "1, a^-1, c^-1, b^-1, a, c, a^-1d^-1cb, d^-1"),
    ("c^-1", "b^-1c^-1da", "1, a^-1, c^-1, b^-1, d, a, a^2, d^-1b^-1ac"),
    ("c^-1", "c^-1a^-1bd", "1, a^-1, c^-1, b^-1, b, d, b^-1d, b^-1c^-1da"),
    ("c^-1", "a^2", "1, d, a, b^-1c, b^-1"),
    ("c^-1", "a^-2", "1, d^-1, a^-1, c^-1, b^-1, b^-1c^-1"),
    ("d^-1", "a^-1", "1, b^-1, d^-1, a^-1, c^-1"),
    ("d^-1", "d^-1", "1, b^-1, d^-1, a^-1"),
    ("d^-1", "c^-1", "1, a^-1, c^-1, b^-1, d^-1, d^-1b^-1"),
    ("d^-1", "a^-1d^-1", "1, b^-1, d^-1, a^-1, c^-1, a^-2, c^-1a^-1"),
    ("d^-1", "d^-1b^-1", "1, a^-1, c^-1, b^-1, d^-1, a^-1d^-1"),
    ("d^-1", "b^-1c^-1", "1, a^-1, c^-1, b^-1, d^-1, a^-1d^-1, d^-1b^-1"),
    ("d^-1", "c^-1a^-1", "1, d^-1, a^-1, c^-1, b^-1, d^-1b^-1, b^-1c^-1"),
    ("d^-1", "a^-1b", "1, d^-1, a^-1, a, c, b, a^-1b, b^-1, d, c^-1, c^-1d"),
    ("d^-1", "d^-1c", "1, a, c, b, d^-1, a^-1, a^-1c, a^-1b, b^-1"),
    ("d^-1", "c^-1d", "1, a^-1, c^-1, b^-1, b, a^-1d, d^-1, d, a, d^-1b^-1a"),
    ("d^-1", "a^-1c", "1, d^-1, a^-1, a, c, b, a^-1b, b^-1, c^-1b"),
    ("d^-1", "d^-1a", "1, b^-1, d^-1, a^-1, a^-1c"),
    ("d^-1", "c^-1b", "1, b, a^-1d, a^-1, d^-1, c^-1, b^-1, d^-1b^-1d"),
    ("d^-1", "c^-1a", "1, d^-1, a^-1, d, a, d^-1b^-1c, b^-1, c^-1"),
    ("d^-1", "a^-1d", "1, b^-1, d^-1, a^-1, b, d, c^-1a, c^-1"),
    ("d^-1", "d^-1b", "1, a, c, b, b^-1, d^-1, a^-1, a^-1d"),
    ("d^-1", "a^-1da", "1, b, d, a, c^-1ac, b^-1, d^-1, a^-1"),
    ("d^-1", "d^-1bd", "1, a, c, b, d, a^-1da, d^-1, a^-1"),
    ("d^-1", "c^-1ac", "1, d, a, c, d^-1b^-1cb, d^-1, b^-1, a^-1"),
    ("d^-1", "a^-1d^-1a", "1, b^-1, d^-1, a^-1, c^-1a^-1c"),
    ("d^-1", "d^-1b^-1d", "1, a^-1, c^-1, b^-1, d^-1, a^-1d^-1a"),
    ("d^-1", "b^-1c^-1b", "1, a^-1, c^-1, b^-1, d^-1, d^-1b^-1d"),
    ("d^-1", "c^-1a^-1c", "1, b^-1, d^-1, a^-1, c^-1, b^-1c^-1b"),
    ("d^-1", "a^-1bd", "1, d^-1, a^-1, a, c, b, a^-1b, b^-1, d, c^-1da, c^-1"),
    ("d^-1", "d^-1cb", "1, a, c, b, d^-1, a^-1c, a^-1bd, a^-1, b^-1"),
    ("d^-1", "c^-1da", "1, b, a^-1d, a^-1, d^-1, d, a, a^2, d^-1b^-1ac, b^-1, c^-1"),
    ("d^-1", "d^-1b^-1a", "1, b^-1, d^-1, a^-1, a^-1c, a^-1d^-1c, c^-1"),
    ("d^-1", "b^-1c^-1d", "1, a^-1, c^-1, b^-1, d^-1, a, d^-1a, d^-1b^-1a"),
    ("d^-1", "c^-1a^-1b", "1, b^-1, d^-1, a^-1, b, d, c^-1, b^-1c^-1d"),
    ("d^-1", "a^-1d^-1c", "1, d^-1, a^-1, a, c, b, a^-1b, b^-1, a^-2, c^-1a^-1b"),
    ("d^-1", "a^-1cb", "1, a, c, d^-1b, d^-1, a^-1, b, a^-1b, c^-1bd, d"),
    ("d^-1", "d^-1ac", "1, d^-1, a^-1, a, c, a^-1c, a^-1cb, b, b^-1"),
    ("d^-1", "c^-1bd", "1, b, a^-1d, a^-1, b^-1, d, d^-1b^-1da, a, c^-1"),
    ("d^-1", "b^-1c^-1a", "1, d^-1, a^-1, b^-1, a^-1d^-1, a, d^-1a, d^-1b^-1c, c^-1"),
    ("d^-1", "c^-1a^-1d", "1, d^-1, a^-1, c^-1, b^-1, d^-1b^-1, b, d, b^-1c^-1a"),
    ("d^-1", "a^-1d^-1b", "1, d^-1, a^-1, a, c, b, a^-1b, b^-1, c^-1, c^-1a^-1d, a^-2"),
    ("d^-1", "d^-1b^-1c", "1, d^-1, a^-1, a^-1c, a^-1d^-1b, b^-1"),
    ("d^-1", "a^-1d^-1bd", "1, d^-1, a^-1, a, c, b, a^-1b, b^-1, d, c^-1a^-1da, c^-1"),
    ("d^-1", "d^-1b^-1cb", "1, a, c, b, d^-1, a^-1c, a^-1d^-1bd, a^-1, b^-1"),
    ("d^-1", "b^-1c^-1ac", "1, b^-1, a, d^-1a, c, d^-1b^-1cb, d^-1, a^-1, a^-1d^-1, c^-1"),
    ("d^-1", "c^-1a^-1da", "1, b, d, a, b^-1c^-1ac, b^-1, a^-1, c^-1, d^-1, d^-1b^-1"),
    ("d^-1", "d^-1b^-1da", "1, b^-1, d^-1, a, a^-1d^-1ac, a^-1c, a^-1, c^-1"),
    ("d^-1", "b^-1c^-1bd", "1, a^-1, c^-1, b^-1, b, a^-1d, d^-1, d, d^-1b^-1da, a, d^-1a"),
    ("d^-1", "c^-1a^-1cb", "1, d^-1, a^-1, a, c, b, a^-1b, b^-1, c^-1, b^-1c^-1bd, d"),
    ("d^-1", "a^-1d^-1ac", "1, d^-1, a^-1, a, c, c^-1a^-1cb, b, b^-1, a^-1b"),
    ("d^-1", "a^-1d^-1cb", "1, a, c, d^-1b, d^-1, a^-1, b, a^-1b, c^-1a^-1bd, a^-2"),
    ("d^-1", "d^-1b^-1ac", "1, d^-1, a^-1, a, c, a^-1c, a^-1d^-1cb, b^-1"),
    ("d^-1", "b^-1c^-1da", "1, d^-1, a^-1, d, a, b^-1, d^-1a, a^2, d^-1b^-1ac, c^-1"),
    ("d^-1", "c^-1a^-1bd", "1, b^-1, d^-1, a^-1, b, d, b^-1c^-1da, c^-1"),
    ("d^-1", "a^2", "1, d, a, c, b^-1, d^-1, a^-1c"),
    ("d^-1", "a^-2", "1, d^-1, a^-1, c^-1, b^-1"),
)


def appendix_rows() -> list[tuple[str, list[str]]]:
    """``[(product expression, [section expressions])]``."""
    return [(f"{s} {x}", [t.strip() for t in items.split(",")]) for s, x, items in APPENDIX_ROWS]


def split_items(text: str) -> list[str]:
    """Split on commas that are not nested inside brackets."""
    items, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur).strip())
    return items


def portrait_rows() -> list[tuple[str, int, list[str]]]:
    """Portrait table with sign patterns expanded, one row per element."""
    out = []
    for element, level, sections in PORTRAIT_TABLE:
        for e, secs in zip(expand_signs(element), expand_signs(sections)):
            out.append((e, level, split_items(secs)))
    return out


def relators() -> list[str]:
    return [w for r in RELATORS for w in expand_signs(r)]
