"""Self-similar groups generated by invertible Mealy automata: word problem,
nucleus and structural checks, Schreier graphs and level-operator spectra."""

from .automaton import (
    MealyAutomaton,
    build_automaton,
    invert_automaton,
    load_automaton,
    moore_diagram,
)
from .group import AutomatonGroup, ElementTable, ResourceLimitExceeded

__all__ = [
    "AutomatonGroup",
    "ElementTable",
    "MealyAutomaton",
    "ResourceLimitExceeded",
    "build_automaton",
    "invert_automaton",
    "load_automaton",
    "moore_diagram",
]
