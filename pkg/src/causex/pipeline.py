"""Convenience wrapper running closure, W*, saturation and optimisation once."""

from __future__ import annotations

from dataclasses import dataclass

from .logic import AugmentedTheory
from .model import KnowledgeBase
from .reduce import optimal_filter
from .saturation import DEFAULT_MAX_ATOMS, fixpoint, initial_explanations, theory_for


@dataclass(frozen=True)
class Result:
    kb: KnowledgeBase
    closure: frozenset
    wstar: AugmentedTheory
    initial: frozenset
    derived: frozenset
    optimal: frozenset | None = None


def run(kb: KnowledgeBase, simplify: bool = True, optimize: bool = True,
        max_atoms: int = DEFAULT_MAX_ATOMS) -> Result:
    closure, wstar = theory_for(kb)
    init = initial_explanations(kb, closure, wstar, simplify=simplify)
    derived = fixpoint(init, wstar, simplify=simplify, max_atoms=max_atoms)
    optimal = optimal_filter(derived, wstar) if optimize else None
    return Result(kb, closure, wstar, init, derived, optimal)
