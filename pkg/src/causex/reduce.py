"""Weak simplification of condition sets and the optimality filter."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from .logic import AugmentedTheory, entails_set, entails_symbol
from .model import ExplanationAtom, format_conditions


def simplify_conditions(conditions: frozenset, keep, wstar: AugmentedTheory) -> frozenset:
    conds = set(conditions)
    changed = True
    while changed:
        changed = False
        for phi in sorted(conds):
            if phi == keep:
                continue
            rest = frozenset(conds - {phi})
            if entails_symbol(wstar, rest, phi):
                conds.discard(phi)
                changed = True
                break
    return frozenset(conds)


def weak_simplify(atom: ExplanationAtom, wstar: AugmentedTheory) -> ExplanationAtom:
    """Drop conditions entailed by the remaining ones, never the explainer.

    Candidates are scanned in lexicographic order and the scan restarts after
    every removal, so the result is deterministic.
    """
    conds = simplify_conditions(atom.conditions, atom.explainer, wstar)
    if conds == atom.conditions:
        return atom
    return ExplanationAtom(atom.explainer, atom.explained, conds)


def group_by_pair(atoms: Iterable[ExplanationAtom]) -> dict:
    groups = defaultdict(list)
    for a in atoms:
        groups[(a.explainer, a.explained)].append(a)
    return groups


def _filter_group(group: list, wstar: AugmentedTheory) -> list:
    group = sorted(group, key=lambda a: format_conditions(a.conditions))
    kept = []
    for a in group:
        phi = a.conditions
        dominated = False
        for b in group:
            if b is a:
                continue
            psi = b.conditions
            if entails_set(wstar, phi, psi) and not entails_set(wstar, psi, phi):
                dominated = True
                break
        if dominated:
            continue
        # equivalent sets: the group is sorted, so the first one seen wins
        if any(entails_set(wstar, phi, k.conditions) and entails_set(wstar, k.conditions, phi)
               for k in kept):
            continue
        kept.append(a)
    return kept


def optimal_filter(atoms: Iterable[ExplanationAtom], wstar: AugmentedTheory) -> frozenset:
    """Keep, per (explainer, explained) pair, only the weakest condition sets."""
    out = []
    for _, group in sorted(group_by_pair(atoms).items()):
        out.extend(_filter_group(group, wstar))
    return frozenset(out)
