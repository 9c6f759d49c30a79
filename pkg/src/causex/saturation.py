"""IS-A closure and saturation of explanation atoms.

``saturate`` computes the least set of explanation atoms that contains every
initial-case instance and is closed under transitivity (conditions gathered
by union).  By default each atom is weakly simplified before it is stored.
"""

from __future__ import annotations

import heapq
from collections import defaultdict

from .logic import AugmentedTheory, augment, satisfiable
from .model import ExplanationAtom, KnowledgeBase
from .reduce import weak_simplify

DEFAULT_MAX_ATOMS = 100_000


class UnsatisfiableTheory(ValueError):
    """W* has no model, so every condition set would be impossible."""


class ResourceLimitExceeded(RuntimeError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"explanation atom count exceeded the cap of {limit}")


def ont_closure(kb: KnowledgeBase) -> frozenset:
    """Reflexive-transitive closure of the IS-A links as a set of pairs."""
    succ = defaultdict(set)
    for o in kb.ont:
        succ[o.sub].add(o.sup)
    pairs = set()
    for s in kb.symbols:
        seen = {s}
        stack = [s]
        while stack:
            for t in succ[stack.pop()]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        pairs.update((s, t) for t in seen)
    return frozenset(pairs)


def initial_explanations(kb: KnowledgeBase, closure, wstar: AugmentedTheory,
                         simplify: bool = True) -> frozenset:
    """All instances of the initial case.

    For ``a causes b`` and every ``d`` that IS-A both ``b`` and ``g``, emit
    ``a explains g because {a, d}`` when ``{a, d}`` is consistent with W*.
    """
    subs_of = defaultdict(set)   # b -> {d : d IS-A b}
    sups_of = defaultdict(set)   # d -> {g : d IS-A g}
    for d, b in closure:
        subs_of[b].add(d)
        sups_of[d].add(b)
    out = set()
    for c in sorted(kb.causes):
        for d in sorted(subs_of[c.effect]):
            if not satisfiable(wstar, {c.cause, d}):
                continue
            for g in sorted(sups_of[d]):
                atom = ExplanationAtom(c.cause, g, frozenset({c.cause, d}))
                out.add(weak_simplify(atom, wstar) if simplify else atom)
    return frozenset(out)


def fixpoint(initial, wstar: AugmentedTheory, simplify: bool = True,
             max_atoms: int = DEFAULT_MAX_ATOMS, stats: dict | None = None) -> frozenset:
    """Close ``initial`` under transitivity with a sorted worklist."""
    known = set()
    by_explainer = defaultdict(list)
    by_explained = defaultdict(list)
    heap = []

    def push(atom):
        if atom in known:
            return
        known.add(atom)
        if len(known) > max_atoms:
            raise ResourceLimitExceeded(max_atoms)
        heapq.heappush(heap, (atom.sort_key(), atom))

    for atom in initial:
        push(atom)

    iterations = 0
    while heap:
        _, atom = heapq.heappop(heap)
        iterations += 1
        by_explainer[atom.explainer].append(atom)
        by_explained[atom.explained].append(atom)
        pairs = [(atom, right) for right in list(by_explainer[atom.explained])]
        pairs += [(left, atom) for left in list(by_explained[atom.explainer]) if left is not atom]
        for left, right in pairs:
            conds = left.conditions | right.conditions
            if not satisfiable(wstar, conds):
                continue
            new = ExplanationAtom(left.explainer, right.explained, conds)
            push(weak_simplify(new, wstar) if simplify else new)
    if stats is not None:
        stats["iterations"] = iterations
        stats["atoms"] = len(known)
    return frozenset(known)


def theory_for(kb: KnowledgeBase):
    closure = ont_closure(kb)
    wstar = augment(kb, closure)
    if not satisfiable(wstar):
        raise UnsatisfiableTheory("the background theory W* is unsatisfiable")
    return closure, wstar


def saturate(kb: KnowledgeBase, simplify: bool = True, max_atoms: int = DEFAULT_MAX_ATOMS,
             stats: dict | None = None) -> frozenset:
    """Every explanation atom derivable from ``kb``.

    Raises UnsatisfiableTheory when W* is inconsistent and
    ResourceLimitExceeded when more than ``max_atoms`` atoms are produced.
    """
    closure, wstar = theory_for(kb)
    init = initial_explanations(kb, closure, wstar, simplify=simplify)
    return fixpoint(init, wstar, simplify=simplify, max_atoms=max_atoms, stats=stats)
