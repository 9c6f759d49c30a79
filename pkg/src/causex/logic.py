"""Augmented background theory and the propositional decision procedure.

Every guard of the inference rules is a satisfiability or entailment query
against W*: the user clauses of W plus one implication clause per causal atom
and per non-reflexive pair of the closed IS-A relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .model import Clause, KnowledgeBase, Literal, Symbol

USER_W = "user-W"
CAUSAL = "causal-implication"
ONTOLOGICAL = "ontological-implication"


@dataclass(frozen=True)
class AugmentedTheory:
    clauses: frozenset
    origins: dict = field(default_factory=dict, compare=False, repr=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False, init=False)
    _index: dict = field(default_factory=dict, compare=False, repr=False, init=False)

    def __post_init__(self):
        object.__setattr__(self, "clauses", frozenset(self.clauses))
        names = sorted({lit.symbol for cl in self.clauses for lit in cl})
        self._index.update((s, i + 1) for i, s in enumerate(names))
        encoded = [
            frozenset(self._index[l.symbol] if l.positive else -self._index[l.symbol] for l in cl)
            for cl in self.clauses
        ]
        object.__setattr__(self, "_encoded", encoded)

    def symbols(self) -> frozenset:
        return frozenset(self._index)

    def by_origin(self, origin: str) -> frozenset:
        return frozenset(cl for cl, tags in self.origins.items() if origin in tags)


def implication(a: Symbol, b: Symbol) -> Clause:
    return frozenset({Literal(a, False), Literal(b, True)})


def augment(kb: KnowledgeBase, closure) -> AugmentedTheory:
    """Build W* from ``kb`` and the IS-A closure of ``kb.ont``.

    ``closure`` is anything iterable over (sub, sup) pairs.
    """
    origins: dict = {}
    for cl in kb.w:
        origins.setdefault(cl, set()).add(USER_W)
    for c in kb.causes:
        if c.cause != c.effect:
            origins.setdefault(implication(c.cause, c.effect), set()).add(CAUSAL)
    for a, b in closure:
        if a != b:
            origins.setdefault(implication(a, b), set()).add(ONTOLOGICAL)
    return AugmentedTheory(frozenset(origins), {k: frozenset(v) for k, v in origins.items()})


# ---------------------------------------------------------------------------
# DPLL: unit propagation, pure literals, branch on the smallest variable
# (variables are numbered in lexicographic order of symbol names).

def _assign(clauses: list, lit: int):
    out = []
    for cl in clauses:
        if lit in cl:
            continue
        if -lit in cl:
            cl = cl - {-lit}
            if not cl:
                return None
        out.append(cl)
    return out


def _dpll(clauses: list) -> bool:
    while True:
        unit = next((cl for cl in clauses if len(cl) == 1), None)
        if unit is not None:
            clauses = _assign(clauses, next(iter(unit)))
            if clauses is None:
                return False
            continue
        lits = {l for cl in clauses for l in cl}
        pure = [l for l in lits if -l not in lits]
        if pure:
            pure_set = set(pure)
            clauses = [cl for cl in clauses if not (cl & pure_set)]
            continue
        break
    if not clauses:
        return True
    var = min(abs(l) for l in lits)
    for lit in (var, -var):
        reduced = _assign(clauses, lit)
        if reduced is not None and _dpll(reduced):
            return True
    return False


def _solve(theory: AugmentedTheory, pos: frozenset, neg: frozenset = frozenset()) -> bool:
    key = (pos, neg)
    hit = theory._cache.get(key)
    if hit is not None:
        return hit
    if pos & neg:
        result = False
    else:
        idx = theory._index
        units = [idx[s] for s in pos if s in idx] + [-idx[s] for s in neg if s in idx]
        clauses = theory._encoded
        result = True
        for u in units:
            clauses = _assign(clauses, u)
            if clauses is None:
                result = False
                break
        if result:
            result = _dpll(clauses)
    theory._cache[key] = result
    return result


def satisfiable(theory: AugmentedTheory, assumptions: Iterable[Symbol] = ()) -> bool:
    """True iff W* together with every assumption as a unit clause is satisfiable."""
    return _solve(theory, frozenset(assumptions))


def entails_symbol(theory: AugmentedTheory, assumptions: Iterable[Symbol], goal: Symbol) -> bool:
    assumptions = frozenset(assumptions)
    if goal in assumptions:
        return True
    return not _solve(theory, assumptions, frozenset({goal}))


def entails_set(theory: AugmentedTheory, phi: Iterable[Symbol], psi: Iterable[Symbol]) -> bool:
    """True iff the conjunction of ``phi`` entails the conjunction of ``psi`` under W*."""
    phi = frozenset(phi)
    return all(entails_symbol(theory, phi, q) for q in psi)
