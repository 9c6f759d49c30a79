from hypothesis import given
from hypothesis import strategies as st
from oracles import oracle_optimal

from causex.logic import AugmentedTheory, augment, entails_set, satisfiable
from causex.model import ExplanationAtom, Literal
from causex.reduce import group_by_pair, optimal_filter, weak_simplify
from causex.saturation import ont_closure, saturate

EMPTY = AugmentedTheory(frozenset())

# computed by oracles.brute_force_saturate + oracle_optimal on the diagram
DIAGRAM_ALPHA_DELTA_OPTIMAL = {
    frozenset({"alpha", "gamma1"}),
    frozenset({"alpha", "gamma2"}),
    frozenset({"alpha", "beta3", "epsilon1"}),
    frozenset({"alpha", "beta3", "epsilon2"}),
}


def E(a, b, *conds):
    return ExplanationAtom(a, b, frozenset(conds))


def wstar_of(kb):
    return augment(kb, ont_closure(kb))


def test_weak_simplify_examples(diagram):
    w = wstar_of(diagram)
    assert weak_simplify(E("alpha", "gamma1", "alpha", "beta2", "gamma1"), w) == E("alpha", "gamma1", "alpha", "gamma1")
    assert weak_simplify(E("a", "b", "a"), EMPTY) == E("a", "b", "a")
    assert weak_simplify(E("alpha", "gamma3", "alpha", "gamma2", "gamma3"), w) == E("alpha", "gamma3", "alpha", "gamma2")


def test_weak_simplify_never_drops_explainer():
    # b entails a, but a is the explainer
    w = AugmentedTheory(frozenset({frozenset({Literal("b", False), Literal("a")})}))
    assert weak_simplify(E("a", "x", "a", "b"), w) == E("a", "x", "a", "b")


def test_optimal_filter_small_cases():
    assert optimal_filter({E("a", "x", "a"), E("a", "x", "a", "b")}, EMPTY) == {E("a", "x", "a")}
    both = {E("a", "x", "a", "b"), E("a", "x", "a", "c")}
    assert optimal_filter(both, EMPTY) == both


def test_optimal_filter_equivalent_sets_keep_smallest():
    # b <-> c
    w = AugmentedTheory(frozenset({frozenset({Literal("b", False), Literal("c")}),
                                   frozenset({Literal("c", False), Literal("b")})}))
    atoms = {E("a", "x", "a", "b"), E("a", "x", "a", "c")}
    assert optimal_filter(atoms, w) == {E("a", "x", "a", "b")}


def test_diagram_group_alpha_delta(diagram):
    w = wstar_of(diagram)
    candidates = [{"alpha", "gamma1"}, {"alpha", "beta3", "gamma1"}, {"alpha", "gamma2"},
                  {"alpha", "beta3", "gamma2"}, {"alpha", "beta3", "epsilon1"}, {"alpha", "beta3", "epsilon2"}]
    kept = optimal_filter({E("alpha", "delta", *c) for c in candidates}, w)
    assert {a.conditions for a in kept} == DIAGRAM_ALPHA_DELTA_OPTIMAL


def test_non_optimal_path_through_beta1(diagram):
    derived = saturate(diagram)
    optimal = optimal_filter(derived, wstar_of(diagram))
    going_through_beta1 = E("alpha", "delta", "alpha", "beta3", "gamma1")
    assert going_through_beta1 in derived
    assert going_through_beta1 not in optimal


def test_diagram_optimal_matches_oracle(diagram):
    derived = saturate(diagram)
    got = {(a.explainer, a.explained, a.conditions) for a in optimal_filter(derived, wstar_of(diagram))}
    assert got == oracle_optimal(diagram, {(a.explainer, a.explained, a.conditions) for a in derived})


def test_properties_on_corpus(corpus):
    for kb in corpus[:200]:
        w = wstar_of(kb)
        derived = saturate(kb)
        kept = optimal_filter(derived, w)
        assert kept <= derived
        for a in derived:
            assert weak_simplify(a, w) == a
        groups = group_by_pair(kept)
        for a in derived - kept:
            assert any(entails_set(w, a.conditions, k.conditions) for k in groups[(a.explainer, a.explained)])
        for group in groups.values():
            for x in group:
                for y in group:
                    if x is not y:
                        assert not (entails_set(w, x.conditions, y.conditions)
                                    and not entails_set(w, y.conditions, x.conditions))


names = st.sampled_from(list("abcdef"))
lits = st.builds(Literal, names, st.booleans())


@given(st.lists(st.frozensets(lits, min_size=1, max_size=3), max_size=6),
       st.frozensets(names, max_size=5), names)
def test_weak_simplify_fixpoint_and_soundness(clauses, conds, explainer):
    w = AugmentedTheory(frozenset(clauses))
    atom = E(explainer, "z", explainer, *conds)
    once = weak_simplify(atom, w)
    assert weak_simplify(once, w) == once
    assert explainer in once.conditions
    assert once.conditions <= atom.conditions
    assert entails_set(w, once.conditions, atom.conditions)
    assert satisfiable(w, once.conditions) == satisfiable(w, atom.conditions)
