import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from causex.model import (
    CausalAtom,
    ExplanationAtom,
    KnowledgeBase,
    Literal,
    OntAtom,
    ParseError,
    Scenario,
    format_atom,
    parse_kb,
    parse_scenario,
    serialize_kb,
)


def test_minimal_kb():
    kb = parse_kb("symbol(a). symbol(b). cause(a,b).")
    assert kb.symbols == {"a", "b"}
    assert kb.causes == {CausalAtom("a", "b")}
    assert not kb.ont and not kb.w


def test_cnf_clause_from_background_theory():
    kb = parse_kb("symbol(epsilon1). symbol(gamma1). symbol(gamma2). clause(-epsilon1, -gamma1, -gamma2).")
    assert kb.w == {frozenset({Literal("epsilon1", False), Literal("gamma1", False), Literal("gamma2", False)})}


def test_undeclared_symbols_are_errors():
    with pytest.raises(ParseError) as exc:
        parse_kb("cause(a,b).")
    errors = [d for d in exc.value.diagnostics if d.severity == "error"]
    assert len(errors) == 2
    assert [d.message for d in errors] == ["undeclared symbol a", "undeclared symbol b"]
    assert (errors[0].line, errors[0].col) == (1, 7)


def test_declaration_after_use_is_fine():
    kb = parse_kb("ont(a,b).\nsymbol(a). symbol(b).")
    assert kb.ont == {OntAtom("a", "b")}


def test_duplicate_fact_warns_and_dedups():
    diags = []
    kb = parse_kb("symbol(a). symbol(b). cause(a,b).\ncause(a, b).", diags)
    assert len(kb.causes) == 1
    assert [(d.line, d.severity) for d in diags] == [(2, "warning")]


def test_tautology_dropped_with_warning():
    diags = []
    kb = parse_kb("symbol(a). symbol(b). clause(a, -a, b).", diags)
    assert kb.w == frozenset()
    assert diags[0].severity == "warning" and "tautolog" in diags[0].message


def test_comments_and_layout():
    src = "% header\nsymbol(a).   % trailing\n\n  symbol(\n b\n ) .\ncause(a,b). %x"
    assert len(parse_kb(src).symbols) == 2


@pytest.mark.parametrize("src, line, col", [
    ("symbol(a", 1, 8),
    ("symbol(a).\nsymbol(B).", 2, 8),
    ("symbol(a) symbol(b).", 1, 11),
    ("symbol(a).\nfoo(a).", 2, 1),
    ("symbol(a).\ncause(a).", 2, 1),
    ("symbol(a).\nsymbol(-a).", 2, 9),
    ("symbole(a).", 1, 1),
])
def test_syntax_errors_carry_locations(src, line, col):
    with pytest.raises(ParseError) as exc:
        parse_kb(src)
    first = [d for d in exc.value.diagnostics if d.severity == "error"][0]
    assert (first.line, first.col) == (line, col)
    assert str(first).startswith(f"{line}:{col}: error: ")


def test_parser_recovers_and_reports_several_errors():
    with pytest.raises(ParseError) as exc:
        parse_kb("symbol(a). cause(a,). symbol(b). ont(a,c). clause(a b).")
    assert len([d for d in exc.value.diagnostics if d.severity == "error"]) == 3


def test_bytes_input_and_bad_utf8():
    assert parse_kb(b"symbol(a).").symbols == {"a"}
    with pytest.raises(ParseError):
        parse_kb(b"symbol(\xff).")


def test_scenario_parsing():
    assert parse_scenario("false(gamma1).").assignment == {"gamma1": False}
    assert parse_scenario("").assignment == {}
    with pytest.raises(ParseError) as exc:
        parse_scenario("true(a). false(a).")
    assert exc.value.diagnostics[0].message == "conflicting assignment for a"
    with pytest.raises(ParseError):
        parse_scenario("maybe(a).")


def test_format_atom():
    assert format_atom(ExplanationAtom("alpha", "delta", {"gamma1", "alpha"})) == \
        "alpha explains delta because {alpha,gamma1}"
    assert format_atom(ExplanationAtom("a", "a", {"a"})) == "a explains a because {a}"
    assert format_atom(ExplanationAtom("alpha", "beta2", {"alpha"}), ecset=True) == "ecSet(alpha,beta2,{alpha})"


def test_kb_constructor_enforces_invariants():
    with pytest.raises(ValueError):
        KnowledgeBase({"a"}, {CausalAtom("a", "b")})
    with pytest.raises(ValueError):
        KnowledgeBase({"A"})
    with pytest.raises(ValueError):
        KnowledgeBase({"a"}, w={frozenset({Literal("a"), Literal("a", False)})})


def test_scenario_falsified():
    assert Scenario({"a": False, "b": True}).falsified == {"a"}


# -- properties ---------------------------------------------------------------

names = st.sampled_from(["a", "b", "c", "d", "x_1", "gamma2"])


@st.composite
def knowledge_bases(draw):
    syms = draw(st.sets(names, min_size=1))
    pick = st.sampled_from(sorted(syms))
    causes = draw(st.sets(st.builds(CausalAtom, pick, pick), max_size=5))
    ont = draw(st.sets(st.builds(OntAtom, pick, pick), max_size=5))
    clauses = draw(st.sets(st.frozensets(st.builds(Literal, pick, st.booleans()), min_size=1, max_size=3),
                           max_size=4))
    clauses = {c for c in clauses if not any(l.negate() in c for l in c)}
    return KnowledgeBase(syms, causes, ont, clauses)


@given(knowledge_bases())
def test_serialize_round_trip(kb):
    text = serialize_kb(kb)
    again = parse_kb(text)
    assert again == kb
    assert serialize_kb(again) == text


@settings(max_examples=300)
@given(st.text(alphabet=string.ascii_lowercase[:4] + "()., -%\nsymbolcauseontclause", max_size=80))
def test_parser_is_total_and_never_accepts_invalid(text):
    try:
        kb = parse_kb(text)
    except ParseError as exc:
        assert any(d.severity == "error" for d in exc.diagnostics)
        return
    # reconstructing re-checks every KnowledgeBase invariant
    assert KnowledgeBase(kb.symbols, kb.causes, kb.ont, kb.w) == kb


@given(st.sets(st.builds(ExplanationAtom, names, names, st.frozensets(names, max_size=4)), max_size=20))
def test_format_atom_injective(atoms):
    rendered = {format_atom(a) for a in atoms}
    assert len(rendered) == len(atoms)
