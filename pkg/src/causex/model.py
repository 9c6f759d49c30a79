"""Domain vocabulary and the knowledge-base / scenario file formats.

A knowledge base is written as a sequence of dot-terminated facts::

    symbol(alpha).  symbol(beta).
    cause(alpha, beta).
    ont(beta1, beta).
    clause(-epsilon1, -gamma1, -gamma2).   % CNF clause of W

``%`` starts a comment running to the end of the line.  Symbols must be
declared with ``symbol/1`` before (or after) they are used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

Symbol = str

IDENT = re.compile(r"[a-z][A-Za-z0-9_]*")


def is_symbol(name: str) -> bool:
    return IDENT.fullmatch(name) is not None


class Literal(NamedTuple):
    symbol: Symbol
    positive: bool = True

    def negate(self) -> "Literal":
        return Literal(self.symbol, not self.positive)

    def __str__(self) -> str:
        return self.symbol if self.positive else "-" + self.symbol


Clause = frozenset  # frozenset[Literal]


def make_clause(literals: Iterable[Literal]) -> Clause:
    lits = frozenset(literals)
    if not lits:
        raise ValueError("a clause needs at least one literal")
    return lits


def is_tautology(clause: Iterable[Literal]) -> bool:
    lits = set(clause)
    return any(lit.negate() in lits for lit in lits)


def clause_key(clause: Clause) -> tuple:
    """Sort key putting literals in (name, negative-first) order."""
    return tuple(sorted((lit.symbol, lit.positive) for lit in clause))


def format_clause(clause: Clause) -> str:
    lits = sorted(clause, key=lambda l: (l.symbol, l.positive))
    return "clause(" + ", ".join(str(l) for l in lits) + ")."


@dataclass(frozen=True, order=True)
class CausalAtom:
    cause: Symbol
    effect: Symbol


@dataclass(frozen=True, order=True)
class OntAtom:
    """``sub`` IS-A ``sup``."""

    sub: Symbol
    sup: Symbol


@dataclass(frozen=True)
class KnowledgeBase:
    symbols: frozenset = frozenset()
    causes: frozenset = frozenset()
    ont: frozenset = frozenset()
    w: frozenset = frozenset()

    def __post_init__(self):
        for name in ("symbols", "causes", "ont", "w"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        bad = sorted(s for s in self.symbols if not is_symbol(s))
        if bad:
            raise ValueError(f"invalid symbol name(s): {', '.join(bad)}")
        used = set()
        for c in self.causes:
            used.update((c.cause, c.effect))
        for o in self.ont:
            used.update((o.sub, o.sup))
        for cl in self.w:
            if not cl:
                raise ValueError("empty clause in W")
            if is_tautology(cl):
                raise ValueError(f"tautological clause {format_clause(cl)}")
            used.update(lit.symbol for lit in cl)
        missing = sorted(used - self.symbols)
        if missing:
            raise ValueError(f"undeclared symbol(s): {', '.join(missing)}")


@dataclass(frozen=True)
class ExplanationAtom:
    """``explainer`` explains ``explained`` provided ``conditions`` is possible."""

    explainer: Symbol
    explained: Symbol
    conditions: frozenset

    def __post_init__(self):
        object.__setattr__(self, "conditions", frozenset(self.conditions))

    def sort_key(self) -> tuple:
        return (self.explainer, self.explained, format_conditions(self.conditions))

    def __str__(self) -> str:
        return format_atom(self)


@dataclass(frozen=True)
class Scenario:
    """Partial truth assignment over declared symbols."""

    assignment: Mapping = field(default_factory=dict)

    @property
    def falsified(self) -> frozenset:
        return frozenset(s for s, v in self.assignment.items() if not v)

    def symbols(self) -> frozenset:
        return frozenset(self.assignment)


def format_conditions(conditions: Iterable[Symbol]) -> str:
    return "{" + ",".join(sorted(conditions)) + "}"


def format_atom(atom: ExplanationAtom, ecset: bool = False) -> str:
    """Render an explanation atom.

    >>> format_atom(ExplanationAtom("alpha", "delta", {"gamma1", "alpha"}))
    'alpha explains delta because {alpha,gamma1}'
    >>> format_atom(ExplanationAtom("alpha", "beta2", {"alpha"}), ecset=True)
    'ecSet(alpha,beta2,{alpha})'
    """
    conds = format_conditions(atom.conditions)
    if ecset:
        return f"ecSet({atom.explainer},{atom.explained},{conds})"
    return f"{atom.explainer} explains {atom.explained} because {conds}"


def sorted_atoms(atoms: Iterable[ExplanationAtom]) -> list:
    return sorted(atoms, key=ExplanationAtom.sort_key)


# ---------------------------------------------------------------------------
# diagnostics and parsing

@dataclass(frozen=True)
class Diagnostic:
    line: int
    col: int
    severity: str  # "error" | "warning"
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.severity}: {self.message}"


class ParseError(ValueError):
    """Raised when a source has at least one error diagnostic.

    ``diagnostics`` holds every diagnostic found, warnings included.
    """

    def __init__(self, diagnostics: list):
        self.diagnostics = list(diagnostics)
        errors = [d for d in self.diagnostics if d.severity == "error"]
        super().__init__("\n".join(str(d) for d in errors))


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<comment>%[^\n]*)|(?P<ident>[a-z][A-Za-z0-9_]*)"
    r"|(?P<punct>[(),.\-])|(?P<bad>.)",
    re.DOTALL,
)


class _Tok(NamedTuple):
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str, diags: list) -> list:
    toks = []
    line, line_start = 1, 0
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        col = m.start() - line_start + 1
        if kind == "bad":
            diags.append(Diagnostic(line, col, "error", f"unexpected character {m.group()!r}"))
            toks.append(_Tok("bad", m.group(), line, col))
        elif kind in ("ident", "punct"):
            toks.append(_Tok(kind, m.group(), line, col))
        nl = m.group().count("\n")
        if nl:
            line += nl
            line_start = m.start() + m.group().rfind("\n") + 1
    return toks


class _Fact(NamedTuple):
    pred: str
    args: list  # list of (negated, name, line, col)
    line: int
    col: int


def _parse_facts(text, diags: list) -> list:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            diags.append(Diagnostic(1, exc.start + 1, "error", "input is not valid UTF-8"))
            return []
    toks = _tokenize(text, diags)
    facts = []
    i, n = 0, len(toks)

    def fail(tok, msg):
        nonlocal i
        if tok is None:
            last = toks[-1] if toks else _Tok("eof", "", 1, 1)
            diags.append(Diagnostic(last.line, last.col, "error", msg + " at end of input"))
            i = n
            return
        if tok.kind != "bad":
            diags.append(Diagnostic(tok.line, tok.col, "error", msg))
        # resynchronise after the next statement terminator
        while i < n and toks[i].text != ".":
            i += 1
        i += 1

    while i < n:
        head = toks[i]
        if head.kind != "ident":
            fail(head, f"expected a predicate name, found {head.text!r}")
            continue
        i += 1
        if i >= n or toks[i].text != "(":
            fail(toks[i] if i < n else None, f"expected '(' after {head.text}")
            continue
        i += 1
        args, ok = [], True
        while True:
            neg = False
            if i < n and toks[i].text == "-":
                neg = True
                i += 1
            if i >= n or toks[i].kind != "ident":
                fail(toks[i] if i < n else None, "expected an identifier")
                ok = False
                break
            args.append((neg, toks[i].text, toks[i].line, toks[i].col))
            i += 1
            if i < n and toks[i].text == ",":
                i += 1
                continue
            if i < n and toks[i].text == ")":
                i += 1
                break
            fail(toks[i] if i < n else None, "expected ',' or ')'")
            ok = False
            break
        if not ok:
            continue
        if i >= n or toks[i].text != ".":
            fail(toks[i] if i < n else None, "expected '.' after fact")
            continue
        i += 1
        facts.append(_Fact(head.text, args, head.line, head.col))
    return facts


_ARITY = {"symbol": 1, "cause": 2, "ont": 2}


def parse_kb(text, diagnostics: list | None = None) -> KnowledgeBase:
    """Parse a knowledge-base source.

    Warnings are appended to ``diagnostics`` when a list is given.  Any error
    raises :class:`ParseError` carrying the full diagnostic list.
    """
    diags: list = []
    facts = _parse_facts(text, diags)

    declared = {}
    for f in facts:
        if f.pred == "symbol" and len(f.args) == 1 and not f.args[0][0]:
            declared.setdefault(f.args[0][1], f)

    symbols, causes, ont, w = set(), set(), set(), set()

    def check(arg):
        neg, name, line, col = arg
        if name not in declared:
            diags.append(Diagnostic(line, col, "error", f"undeclared symbol {name}"))
            return False
        return True

    def dup(f, what):
        diags.append(Diagnostic(f.line, f.col, "warning", f"duplicate {what} ignored"))

    for f in facts:
        if f.pred in _ARITY:
            if len(f.args) != _ARITY[f.pred]:
                diags.append(Diagnostic(f.line, f.col, "error",
                                        f"{f.pred} expects {_ARITY[f.pred]} argument(s), got {len(f.args)}"))
                continue
            negs = [a for a in f.args if a[0]]
            if negs:
                diags.append(Diagnostic(negs[0][2], negs[0][3], "error",
                                        f"negation is only allowed inside clause/n"))
                continue
            names = [a[1] for a in f.args]
            if f.pred == "symbol":
                if names[0] in symbols:
                    dup(f, f"declaration of {names[0]}")
                symbols.add(names[0])
                continue
            if not all([check(a) for a in f.args]):
                continue
            atom = CausalAtom(*names) if f.pred == "cause" else OntAtom(*names)
            store = causes if f.pred == "cause" else ont
            if atom in store:
                dup(f, f"fact {f.pred}({names[0]},{names[1]})")
            store.add(atom)
        elif f.pred == "clause":
            if not all([check(a) for a in f.args]):
                continue
            cl = frozenset(Literal(name, not neg) for neg, name, _, _ in f.args)
            if is_tautology(cl):
                diags.append(Diagnostic(f.line, f.col, "warning", "tautological clause dropped"))
                continue
            if cl in w:
                dup(f, "clause")
            w.add(cl)
        else:
            diags.append(Diagnostic(f.line, f.col, "error", f"unknown predicate {f.pred}/{len(f.args)}"))

    diags.sort(key=lambda d: (d.line, d.col))
    if diagnostics is not None:
        diagnostics.extend(diags)
    if any(d.severity == "error" for d in diags):
        raise ParseError(diags)
    return KnowledgeBase(frozenset(symbols), frozenset(causes), frozenset(ont), frozenset(w))


def serialize_kb(kb: KnowledgeBase) -> str:
    """Render ``kb`` back into the source grammar (deterministic)."""
    lines = [f"symbol({s})." for s in sorted(kb.symbols)]
    lines += [f"cause({c.cause},{c.effect})." for c in sorted(kb.causes)]
    lines += [f"ont({o.sub},{o.sup})." for o in sorted(kb.ont)]
    lines += [format_clause(cl) for cl in sorted(kb.w, key=clause_key)]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_scenario(text, diagnostics: list | None = None) -> Scenario:
    """Parse ``true(x).`` / ``false(x).`` facts into a :class:`Scenario`."""
    diags: list = []
    facts = _parse_facts(text, diags)
    assignment: dict = {}
    for f in facts:
        if f.pred not in ("true", "false") or len(f.args) != 1 or f.args[0][0]:
            diags.append(Diagnostic(f.line, f.col, "error",
                                    f"expected true(x) or false(x), found {f.pred}/{len(f.args)}"))
            continue
        name, value = f.args[0][1], f.pred == "true"
        if name in assignment:
            if assignment[name] != value:
                diags.append(Diagnostic(f.line, f.col, "error", f"conflicting assignment for {name}"))
            else:
                diags.append(Diagnostic(f.line, f.col, "warning", f"duplicate assignment for {name} ignored"))
            continue
        assignment[name] = value
    diags.sort(key=lambda d: (d.line, d.col))
    if diagnostics is not None:
        diagnostics.extend(diags)
    if any(d.severity == "error" for d in diags):
        raise ParseError(diags)
    return Scenario(assignment)
