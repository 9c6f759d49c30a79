"""Emitters: three-part ASP program bundle, DOT path graph, JSON results."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable

from .model import ExplanationAtom, KnowledgeBase, clause_key, format_conditions, sorted_atoms

FACTS_BEGIN = "% --- facts ---"
FACTS_END = "% --- end facts ---"

STATUSES = ("derived", "optimal", "verified", "suppressed")


def rule_block(name: str) -> str:
    return resources.files("causex").joinpath("asp", f"{name}.lp").read_text(encoding="utf-8")


@dataclass(frozen=True)
class AspBundle:
    generation: str
    optimization: str
    verification: str

    def write(self, outdir, stem: str) -> list:
        outdir = Path(outdir)
        outdir.mkdir(parents=True, exist_ok=True)
        paths = []
        for suffix, text in (("gen", self.generation), ("opt", self.optimization),
                             ("ver", self.verification)):
            p = outdir / f"{stem}.{suffix}.lp"
            p.write_bytes(text.encode("utf-8"))
            paths.append(p)
        return paths


def asp_literal(lit) -> str:
    return f"true({lit.symbol})" if lit.positive else f"-true({lit.symbol})"


def asp_clause(clause) -> str:
    lits = sorted(clause, key=lambda l: (l.symbol, l.positive))
    return " v ".join(asp_literal(l) for l in lits) + "."


def _facts(kb: KnowledgeBase) -> list:
    lines = [FACTS_BEGIN]
    lines += [f"symbol({s})." for s in sorted(kb.symbols)]
    lines += [f"cause({c.cause},{c.effect})." for c in sorted(kb.causes)]
    lines += [f"ont({o.sub},{o.sup})." for o in sorted(kb.ont)]
    lines.append(FACTS_END)
    return lines


def _clauses(kb: KnowledgeBase) -> list:
    if not kb.w:
        return []
    return ["% background theory W, one disjunction per clause"] + [
        asp_clause(cl) for cl in sorted(kb.w, key=clause_key)
    ]


def _program(title: str, sections: list, block: str) -> str:
    lines = [f"% {title}", "% generated by causex; DLV-Complex syntax", ""]
    for sec in sections:
        if sec:
            lines += sec + [""]
    return "\n".join(lines) + block


def emit_asp(kb: KnowledgeBase) -> AspBundle:
    facts, clauses = _facts(kb), _clauses(kb)
    return AspBundle(
        generation=_program("generation program: derives ecSet/3",
                            [facts, clauses], rule_block("generation")),
        optimization=_program("optimisation program (reconstruction): ecSet/3 -> ecSetRes/3",
                              [facts], rule_block("optimization")),
        verification=_program("verification program: ecSetRes/3 -> explVer/3",
                              [facts, clauses], rule_block("verification")),
    )


def extract_facts(program: str) -> str:
    """The symbol/cause/ont fact section of an emitted program."""
    lines = program.splitlines()
    start, end = lines.index(FACTS_BEGIN), lines.index(FACTS_END)
    return "\n".join(lines[start + 1:end]) + "\n"


def _q(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def emit_dot(atoms: Iterable[ExplanationAtom], kb: KnowledgeBase) -> str:
    """DOT digraph with causal (solid), IS-A (dashed) and explanation edges."""
    atoms = sorted_atoms(atoms)
    lines = ["digraph explanations {"]
    for s in sorted(kb.symbols):
        lines.append(f"  {_q(s)};")
    for c in sorted(kb.causes):
        lines.append(f"  {_q(c.cause)} -> {_q(c.effect)} [style=solid];")
    for o in sorted(kb.ont):
        lines.append(f"  {_q(o.sub)} -> {_q(o.sup)} [style=dashed];")
    for a in atoms:
        label = format_conditions(a.conditions)
        lines.append(f"  {_q(a.explainer)} -> {_q(a.explained)} "
                     f"[label={_q(label)}, style=bold, color=blue];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def atom_record(atom: ExplanationAtom, status: str) -> dict:
    if status not in STATUSES:
        raise ValueError(f"unknown status {status!r}")
    return {
        "explainer": atom.explainer,
        "explained": atom.explained,
        "conditions": sorted(atom.conditions),
        "status": status,
    }


def emit_json(entries: Iterable) -> str:
    """``entries`` yields (atom, status) pairs; output is sorted by atom."""
    entries = sorted(entries, key=lambda e: (e[0].sort_key(), e[1]))
    return json.dumps([atom_record(a, s) for a, s in entries], indent=2) + "\n"
