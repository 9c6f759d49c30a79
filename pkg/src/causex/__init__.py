"""Causal explanation inference from causal, IS-A and background knowledge."""

from .emit import AspBundle, emit_asp, emit_dot, emit_json
from .logic import AugmentedTheory, augment, entails_set, entails_symbol, satisfiable
from .model import (
    CausalAtom,
    Diagnostic,
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
from .pipeline import run
from .reduce import optimal_filter, weak_simplify
from .saturation import (
    ResourceLimitExceeded,
    UnsatisfiableTheory,
    initial_explanations,
    ont_closure,
    saturate,
)
from .verify import ScenarioError, verify

__version__ = "0.1.0"


def load_diagram() -> KnowledgeBase:
    """The bundled generic-diagram knowledge base (15 symbols)."""
    from importlib import resources

    return parse_kb(resources.files(__name__).joinpath("data", "diagram.ec").read_text("utf-8"))
