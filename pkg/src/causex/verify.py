"""Scenario checking of explanation atoms."""

from __future__ import annotations

from typing import Iterable

from .model import ExplanationAtom, Scenario


class ScenarioError(ValueError):
    pass


def check_scenario(scenario: Scenario, symbols: Iterable[str]) -> list:
    """Names assigned by ``scenario`` that are not declared symbols."""
    return sorted(scenario.symbols() - frozenset(symbols))


def verify(atoms: Iterable[ExplanationAtom], scenario: Scenario, symbols=None):
    """Split ``atoms`` into (verified, suppressed).

    An atom is suppressed as soon as one of its conditions is assigned false.
    Each atom is checked on its own; the scenario is not tested for joint
    consistency with the background theory.  When ``symbols`` is given, a
    scenario mentioning undeclared names raises ScenarioError.
    """
    if symbols is not None:
        unknown = check_scenario(scenario, symbols)
        if unknown:
            raise ScenarioError(f"scenario uses undeclared symbol(s): {', '.join(unknown)}")
    false = scenario.falsified
    verified, suppressed = set(), set()
    for atom in atoms:
        (suppressed if atom.conditions & false else verified).add(atom)
    return frozenset(verified), frozenset(suppressed)
