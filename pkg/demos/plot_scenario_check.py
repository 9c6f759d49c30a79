"""
Checking explanations against a scenario
========================================

A scenario assigns truth values to some symbols.  An explanation atom is
suppressed as soon as one of its conditions is known to be false.
"""

from causex import load_diagram, parse_scenario, run, verify
from causex.model import format_atom, sorted_atoms

kb = load_diagram()
result = run(kb)

scenario = parse_scenario("false(gamma1).")
verified, suppressed = verify(result.optimal, scenario, symbols=kb.symbols)

print(f"{len(verified)} verified, {len(suppressed)} suppressed")
for atom in sorted_atoms(suppressed):
    print("suppressed:", format_atom(atom))

###############################################################################
# Facts set to true never suppress anything; only falsity matters.

verified_t, _ = verify(result.optimal, parse_scenario("true(gamma1)."))
assert verified_t == result.optimal
