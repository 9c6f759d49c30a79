"""
Explanation paths in the generic diagram
========================================

Loads the bundled diagram knowledge base, derives every explanation atom,
then keeps only the optimal ones for the pair (alpha, delta).
"""

from causex import load_diagram, optimal_filter, saturate
from causex.logic import augment
from causex.model import format_atom, sorted_atoms
from causex.saturation import ont_closure

kb = load_diagram()
print(f"{len(kb.symbols)} symbols, {len(kb.causes)} causal atoms, {len(kb.ont)} IS-A links")

# W*: the background theory plus the implications carried by causes and IS-A
wstar = augment(kb, ont_closure(kb))
derived = saturate(kb)
optimal = optimal_filter(derived, wstar)

###############################################################################
# Every condition set found for alpha -> delta, optimal ones starred

for atom in sorted_atoms(a for a in derived if (a.explainer, a.explained) == ("alpha", "delta")):
    mark = "*" if atom in optimal else " "
    print(mark, format_atom(atom))

###############################################################################
# The stronger sets are discarded: {alpha, beta3, gamma1} entails {alpha, gamma1}
# because beta3 IS-A beta1 IS-A beta, and alpha causes beta.
