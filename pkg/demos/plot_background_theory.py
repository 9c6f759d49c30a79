"""
Background constraints block explanations
=========================================

Clauses of W rule out condition sets.  Here a soft bell and a loud bell
cannot both be heard; each still gets its own explanation, and an alarm
declared impossible explains nothing.
"""

from causex import parse_kb, saturate
from causex.model import format_atom, sorted_atoms

source = """
symbol(on_alarm). symbol(heard_bell). symbol(heard_soft_bell). symbol(heard_loud_bell).
symbol(fire). symbol(smoke). symbol(grey_smoke).

cause(on_alarm, heard_bell).
ont(heard_soft_bell, heard_bell).
ont(heard_loud_bell, heard_bell).
clause(-heard_soft_bell, -heard_loud_bell).

cause(fire, smoke).
ont(grey_smoke, smoke).
"""

kb = parse_kb(source)
for atom in sorted_atoms(saturate(kb)):
    print(format_atom(atom))

###############################################################################
# Making the alarm itself impossible removes every explanation it started.

blocked = parse_kb(source + "clause(-on_alarm).")
assert all(a.explainer != "on_alarm" for a in saturate(blocked))
