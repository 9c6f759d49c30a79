"""
Exporting the three ASP programs and a DOT graph
================================================

Writes the generation, optimisation and verification programs for the
diagram, plus a DOT rendering of the four optimal alpha -> delta paths.
"""

import tempfile
from pathlib import Path

from causex import emit_asp, emit_dot, load_diagram, run

kb = load_diagram()
outdir = Path(tempfile.mkdtemp(prefix="causex-"))

for path in emit_asp(kb).write(outdir, "diagram"):
    print(path, len(path.read_text().splitlines()), "lines")

result = run(kb)
paths = [a for a in result.optimal if (a.explainer, a.explained) == ("alpha", "delta")]
dot = outdir / "diagram.dot"
dot.write_text(emit_dot(paths, kb))
print(dot.read_text())

###############################################################################
# Render with graphviz if it is installed:  dot -Tpng diagram.dot -o paths.png
