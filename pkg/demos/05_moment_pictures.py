"""Draw every corpus instance as an SVG moment picture.

Shaded hull, edges with ascending arrowheads, vertices labeled with their
down-degrees, covector in the margin.  Output is deterministic.
"""

from pathlib import Path

from gkm import corpus, corpus_names, orient, render_svg

out_dir = Path("moment-pictures")
out_dir.mkdir(exist_ok=True)

for name in corpus_names():
    inst = corpus(name)
    og = orient(inst.graph, inst.xi)
    svg = render_svg(inst.graph, og, title=f"{name}  (type {inst.expected_type})")
    target = out_dir / f"{name}.svg"
    target.write_text(svg, encoding="utf-8")
    print(f"wrote {target}")
