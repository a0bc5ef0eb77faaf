"""Survey the whole corpus: classification, coefficients, verdicts.

The interesting row is tol-d: its interior ascending cycle is concave and
the corresponding restriction coefficient is negative, yet the degree-2
pairing determinant stays nonzero, so the hard Lefschetz verdict holds.
"""

from gkm import corpus, corpus_names, hard_lefschetz_report, orient

print(f"{'name':<12} {'type':<5} {'betti':<14} {'hull':<9} "
      f"{'det(deg 2)':<12} verdict")
for name in corpus_names():
    inst = corpus(name)
    og = orient(inst.graph, inst.xi)
    report = hard_lefschetz_report(og)
    betti = ",".join(map(str, report.betti))
    print(f"{name:<12} ({report.table.label})   ({betti})    "
          f"{report.table.hull_shape:<9} {str(report.mixed_determinant):<12} "
          f"{'holds' if report.hard_lefschetz else 'FAILS'}")

print("\ntol-d in detail:")
inst = corpus("tol-d")
report = hard_lefschetz_report(orient(inst.graph, inst.xi))
for pair in report.pairs:
    if pair.adjacent:
        print(f"  ({pair.p}, {pair.q}): ratio {pair.moment_ratio}, "
              f"coefficient {pair.thom_coefficient}")
for p, shape in sorted(report.cycle_shapes.items()):
    extra = f" ({shape.tetra_class})" if shape.tetra_class else ""
    print(f"  cycle at {p}: {'-'.join(shape.vertices)}, {shape.kind}{extra}")
