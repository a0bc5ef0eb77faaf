"""Hodge-Riemann pairings and the hard Lefschetz verdict.

For a six-dimensional index-increasing instance the only nontrivial
nonsingularity question lives in cohomological degree 2.  This module
computes the degree-2 pairing matrix in the mixed Thom bases two
independent ways (full localization vs. the single-vertex shortcut),
verifies the product formula entry = -(thom coefficient)*(moment ratio)
for every index-two/index-four pair, evaluates determinants of all the
even-degree pairings exactly, checks every sign condition the theory
predicts, and assembles a verdict report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg
from .cohomology import (
    CohomologyElement,
    basis,
    equivariant_symplectic_class,
    scalar_multiple_of_weight,
    thom_class,
)
from .errors import (
    AmbiguousBelowNeighbor,
    ConditionViolated,
    DegreeError,
    GkmError,
    Mismatch,
    NotParallel,
    TypeMismatch,
)
from .geometry import (
    CycleShape,
    MomentImageType,
    classify_type,
    cycle_shape,
    require_six_dim,
)
from .graph import OrientedGkmGraph
from .localization import check_low_degree_vanishing, integrate
from .polynomial import Polynomial, lin_form


def moment_ratio(og: OrientedGkmGraph, p: str, q: str) -> Fraction:
    """The positive scalar with mu(q) - mu(p) = ratio * (weight from p to q).

    Zero when p and q are not adjacent.
    """
    edge = og.graph.edge_between(p, q)
    if edge is None:
        return Fraction(0)
    ratio = (og.graph.mu(q) - og.graph.mu(p)).parallel_ratio(edge.weight_from(p))
    if ratio is None:
        raise NotParallel(f"moment difference across {edge} is not parallel to its weight")
    return ratio


def below_neighbor(og: OrientedGkmGraph, q: str, excluding: str) -> str:
    """The unique neighbor of q below q other than ``excluding``."""
    candidates = [v for v in og.down_neighbors(q) if v != excluding]
    if len(candidates) != 1:
        raise AmbiguousBelowNeighbor(
            f"{q} has below-neighbors {candidates} apart from {excluding}"
        )
    return candidates[0]


def thom_coefficient(og: OrientedGkmGraph, p: str, q: str) -> Fraction:
    """Restriction coefficient of the Thom class of p at an adjacent q.

    The class of p vanishes at the below-neighbor v of q, so its value at
    q is a rational multiple of the weight read from q toward v; that
    multiple is returned.  Zero when p and q are not adjacent.
    """
    if og.down_degree(p) != 1 or og.down_degree(q) != 2:
        raise ValueError("expected an index-two p and an index-four q")
    if not og.graph.adjacent(p, q):
        return Fraction(0)
    v = below_neighbor(og, q, excluding=p)
    tau = thom_class(og, p, "plus")
    if not tau.value(v).is_zero():
        raise Mismatch(f"Thom class of {p} should vanish at {v}")
    return scalar_multiple_of_weight(tau, og.graph.edge_between(q, v))


@dataclass(frozen=True)
class CoefficientPair:
    p: str
    q: str
    moment_ratio: Fraction
    thom_coefficient: Fraction
    adjacent: bool

    def to_jsonable(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "moment_ratio": str(self.moment_ratio),
            "thom_coefficient": str(self.thom_coefficient),
            "adjacent": self.adjacent,
        }


def coefficient_pairs(og: OrientedGkmGraph) -> list[CoefficientPair]:
    """All (index-two, index-four) pairs with their coefficients.

    Enforces the structural biconditional: ratio > 0 iff adjacent iff
    coefficient nonzero.
    """
    pairs = []
    for p in og.vertices_of_index(1):
        for q in og.vertices_of_index(2):
            adjacent = og.graph.adjacent(p, q)
            ratio = moment_ratio(og, p, q)
            coeff = thom_coefficient(og, p, q)
            if adjacent != (ratio > 0) or adjacent != (coeff != 0):
                raise Mismatch(
                    f"pair ({p}, {q}): adjacency {adjacent}, ratio {ratio}, "
                    f"coefficient {coeff} violate the nonzero biconditional"
                )
            pairs.append(CoefficientPair(p, q, ratio, coeff, adjacent))
    return pairs


def _shifted_thom_product(og: OrientedGkmGraph, p: str) -> CohomologyElement:
    """tau_p^+ * (omega~ - mu(p)), the degree-2 building block."""
    omega = equivariant_symplectic_class(og.graph)
    shift = lin_form(og.graph.mu(p))
    return thom_class(og, p, "plus") * (omega - shift)


def _localized_entry(og: OrientedGkmGraph, value: Polynomial, q: str) -> Fraction:
    """value / nu_q^+ as an exact scalar (divide out both descending forms)."""
    quotient = value
    for e in og.down_edges(q):
        quotient = quotient.divide_by_linear(lin_form(e.weight_from(q)))
    constant = quotient.coefficient((0,) * og.graph.rank)
    if quotient != Polynomial.constant(og.graph.rank, constant):
        raise Mismatch("localized shortcut did not reduce to a scalar")
    return constant


def mixed_hr2_matrix(og: OrientedGkmGraph) -> list[list[Fraction]]:
    """Degree-2 pairing matrix: rows = descending Thom classes of the
    index-four vertices, columns = ascending Thom classes of the index-two
    vertices, paired through one symplectic factor.

    Every entry is computed twice -- full localization and the
    single-vertex shortcut -- and the two must agree exactly.
    """
    require_six_dim(og)
    ps = og.vertices_of_index(1)
    qs = og.vertices_of_index(2)
    if len(ps) != len(qs):
        raise Mismatch(f"unequal index-two/index-four counts: {ps} vs {qs}")
    matrix: list[list[Fraction]] = []
    products = {p: _shifted_thom_product(og, p) for p in ps}
    for q in qs:
        row = []
        tau_q = thom_class(og, q, "minus")
        for p in ps:
            via_integral = integrate(og, products[p] * tau_q)
            via_shortcut = _localized_entry(og, products[p].value(q), q)
            if via_integral != via_shortcut:
                raise Mismatch(
                    f"entry ({q}, {p}): localization gives {via_integral}, "
                    f"shortcut gives {via_shortcut}"
                )
            row.append(via_integral)
        matrix.append(row)
    return matrix


def check_pairing_identity(og: OrientedGkmGraph) -> list[dict]:
    """entry = -(thom coefficient) * (moment ratio), exactly, for all pairs."""
    ps = og.vertices_of_index(1)
    qs = og.vertices_of_index(2)
    matrix = mixed_hr2_matrix(og)
    pairs = {(c.p, c.q): c for c in coefficient_pairs(og)}
    witnesses = []
    for j, q in enumerate(qs):
        if all(matrix[j][k] == 0 for k in range(len(ps))):
            raise Mismatch(f"row of {q} is identically zero")
        for k, p in enumerate(ps):
            c = pairs[(p, q)]
            expected = -c.thom_coefficient * c.moment_ratio
            if matrix[j][k] != expected:
                raise Mismatch(
                    f"entry ({q}, {p}) = {matrix[j][k]} but "
                    f"-coefficient*ratio = {expected}"
                )
            if (matrix[j][k] != 0) != c.adjacent:
                raise Mismatch(f"entry ({q}, {p}) nonzero-ness contradicts adjacency")
            witnesses.append({
                "p": p, "q": q, "entry": str(matrix[j][k]),
                "moment_ratio": str(c.moment_ratio),
                "thom_coefficient": str(c.thom_coefficient),
                "adjacent": c.adjacent,
            })
    return witnesses


def hr_matrix(og: OrientedGkmGraph, k: int) -> list[list[Fraction]]:
    """Pairing matrix in cohomological degree k (even, 0 <= k <= 2n).

    For k <= n this is the Hodge-Riemann form on the degree-k Thom basis
    with n - k symplectic factors; above the middle the complementary
    basis is paired with no symplectic factor (Poincare pairing).
    """
    n = og.graph.valence
    if k % 2 != 0 or not 0 <= k <= 2 * n:
        raise DegreeError(f"k must be even in 0..{2 * n}, got {k}")
    row_d = k // 2
    col_d = row_d if k <= n else n - row_d
    power = n - row_d - col_d
    if power < 0:
        raise DegreeError(f"cannot reach total degree {n} from degree {k}")
    rows = og.vertices_of_index(row_d)
    cols = og.vertices_of_index(col_d)
    omega = equivariant_symplectic_class(og.graph)
    filler = omega**power
    matrix = []
    for u in rows:
        tau_u = thom_class(og, u, "plus")
        matrix.append([
            integrate(og, tau_u * thom_class(og, v, "plus") * filler) for v in cols
        ])
    return matrix


def check_column_independence(og: OrientedGkmGraph) -> dict:
    """For the two all-entries-nonzero types: one column operation leaves a
    nonzero entry, and the three relevant moment images are not collinear."""
    table = classify_type(og)
    if table.label not in ("d", "f"):
        raise TypeMismatch(f"expected type (d) or (f), got ({table.label})")
    a = mixed_hr2_matrix(og)
    if any(entry == 0 for row in a for entry in row):
        raise Mismatch("types (d)/(f) must have all pairing entries nonzero")
    t0 = -a[0][1] / a[0][0]
    second = a[1][1] + t0 * a[1][0]
    if t0 == 0 or second == 0:
        raise ConditionViolated(
            f"column operation with t0={t0} leaves second combination {second}"
        )
    g = og.graph
    r = og.r_vertex()
    p1, p2 = og.vertices_of_index(1)
    collinearity = (g.mu(p1) - g.mu(r)).cross(g.mu(p2) - g.mu(r))
    if collinearity == 0:
        raise ConditionViolated(f"mu({r}), mu({p1}), mu({p2}) are collinear")
    return {
        "t0": str(t0),
        "second_combination": str(second),
        "collinearity": str(collinearity),
    }


def check_sign_conditions(og: OrientedGkmGraph) -> list[dict]:
    """Side-of-line criterion for each adjacent pair, positivity on convex
    tetragonal cycles, and convexity of all cycles on 8-vertex instances."""
    require_six_dim(og)
    g = og.graph
    witnesses = []
    pairs = coefficient_pairs(og)
    for c in pairs:
        if not c.adjacent:
            continue
        p, q = c.p, c.q
        down = og.down_edges(p)
        if len(down) != 1:
            raise Mismatch(f"index-two vertex {p} must have one descending edge")
        nu_p_direction = down[0].weight_from(p)
        v = below_neighbor(og, q, excluding=p)
        alpha_qv = g.edge_between(q, v).weight_from(q)
        alpha_pq = g.edge_between(p, q).weight_from(p)
        v0 = alpha_pq.perp()
        product = nu_p_direction.dot(v0) * alpha_qv.dot(v0)
        if product == 0:
            raise ConditionViolated(
                f"degenerate side test at pair ({p}, {q}): weights not independent"
            )
        same = product > 0
        positive = c.thom_coefficient > 0
        if same != positive:
            raise ConditionViolated(
                f"pair ({p}, {q}): same-side={same} but coefficient {c.thom_coefficient}"
            )
        witnesses.append({
            "check": "side-criterion", "p": p, "q": q,
            "same_side": same, "coefficient": str(c.thom_coefficient),
        })
    shapes = {p: cycle_shape(og, p) for p in og.vertices_of_index(1)}
    for p, shape in shapes.items():
        if shape.kind == "tetragonal" and shape.tetra_class == "convex":
            for q in og.up_neighbors(p):
                if og.down_degree(q) != 2:
                    continue
                coeff = thom_coefficient(og, p, q)
                if coeff <= 0:
                    raise ConditionViolated(
                        f"convex cycle at {p} but coefficient at {q} is {coeff}"
                    )
                witnesses.append({
                    "check": "convex-cycle-positivity", "p": p, "q": q,
                    "coefficient": str(coeff),
                })
    if len(g.vertices) == 8:
        for p, shape in shapes.items():
            if shape.kind != "tetragonal" or shape.tetra_class != "convex":
                raise ConditionViolated(
                    f"8-vertex instance has a non-convex cycle at {p}: {shape}"
                )
        witnesses.append({"check": "eight-vertex-convexity", "ok": True})
    return witnesses


def _check_type_g_determinant(og: OrientedGkmGraph, a: list[list[Fraction]],
                              shapes: dict[str, CycleShape]) -> dict:
    """Zeros permute to the diagonal; the determinant reduces to the two
    3-cycle products and is negative when every cycle is convex."""
    zero_cols = []
    for j, row in enumerate(a):
        zeros = [k for k, entry in enumerate(row) if entry == 0]
        if len(zeros) != 1:
            raise Mismatch(f"type (g) row {j} has {len(zeros)} zero entries")
        zero_cols.append(zeros[0])
    if sorted(zero_cols) != [0, 1, 2]:
        raise Mismatch("type (g) zeros do not hit each column exactly once")
    # Permute columns so the zero of row j lands on the diagonal.
    b = [[a[j][zero_cols[k]] for k in range(3)] for j in range(3)]
    formula = b[0][1] * b[1][2] * b[2][0] + b[0][2] * b[1][0] * b[2][1]
    if linalg.determinant(b) != formula:
        raise Mismatch("permuted type (g) determinant does not match the 3-cycle formula")
    all_convex = all(s.tetra_class == "convex" for s in shapes.values())
    if all_convex:
        negatives = all(
            entry < 0 for j, row in enumerate(b) for k, entry in enumerate(row) if k != j
        )
        if not negatives or formula >= 0:
            raise ConditionViolated(
                "convex type (g) instance must have negative entries and determinant"
            )
    return {"determinant": str(formula), "all_convex": all_convex}


@dataclass
class LefschetzReport:
    """Everything the verdict rests on, in scale-invariant form."""

    betti: tuple[int, ...]
    down_degree: dict[str, int]
    index_increasing: bool
    o: Optional[str] = None
    r: Optional[str] = None
    table: Optional[MomentImageType] = None
    cycle_shapes: dict[str, CycleShape] = field(default_factory=dict)
    pairs: list[CoefficientPair] = field(default_factory=list)
    index_two: list[str] = field(default_factory=list)
    index_four: list[str] = field(default_factory=list)
    mixed_matrix: list[list[Fraction]] = field(default_factory=list)
    mixed_determinant: Optional[Fraction] = None
    hr_matrices: dict[int, list[list[Fraction]]] = field(default_factory=dict)
    hr_determinants: dict[int, Fraction] = field(default_factory=dict)
    verdicts: dict[int, bool] = field(default_factory=dict)
    hard_lefschetz: Optional[bool] = None
    checks: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def to_jsonable(self) -> dict:
        return {
            "betti": list(self.betti),
            "down_degree": dict(sorted(self.down_degree.items())),
            "index_increasing": self.index_increasing,
            "o": self.o,
            "r": self.r,
            "type": self.table.to_jsonable() if self.table else None,
            "cycles": {p: s.to_jsonable() for p, s in sorted(self.cycle_shapes.items())},
            "pairs": [c.to_jsonable() for c in self.pairs],
            "index_two": self.index_two,
            "index_four": self.index_four,
            "mixed_matrix": [[str(e) for e in row] for row in self.mixed_matrix],
            "mixed_determinant": (None if self.mixed_determinant is None
                                  else str(self.mixed_determinant)),
            "hr_matrices": {
                str(k): [[str(e) for e in row] for row in m]
                for k, m in sorted(self.hr_matrices.items())
            },
            "hr_determinants": {str(k): str(d) for k, d in sorted(self.hr_determinants.items())},
            "verdicts": {str(k): v for k, v in sorted(self.verdicts.items())},
            "hard_lefschetz": self.hard_lefschetz,
            "checks": self.checks,
            "ok": self.ok,
        }

    def to_text(self) -> str:
        lines = []
        lines.append(f"betti numbers      : {self.betti}")
        degrees = ", ".join(f"{v}:{d}" for v, d in sorted(self.down_degree.items()))
        lines.append(f"down-degrees       : {degrees}")
        lines.append(f"index increasing   : {self.index_increasing}")
        if self.o is not None:
            lines.append(f"extremal vertices  : o={self.o}  r={self.r}")
        if self.table is not None:
            t = self.table
            lines.append(
                f"moment-image type  : ({t.label})  hull={t.hull_shape}  "
                f"V={t.vertex_count}  o~r={'yes' if t.o_adjacent_r else 'no'}  "
                f"tetragonal={t.tetragonal_cycles}"
            )
        for p, s in sorted(self.cycle_shapes.items()):
            extra = f" ({s.tetra_class})" if s.tetra_class else ""
            lines.append(f"cycle at {p:<10}: {'-'.join(s.vertices)} {s.kind}{extra}")
        if self.pairs:
            lines.append("pair coefficients  : (p, q) -> ratio, coefficient")
            for c in self.pairs:
                lines.append(
                    f"  ({c.p}, {c.q}): l={c.moment_ratio}, c={c.thom_coefficient}"
                    f"{'' if c.adjacent else '  [not adjacent]'}"
                )
        if self.mixed_matrix:
            lines.append(
                f"degree-2 pairing   : rows={self.index_four} cols={self.index_two}"
            )
            for row in self.mixed_matrix:
                lines.append("  [" + ", ".join(str(e) for e in row) + "]")
            lines.append(f"  determinant = {self.mixed_determinant}")
        for k in sorted(self.hr_determinants):
            lines.append(
                f"HR det (degree {k}) : {self.hr_determinants[k]}  "
                f"{'nonsingular' if self.verdicts[k] else 'SINGULAR'}"
            )
        lines.append(f"hard Lefschetz     : {self.hard_lefschetz}")
        for c in self.checks:
            status = "ok" if c["ok"] else "FAIL"
            detail = f" - {c['detail']}" if c.get("detail") else ""
            lines.append(f"[{status}] {c['name']}{detail}")
        return "\n".join(lines)


def hard_lefschetz_report(og: OrientedGkmGraph) -> LefschetzReport:
    """Run the full verification pipeline and collect a verdict report.

    Failures of individual assertions become failing check entries rather
    than exceptions, so callers can present complete diagnostics.
    """
    report = LefschetzReport(
        betti=og.betti(),
        down_degree={v: og.down_degree(v) for v in og.graph.vertex_ids()},
        index_increasing=og.is_index_increasing(),
    )

    def run(name: str, thunk):
        try:
            value = thunk()
        except GkmError as exc:
            report.checks.append({"name": name, "ok": False, "detail": str(exc)})
            return False, None
        report.checks.append({"name": name, "ok": True, "detail": ""})
        return True, value

    in_scope, _ = run("six-dim-scope", lambda: require_six_dim(og))
    if not in_scope:
        return report

    ok, extremes = run("unique-extrema", lambda: (og.o_vertex(), og.r_vertex()))
    if not ok:
        return report
    report.o, report.r = extremes

    n_half = len(og.graph.vertices) // 2 - 1
    run("betti-structure", lambda: _require(
        report.betti[1] == report.betti[2] == n_half,
        f"betti {report.betti} incompatible with vertex count",
    ))
    run("index-two-adjacent-o", lambda: _require(
        all(og.graph.adjacent(p, report.o) for p in og.vertices_of_index(1)),
        "an index-two vertex misses the bottom vertex",
    ))
    run("index-four-adjacent-r", lambda: _require(
        all(og.graph.adjacent(q, report.r) for q in og.vertices_of_index(2)),
        "an index-four vertex misses the top vertex",
    ))

    report.index_two = og.vertices_of_index(1)
    report.index_four = og.vertices_of_index(2)

    _, table = run("classify-type", lambda: classify_type(og))
    if table is not None:
        report.table = table

    _, shapes = run("cycle-shapes", lambda: {
        p: cycle_shape(og, p) for p in og.vertices_of_index(1)
    })
    if shapes is not None:
        report.cycle_shapes = shapes

    _, pairs = run("coefficient-pairs", lambda: coefficient_pairs(og))
    if pairs is not None:
        report.pairs = pairs

    _, matrix = run("pairing-identity", lambda: (check_pairing_identity(og),
                                                 mixed_hr2_matrix(og))[1])
    if matrix is not None:
        report.mixed_matrix = matrix
        report.mixed_determinant = linalg.determinant(matrix)

    run("sign-conditions", lambda: check_sign_conditions(og))

    if table is not None and table.label in ("d", "f"):
        run("column-independence", lambda: check_column_independence(og))
    if table is not None and table.label == "g" and matrix is not None and shapes:
        run("type-g-determinant",
            lambda: _check_type_g_determinant(og, matrix, shapes))

    def hr_sweep():
        for k in range(0, 2 * og.graph.valence + 1, 2):
            pairing = hr_matrix(og, k)
            det = linalg.determinant(pairing)
            report.hr_matrices[k] = pairing
            report.hr_determinants[k] = det
            report.verdicts[k] = det != 0
        return True

    run("hr-determinants", hr_sweep)

    if report.mixed_determinant is not None and 2 in report.verdicts:
        run("hr2-mixed-equivalence", lambda: _require(
            (report.mixed_determinant != 0) == report.verdicts[2],
            "mixed and plus-basis degree-2 determinants disagree on nonsingularity",
        ))

    def vanishing_sweep():
        for d in range(0, og.graph.valence):
            for element in basis(og.graph, d):
                check_low_degree_vanishing(og, element)
        return True

    run("low-degree-vanishing", vanishing_sweep)

    def kronecker():
        ids = og.graph.vertex_ids()
        for v in ids:
            for w in ids:
                if og.down_degree(v) != og.down_degree(w):
                    continue
                value = integrate(
                    og, thom_class(og, v, "plus") * thom_class(og, w, "minus")
                )
                _require(value == (1 if v == w else 0),
                         f"pairing of {v}, {w} gave {value}")
        return True

    run("kronecker-pairing", kronecker)

    if report.verdicts:
        report.hard_lefschetz = all(report.verdicts.values())
    return report


def _require(condition: bool, message: str) -> bool:
    if not condition:
        raise Mismatch(message)
    return True
