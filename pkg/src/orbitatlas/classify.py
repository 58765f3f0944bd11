"""Classification drivers: assemble the orbit tables from computed facts.

`reproduce_table1` realizes every next-to-minimal orbit at desk scale,
computes cohomogeneity, the triple centralizer dimension, and the bundle
fibre dimension, and compares them with the expected classification row.
`reproduce_thm_ss_c2` checks the exhaustive cohomogeneity-two scan of
semi-simple orbits against the five known families.  The quaternionic-Kahler
and 3-Sasakian tables are assembly artifacts: geometric rows are emitted with
provenance flags and backed, where possible, by the machine-checked orbit
facts; shared-orbit cover data is a checked-in external table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .chevalley import ChevalleyAlgebra, build_algebra
from .cohom import CohomReport, SampleConfig, cohom_adjoint
from .flags import PaintedDiagram, classify_ss_low_cohom, flag_cohom, painted
from .orbits import (
    OrbitLabel,
    min_orbit_representative,
    minimal_orbit,
    next_to_minimal,
    representative,
    weighted_diagram,
)
from .roots import coweight_element, parse_cartan_type
from .sl2 import (
    commutant_dim,
    complete_triple,
    isotypic_decomposition,
    triple_centralizer,
    w_isotypic_action,
)


class ClassificationError(RuntimeError):
    pass


@dataclass
class TableRow:
    label: str
    computed: dict
    expected: dict
    match: bool
    provenance: str

    def as_dict(self):
        return {
            "label": self.label,
            "computed": self.computed,
            "expected": self.expected,
            "match": self.match,
            "provenance": self.provenance,
        }


@dataclass
class ClassificationTable:
    title: str
    rows: list[TableRow] = field(default_factory=list)

    @property
    def all_match(self):
        return all(r.match for r in self.rows)

    def as_dict(self):
        return {
            "title": self.title,
            "all_match": self.all_match,
            "rows": [r.as_dict() for r in self.rows],
        }


# ---------------------------------------------------------------------------
# Table 1: next-to-minimal orbits

def _dim_su(m):
    return m * m - 1 if m >= 2 else 0


def _dim_so(m):
    return m * (m - 1) // 2


def _dim_sp(m):
    return m * (2 * m + 1) if m >= 1 else 0


def table1_expected(tname: str) -> list[dict]:
    """Expected (cohom, dim k, dim W) for each next-to-minimal orbit."""
    t = parse_cartan_type(tname)
    fam, n = t.family, t.rank
    rows = []
    if fam == "A":
        if n == 2:
            rows.append({"orbit": "(3)", "cohom": 4, "k_dim": 0, "w_dim": 3,
                         "k_name": "0"})
        else:
            # su(2) + su(n-3) + u(1); the u(1) factor dies at n = 3
            k = 3 + _dim_su(n - 3) + (1 if n >= 4 else 0)
            rows.append({"orbit": f"(2,2,1^{n-3})", "cohom": 2, "k_dim": k,
                         "w_dim": 3, "k_name": "su(2)+su(n-3)+u(1)"})
    elif fam in ("B", "D"):
        m = 2 * n + 1 if fam == "B" else 2 * n
        rows.append({"orbit": f"(3,1^{m-3})", "cohom": 2, "k_dim": _dim_so(m - 3),
                     "w_dim": m - 3, "k_name": f"so({m-3})"})
        if m - 8 >= 0:
            rows.append({"orbit": f"(2^4,1^{m-8})", "cohom": 2,
                         "k_dim": _dim_sp(2) + _dim_so(m - 8), "w_dim": 5,
                         "k_name": f"so(5)+so({m-8})"})
    elif fam == "C":
        rows.append({"orbit": f"(2,2,1^{2*n-4})", "cohom": 2,
                     "k_dim": 1 + _dim_sp(n - 2), "w_dim": 2,
                     "k_name": f"so(2)+sp({n-2})"})
    elif fam == "G":
        rows.append({"orbit": "wdd 10", "cohom": 2, "k_dim": 3, "w_dim": 4,
                     "k_name": "su(2)"})
    elif fam == "F":
        rows.append({"orbit": "wdd 0001", "cohom": 2, "k_dim": 15, "w_dim": 6,
                     "k_name": "so(6)"})
    elif fam == "E" and n == 6:
        rows.append({"orbit": "wdd 100001", "cohom": 2, "k_dim": 22, "w_dim": 7,
                     "k_name": "so(2)+so(7)"})
    elif fam == "E" and n == 7:
        rows.append({"orbit": "wdd 0000010", "cohom": 2, "k_dim": 39, "w_dim": 9,
                     "k_name": "su(2)+so(9)"})
    elif fam == "E" and n == 8:
        rows.append({"orbit": "wdd 10000000", "cohom": 2, "k_dim": 78, "w_dim": 13,
                     "k_name": "so(13)"})
    return rows


TABLE1_TYPES = [
    "A2", "A3", "A4", "A5", "A6", "B3", "B4", "C2", "C3", "C4",
    "D4", "D5", "G2", "F4", "E6", "E7", "E8",
]


def table1_row(a: ChevalleyAlgebra, label: OrbitLabel, cfg: SampleConfig) -> dict:
    """Computed facts for one next-to-minimal orbit."""
    t = a.rs.cartan_type
    w = label.diagram if label.diagram is not None else weighted_diagram(t, label)
    x = representative(a, w, seed=cfg.seed)
    h = coweight_element(a.rs, w.marks)
    triple = complete_triple(a, x, h)
    kbasis, k_dim = triple_centralizer(a, triple)
    decomp = isotypic_decomposition(a, triple)
    report = cohom_adjoint(a, x, cfg)
    blocks = w_isotypic_action(a, triple, kbasis)
    # an empty k acts trivially: the commutant is all of End(W-block)
    commutants = {
        k: (commutant_dim(mats) if mats else d * d) for k, mats, d in blocks
    }
    return {
        "orbit_dim": a.dim - a.centralizer_dim(x),
        "cohom": report.cohomogeneity,
        "k_dim": k_dim,
        "w_dim": decomp.w_dim,
        "w_blocks": len(blocks),
        "w_commutants": commutants,
        "samples": [list(s) for s in report.samples],
    }


def reproduce_table1(
    types=None, cfg: SampleConfig = SampleConfig(), strict: bool = True
) -> ClassificationTable:
    """Realize the next-to-minimal orbit rows and compare with the table."""
    table = ClassificationTable("next-to-minimal orbits")
    for tname in types or TABLE1_TYPES:
        a = build_algebra(tname)
        labels = next_to_minimal(tname)
        expected_rows = table1_expected(tname)
        if len(labels) != len(expected_rows):
            raise ClassificationError(
                f"{tname}: {len(labels)} orbits vs {len(expected_rows)} expected rows"
            )
        for label, exp in zip(labels, expected_rows):
            comp = table1_row(a, label, cfg)
            ok = (
                comp["cohom"] == exp["cohom"]
                and comp["k_dim"] == exp["k_dim"]
                and comp["w_dim"] == exp["w_dim"]
                and comp["w_blocks"] == 1
                and all(c <= 2 for c in comp["w_commutants"].values())
            )
            table.rows.append(
                TableRow(f"{tname} {label}", comp, exp, ok,
                         "computed: representative + sl2 + sampler")
            )
    if strict and not table.all_match:
        bad = [r.label for r in table.rows if not r.match]
        raise ClassificationError(f"table mismatch on rows: {bad}")
    return table


# ---------------------------------------------------------------------------
# Theorem scan: semi-simple orbits of cohomogeneity two

def expected_ss_c1(max_rank: int) -> set[str]:
    """Tangent bundles of complex projective spaces: A_n end node."""
    return {str(painted(f"A{n}", [0])) for n in range(1, max_rank + 1)}


def expected_ss_c2(max_rank: int) -> set[str]:
    """The five cohomogeneity-two families, on the scanned type list."""
    out = set()
    for m in range(3, max_rank + 1):          # SU(m+1)... Gr_2(C^{m+1})
        out.add(str(painted(f"A{m}", [1])))
    out |= {str(painted("B2", [0])), str(painted("B2", [1]))}
    out |= {str(painted("C2", [0])), str(painted("C2", [1]))}
    for k in range(3, max_rank + 1):          # hyperquadrics, odd
        out.add(str(painted(f"B{k}", [0])))
    for k in range(3, max_rank + 1):          # Sp(k)/U(1)Sp(k-1)
        out.add(str(painted(f"C{k}", [0])))
    for k in range(4, max_rank + 1):          # hyperquadrics, even
        out.add(str(painted(f"D{k}", [0])))
    if max_rank >= 5:
        out.add(str(painted("D5", [3])))      # SO(10)/U(5), spinor node
    if max_rank >= 6:
        out.add(str(painted("E6", [0])))      # E6/Spin(10)SO(2)
    return out


def reproduce_thm_ss_c2(
    max_rank: int = 6, cfg: SampleConfig = SampleConfig(), strict: bool = True
) -> ClassificationTable:
    table = ClassificationTable("semi-simple orbits of cohomogeneity two")
    found2 = {str(p) for p in classify_ss_low_cohom(max_rank, 2, cfg)}
    found1 = {str(p) for p in classify_ss_low_cohom(max_rank, 1, cfg)}
    exp2 = expected_ss_c2(max_rank)
    exp1 = expected_ss_c1(max_rank)
    table.rows.append(TableRow(
        "cohomogeneity 2 scan",
        {"found": sorted(found2)}, {"expected": sorted(exp2)},
        found2 == exp2, "computed: exhaustive length-1 scan",
    ))
    table.rows.append(TableRow(
        "cohomogeneity 1 scan",
        {"found": sorted(found1)}, {"expected": sorted(exp1)},
        found1 == exp1, "computed: exhaustive length-1 scan",
    ))
    if strict and not table.all_match:
        raise ClassificationError("semi-simple scan does not match the expected families")
    return table


# ---------------------------------------------------------------------------
# mixed and product orbits

def mixed_orbit_cohom(n: int, cfg: SampleConfig = SampleConfig()) -> CohomReport:
    """Cohomogeneity of the mixed orbit diag(l,..,l,-nl) + one Jordan step in A_n."""
    if n < 3:
        raise ValueError("need n >= 3")
    a = build_algebra(f"A{n}")
    marks = [0] * (n - 1) + [n + 1]
    h = coweight_element(a.rs, marks)
    alpha1 = tuple([1] + [0] * (n - 1))
    assert a.rs.pair_root_cartan(alpha1, h) == 0
    x = a.cartan_vector(h) + a.root_vector(alpha1)
    return cohom_adjoint(a, x, cfg)


@dataclass(frozen=True)
class ProductCohomReport:
    report: CohomReport
    component_cohoms: tuple[int, ...]

    @property
    def additive(self):
        return self.report.cohomogeneity == sum(self.component_cohoms)


def _component_x0(a: ChevalleyAlgebra, spec) -> "AlgebraElement":
    """Representative of a component orbit inside the component's own algebra."""
    if isinstance(spec, PaintedDiagram):
        marks = [1 if i in spec.crossed else 0 for i in range(a.rs.rank)]
        h = coweight_element(a.rs, marks)
        return a.cartan_vector(h.scale(a.rs.det_cartan))
    if isinstance(spec, OrbitLabel):
        if spec.partition is not None and spec.partition == minimal_orbit(
            str(a.rs.cartan_type)
        ).partition:
            return min_orbit_representative(a)
        w = spec.diagram if spec.diagram is not None else weighted_diagram(
            a.rs.cartan_type, spec
        )
        return representative(a, w)
    raise TypeError(f"cannot interpret component orbit {spec!r}")


def product_orbit_cohom(components, cfg: SampleConfig = SampleConfig()) -> ProductCohomReport:
    """Cohomogeneity of a product orbit, cross-checked against additivity.

    `components` is a list of (type string, OrbitLabel or PaintedDiagram).
    """
    if len(components) < 1:
        raise ValueError("need at least one component")
    comp_algebras = [build_algebra(t) for t, _ in components]
    comp_x0 = [_component_x0(a, s) for a, (_, s) in zip(comp_algebras, components)]
    comp_cohoms = tuple(
        cohom_adjoint(a, x, cfg).cohomogeneity for a, x in zip(comp_algebras, comp_x0)
    )
    prod_type = "x".join(t for t, _ in components)
    ap = build_algebra(prod_type)
    # embed: coordinates concatenate per component (cartan block then roots)
    from fractions import Fraction as Q

    from .chevalley import AlgebraElement

    co = [Q(0)] * ap.dim
    for ci, (a, x) in enumerate(zip(comp_algebras, comp_x0)):
        sl = ap.rs.component_slices[ci]
        for i in range(a.rs.rank):
            co[sl.start + i] = x.re[i]
        for k, g in enumerate(a.rs.all_roots):
            v = x.re[a.rank + k]
            if v:
                gg = tuple([0] * sl.start + list(g) + [0] * (ap.rs.rank - sl.stop))
                co[ap.root_vector_index(gg)] = v
    x0 = AlgebraElement(co)
    report = cohom_adjoint(ap, x0, cfg)
    return ProductCohomReport(report, comp_cohoms)


# ---------------------------------------------------------------------------
# Tables 2 and 3 (assembly with provenance)

def load_shared_orbits() -> dict:
    with resources.files("orbitatlas.data").joinpath("shared_orbits.json").open() as fh:
        return json.load(fh)


_TABLE2_ROWS = [
    ("HP(n)", "Sp(n)", "geometric, external: hypercomplex case (no open orbit)", None),
    ("HP(n)", "SU(n+1)", "non-proper case, external; supported by the cohomogeneity-one "
     "semi-simple orbit T*CP(n)", "flag:A:1"),
    ("Gr_2(C^n)", "SU(n-1)", "non-proper case, external (Grassmannian branch); supported "
     "by the cohomogeneity-one semi-simple orbit T*CP(n)", "flag:A:1"),
    ("Gr_2(C^{2n})", "Sp(n)", "shared-orbit pair su(2n) > sp(n)", "pair:symplectic"),
    ("Gr~_4(R^n)", "SO(n-1)", "shared-orbit pair so(n) > so(n-1)", "pair:orthogonal"),
    ("Gr~_4(R^7)", "G2", "shared-orbit pair so(7) > G2", "pair:G2"),
    ("G2/SO(4)", "SU(3)", "shared-orbit pair G2 > su(3)", "pair:su(3)"),
    ("F4/Sp(3)Sp(1)", "Spin(9)", "shared-orbit pair F4 > so(9)", "pair:so(9)"),
    ("E6/SU(6)Sp(1)", "F4", "shared-orbit pair E6 > F4", "pair:F4"),
]

_TABLE3_ROWS = [
    ("S^{4n+3}", "Sp(r)xSp(n+1-r)", "product shared-orbit pair; supported by computed "
     "additivity of product cohomogeneities", "product"),
    ("RP^{4n+3}", "Sp(r)xSp(n+1-r)", "product shared-orbit pair (quotient)", "product"),
    ("SO(n+1)/SO(n-3)Sp(1)", "SO(n)", "shared-orbit pair so(n+1) > so(n); supported by "
     "the (3,1^{n-3}) classification row", "pair:orthogonal"),
    ("SU(2n)/S(U(2n-2)U(1))", "Sp(n)", "shared-orbit pair su(2n) > sp(n); supported by "
     "the (2,2,1^{2n-4}) classification row", "pair:symplectic"),
    ("SO(7)/SO(4)Sp(1)", "G2", "shared-orbit pair so(7) > G2; supported by the G2 "
     "classification row", "pair:G2"),
    ("F4/Sp(3)", "Spin(9)", "shared-orbit pair F4 > so(9); supported by the (2^4,1) "
     "classification row", "pair:so(9)"),
    ("E6/SU(6)", "F4", "shared-orbit pair E6 > F4; supported by the F4 classification "
     "row", "pair:F4"),
]


def assemble_tables_2_3(cfg: SampleConfig = SampleConfig(), verify_support: bool = True):
    """Emit the two classification tables with provenance-tagged rows.

    Machine-checkable supporting facts are re-verified at desk scale when
    `verify_support` is set: the minimal-orbit and next-to-minimal rows this
    assembly leans on, the T*CP(n) flag, and product additivity.
    """
    shared = load_shared_orbits()
    support: dict[str, bool] = {}
    if verify_support:
        a2 = build_algebra("A2")
        support["flag:A:1"] = (
            flag_cohom(a2, painted("A2", [0])).cohomogeneity == 1
        )
        small = reproduce_table1(
            types=["A2", "C3", "B4", "G2", "F4"], strict=False
        )
        support["table1-desk"] = small.all_match
        prod = product_orbit_cohom(
            [("A1", minimal_orbit("A1")), ("A1", minimal_orbit("A1"))]
        )
        support["product"] = prod.additive and prod.report.cohomogeneity == 2
        support["min-orbit"] = all(
            cohom_adjoint(build_algebra(t), min_orbit_representative(build_algebra(t))).cohomogeneity == 1
            for t in ("A2", "C2", "B3")
        )

    def mkrow(m, g, prov, key):
        checked = {}
        if key and key.startswith("pair:"):
            fam = key.split(":", 1)[1]
            entry = next(
                (p for p in shared["pairs"]
                 if fam in (p["family"], p["algebra"], p["cover"])), None
            )
            checked["shared_pair"] = entry
            prov = prov + " [external data]"
        if verify_support:
            checked["support_checks"] = {
                k: v for k, v in support.items()
                if key in (k,) or k in ("table1-desk", "min-orbit")
            }
        ok = all(support.values()) if verify_support else True
        return TableRow(f"{m} | {g}", checked, {}, ok, prov)

    t2 = ClassificationTable("compact quaternionic Kahler, cohomogeneity one")
    for m, g, prov, key in _TABLE2_ROWS:
        t2.rows.append(mkrow(m, g, prov, key))
    t3 = ClassificationTable("compact 3-Sasakian, cohomogeneity one")
    for m, g, prov, key in _TABLE3_ROWS:
        t3.rows.append(mkrow(m, g, prov, key))
    return t2, t3
