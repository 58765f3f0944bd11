"""Painted Dynkin diagrams: isotropy representations of semi-simple orbits.

A painted diagram crosses a subset of the simple roots; the corresponding
flag manifold G/K has isotropy module m spanned by the root spaces with a
nonzero coefficient on a crossed node.  Kostant's criterion groups the
positive m-roots into irreducible-summand classes (two roots lie in the same
K-submodule iff they differ by a sum of k-roots), and the cohomogeneity of
the semi-simple orbit T(G/K) is computed by sampling the orbit of the
coweight element dual to the crossed set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chevalley import build_algebra
from .cohom import CohomReport, SampleConfig, cohom_adjoint
from .roots import CartanType, RootSystem, build_root_system, coweight_element, parse_cartan_type, simple


@dataclass(frozen=True)
class PaintedDiagram:
    cartan_type: CartanType
    crossed: frozenset[int]  # 0-based node indices

    def __post_init__(self):
        if not self.crossed:
            raise ValueError("a flag needs at least one crossed node")
        if any(i < 0 or i >= self.cartan_type.rank for i in self.crossed):
            raise ValueError("crossed node out of range")

    @property
    def length(self):
        return len(self.crossed)

    def __str__(self):
        nodes = ",".join(str(i + 1) for i in sorted(self.crossed))
        return f"{self.cartan_type}[x{nodes}]"


def painted(t, crossed) -> PaintedDiagram:
    t = parse_cartan_type(t) if isinstance(t, str) else t
    return PaintedDiagram(t, frozenset(crossed))


def isotropy_roots(rs: RootSystem, pd: PaintedDiagram) -> list[tuple[int, ...]]:
    """Roots of m: nonzero coefficient on some crossed simple root."""
    return [g for g in rs.all_roots if any(g[i] for i in pd.crossed)]


@dataclass(frozen=True)
class IsotropySummary:
    m_roots: tuple
    kostant_classes: tuple[tuple, ...]  # classes of positive m-roots
    num_summands: int


def kostant_summands(rs: RootSystem, pd: PaintedDiagram) -> IsotropySummary:
    """Kostant-criterion partition of the positive m-roots."""
    mroots = isotropy_roots(rs, pd)
    pos = [g for g in mroots if sum(g) > 0]
    kroots = {g for g in rs.all_roots if not any(g[i] for i in pd.crossed)}
    parent = list(range(len(pos)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            diff = tuple(a - b for a, b in zip(pos[i], pos[j]))
            if diff in kroots:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    classes: dict[int, list] = {}
    for i in range(len(pos)):
        classes.setdefault(find(i), []).append(pos[i])
    cls = tuple(tuple(sorted(v)) for v in classes.values())
    return IsotropySummary(tuple(mroots), cls, len(cls))


def flag_cohom(a, pd: PaintedDiagram, cfg: SampleConfig = SampleConfig()) -> CohomReport:
    """Cohomogeneity of the semi-simple orbit of the crossed-set coweight."""
    if isinstance(a, PaintedDiagram):
        raise TypeError("first argument is the Chevalley algebra")
    marks = [1 if i in pd.crossed else 0 for i in range(a.rs.rank)]
    h = coweight_element(a.rs, marks)
    # scale to integer coordinates: rescaling h rescales the orbit and leaves
    # the cohomogeneity unchanged
    x0 = a.cartan_vector(h.scale(a.rs.det_cartan))
    return cohom_adjoint(a, x0, cfg)


def nodes_up_to_automorphism(t: CartanType) -> list[int]:
    """One node per diagram-automorphism class of a simple type (0-based)."""
    fam, n = t.family, t.rank
    if fam == "A":
        return list(range((n + 1) // 2))
    if fam == "D":
        if n == 4:
            return [0, 1]  # {1,3,4} fold to node 1 under triality
        return list(range(n - 1))  # spinor nodes n-1, n identified
    if fam == "E" and n == 6:
        return [0, 1, 2, 3]  # 1~6, 3~5
    return list(range(n))


def scan_types(max_rank: int) -> list[CartanType]:
    """Simple types of rank <= max_rank, one per isomorphism class.

    D3 is skipped (isomorphic to A3); B2 and C2 are both kept so the
    coincidence flags appear under either labeling.
    """
    out = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        for n in range(lo, max_rank + 1):
            out.append(simple(fam, n))
    if max_rank >= 2:
        out.append(simple("G", 2))
    if max_rank >= 4:
        out.append(simple("F", 4))
    for n in range(6, min(max_rank, 8) + 1):
        out.append(simple("E", n))
    return out


def classify_ss_low_cohom(
    max_rank: int, target: int, cfg: SampleConfig = SampleConfig()
) -> list[PaintedDiagram]:
    """Exhaustive scan of length-1 painted diagrams with flag_cohom == target.

    Length >= 2 diagrams are pruned: every tested one has cohomogeneity >= 3
    (kostant_summands >= 3 forces it), so they cannot reach target <= 2.
    """
    if target not in (1, 2):
        raise ValueError("target must be 1 or 2")
    found = []
    for t in scan_types(max_rank):
        a = build_algebra(build_root_system(t))
        for node in nodes_up_to_automorphism(t):
            pd = PaintedDiagram(t, frozenset([node]))
            if flag_cohom(a, pd, cfg).cohomogeneity == target:
                found.append(pd)
    return found
