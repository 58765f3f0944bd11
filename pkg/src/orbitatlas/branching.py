"""Weight multiplicities and branching of the adjoint representation.

Weights live in fundamental-weight coordinates.  Multiplicities come from
Freudenthal's recursion, run exactly over Q; decomposition under a root
subsystem is restricted-weight bookkeeping: repeatedly extract the highest
remaining dominant weight and subtract that component's full weight table.
Centralizer subsystems are reductive, so each component carries a rational
torus-charge vector alongside its semi-simple highest weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .linalg import RationalMatrix, kernel_basis, rank_int_rows
from .roots import RootSystem, build_root_system, identify_subsystem


def _weight_form(rs: RootSystem):
    """Gram matrix of the invariant form in fundamental-weight coordinates."""
    det = rs.det_cartan
    minv = rs.inv_cartan_times_det
    n = rs.rank
    return [
        [Q(minv[j][i] * rs.symmetrizers[j], det) for j in range(n)]
        for i in range(n)
    ]


class _WeightGeometry:
    """Cached per-root-system data for weight computations."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.form = _weight_form(rs)
        self.n = rs.rank
        # fundamental coordinates of the simple roots: columns of the Cartan matrix
        self.alpha_fund = [
            tuple(rs.cartan_matrix[i][j] for i in range(self.n)) for j in range(self.n)
        ]
        self.pos_fund = [
            tuple(rs.pair_with_coroot(g, i) for i in range(self.n))
            for g in rs.positive_roots
        ]
        self.rho = tuple([1] * self.n)

    def ip(self, x, y) -> Q:
        total = Q(0)
        for i, a in enumerate(x):
            if a:
                row = self.form[i]
                total += a * sum((row[j] * y[j] for j in range(self.n) if y[j]), Q(0))
        return total

    def dominant_conjugate(self, w):
        w = list(w)
        while True:
            j = next((k for k in range(self.n) if w[k] < 0), None)
            if j is None:
                return tuple(w)
            c = w[j]
            a = self.alpha_fund[j]
            for k in range(self.n):
                w[k] -= c * a[k]

    def weyl_orbit(self, w):
        seen = {tuple(w)}
        stack = [tuple(w)]
        while stack:
            u = stack.pop()
            for j in range(self.n):
                if u[j]:
                    a = self.alpha_fund[j]
                    v = tuple(u[k] - u[j] * a[k] for k in range(self.n))
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
        return seen

    def weyl_dimension(self, hw) -> int:
        num = Q(1)
        lr = tuple(h + 1 for h in hw)
        for a in self.pos_fund:
            num *= self.ip(lr, a) / self.ip(self.rho, a)
        assert num.denominator == 1
        return int(num)


_GEO: dict[str, _WeightGeometry] = {}


def _geometry(rs: RootSystem) -> _WeightGeometry:
    key = str(rs.cartan_type)
    if key not in _GEO:
        _GEO[key] = _WeightGeometry(rs)
    return _GEO[key]


@dataclass(frozen=True)
class WeightMultiplicityTable:
    highest_weight: tuple
    entries: dict  # weight tuple -> multiplicity
    dimension: int


def weight_multiplicities(rs: RootSystem, hw) -> WeightMultiplicityTable:
    """Exact weight multiplicities of the irreducible module V(hw)."""
    hw = tuple(int(h) for h in hw)
    if len(hw) != rs.rank:
        raise ValueError("highest weight length != rank")
    if any(h < 0 for h in hw):
        raise ValueError("highest weight must be dominant")
    geo = _geometry(rs)
    lam_norm = geo.ip(hw, hw)
    # all lattice points hw - sum k_i alpha_i inside the length ball
    ball = {hw}
    frontier = [hw]
    while frontier:
        new = []
        for w in frontier:
            for a in geo.alpha_fund:
                v = tuple(w[k] - a[k] for k in range(geo.n))
                if v not in ball and geo.ip(v, v) <= lam_norm:
                    ball.add(v)
                    new.append(v)
        frontier = new
    dominants = [w for w in ball if all(c >= 0 for c in w)]
    lr = tuple(h + 1 for h in hw)
    lr2 = geo.ip(lr, lr)

    def depth(w):
        # height of hw - w in the root lattice
        diff = tuple(a - b for a, b in zip(hw, w))
        # root coordinates of diff: solve A c = diff
        det = rs.det_cartan
        minv = rs.inv_cartan_times_det
        return sum(
            Q(sum(minv[i][j] * diff[j] for j in range(geo.n)), det)
            for i in range(geo.n)
        )

    dominants.sort(key=lambda w: (depth(w), w))
    mult: dict[tuple, int] = {}
    for w in dominants:
        if w == hw:
            mult[w] = 1
            continue
        rhs = Q(0)
        for a in geo.pos_fund:
            k = 1
            while True:
                v = tuple(w[t] + k * a[t] for t in range(geo.n))
                if geo.ip(v, v) > lam_norm:
                    break
                m = mult.get(geo.dominant_conjugate(v), 0)
                if m:
                    rhs += 2 * m * geo.ip(v, a)
                k += 1
        wr = tuple(c + 1 for c in w)
        denom = lr2 - geo.ip(wr, wr)
        if denom <= 0 or rhs == 0:
            continue  # not a weight of V(hw)
        val = rhs / denom
        assert val.denominator == 1 and val > 0, "Freudenthal bookkeeping failure"
        mult[w] = int(val)

    entries: dict[tuple, int] = {}
    for w, m in mult.items():
        for u in geo.weyl_orbit(w):
            entries[u] = m
    dim = sum(entries.values())
    wd = geo.weyl_dimension(hw)
    assert dim == wd, f"dimension check failed: {dim} != {wd}"
    return WeightMultiplicityTable(hw, entries, dim)


def restriction_matrix(rs: RootSystem, subsystem) -> RationalMatrix:
    """Matrix sending rs-weights to subsystem-weights (subsystem coroot pairings)."""
    subsystem = [tuple(b) for b in subsystem]
    if not subsystem:
        raise ValueError("empty subsystem")
    rows = [rs.coroot_coords(b) for b in subsystem]
    if rank_int_rows([list(r) for r in rows], rs.rank) != len(subsystem):
        raise ValueError("subsystem basis is linearly dependent")
    return RationalMatrix(rows)


@dataclass(frozen=True)
class BranchComponent:
    subsystem_type: str | None     # None for a pure torus component
    highest_weight: tuple
    torus_charge: tuple
    multiplicity: int
    dimension: int                 # dimension of one copy


@dataclass(frozen=True)
class BranchingResult:
    components: tuple[BranchComponent, ...]
    parent_dimension: int

    @property
    def total_dimension(self):
        return sum(c.multiplicity * c.dimension for c in self.components)


def branch_adjoint(rs: RootSystem, subsystem) -> BranchingResult:
    """Decompose the adjoint representation under a root subsystem.

    `subsystem` is a list of simple roots (simple-root coordinates in rs) of a
    regular subalgebra; the centralizer torus contributes rational charges.
    """
    subsystem = [tuple(b) for b in subsystem]
    ctype, ordered = identify_subsystem(rs, subsystem)
    sub_rs = build_root_system(ctype)
    rmat = restriction_matrix(rs, ordered)
    geo = _geometry(rs)

    # torus charge functionals: kernel of h -> <beta_j, h>
    pair_rows = [
        [Q(rs.pair_with_coroot(b, i)) for i in range(rs.rank)] for b in ordered
    ]
    torus = kernel_basis(RationalMatrix(pair_rows)) if ordered else []

    def charge(w):
        return tuple(sum((t[i] * w[i] for i in range(rs.rank)), Q(0)) for t in torus)

    def restrict(w):
        return tuple(
            int(sum(rmat.entries[j][i] * w[i] for i in range(rs.rank)))
            for j in range(len(ordered))
        )

    adj_hw = tuple(rs.pair_with_coroot(rs.positive_roots[-1], i) for i in range(rs.rank)) \
        if rs.cartan_type.is_simple else None
    if adj_hw is not None:
        table = weight_multiplicities(rs, adj_hw).entries
    else:
        # adjoint of a product: roots plus Cartan zeroes, assembled directly
        table = {}
        for g in rs.all_roots:
            w = tuple(rs.pair_with_coroot(g, i) for i in range(rs.rank))
            table[w] = table.get(w, 0) + 1
        z = tuple([0] * rs.rank)
        table[z] = table.get(z, 0) + rs.rank
    parent_dim = sum(table.values())

    remaining: dict[tuple, int] = {}
    for w, m in table.items():
        key = (restrict(w), charge(w))
        remaining[key] = remaining.get(key, 0) + m

    sub_geo = _geometry(sub_rs)
    det = sub_rs.det_cartan
    minv = sub_rs.inv_cartan_times_det
    htvec = [
        Q(sum(minv[i][j] for i in range(sub_rs.rank)), det) for j in range(sub_rs.rank)
    ]

    def height(w):
        return sum((htvec[j] * w[j] for j in range(sub_rs.rank)), Q(0))

    components = []
    sub_tables: dict[tuple, WeightMultiplicityTable] = {}
    while True:
        live = [(k, m) for k, m in remaining.items() if m != 0]
        if not live:
            break
        key = max(live, key=lambda km: (height(km[0][0]), km[0]))[0]
        hw, ch = key
        mult = remaining[key]
        if mult < 0 or any(c < 0 for c in hw):
            raise RuntimeError(f"branching bookkeeping failure at {key} -> {mult}")
        hw = tuple(int(c) for c in hw)
        if hw not in sub_tables:
            sub_tables[hw] = weight_multiplicities(sub_rs, hw)
        tbl = sub_tables[hw]
        for w, m in tbl.entries.items():
            k2 = (w, ch)
            newm = remaining.get(k2, 0) - mult * m
            if newm < 0:
                raise RuntimeError(f"branching bookkeeping failure at {k2}")
            remaining[k2] = newm
        components.append(BranchComponent(str(ctype), hw, ch, mult, tbl.dimension))
    result = BranchingResult(tuple(components), parent_dim)
    assert result.total_dimension == parent_dim, "dimension conservation failed"
    return result
