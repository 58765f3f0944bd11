"""Integer-exact root systems for simple and semi-simple Cartan types.

Conventions, fixed for the whole package:

* Bourbaki node numbering.  A/B/C/D are chains numbered left to right with the
  short (B) or long (C) root last and the D-fork at the tail; E_n is the chain
  1-3-4-5-...-n with node 2 attached to node 4; F4 has nodes 1,2 long and 3,4
  short; G2 has node 1 short and node 2 long.
* ``cartan_matrix[i][j] = <alpha_j, alpha_i^vee>``.
* Roots are integer coordinate tuples in the simple-root basis; pairings are
  computed through the Cartan matrix, so no irrational geometry appears.
* Symmetrizers ``d_i = (alpha_i, alpha_i)/2`` are normalized so short roots
  have squared length 2 (d in {1,2,3}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

_RANK_MIN = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
_RANK_MAX = {"E": 8, "F": 4, "G": 2}


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_MIN:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < _RANK_MIN[self.family] or self.rank > _RANK_MAX.get(self.family, 10**9):
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanType:
    """A simple type or a product of simple types."""

    components: tuple[SimpleType, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("product type needs at least one component")

    @property
    def is_simple(self):
        return len(self.components) == 1

    @property
    def rank(self):
        return sum(c.rank for c in self.components)

    @property
    def family(self):
        if not self.is_simple:
            raise ValueError("family of a product type")
        return self.components[0].family

    def __str__(self):
        return "x".join(str(c) for c in self.components)


def simple(family: str, rank: int) -> CartanType:
    return CartanType((SimpleType(family, rank),))


def parse_cartan_type(s: str) -> CartanType:
    """Parse strings like ``"A2"``, ``"E8"`` or ``"A1xA1"``/``"A2+G2"``."""
    comps = []
    for tok in s.replace("+", "x").split("x"):
        tok = tok.strip()
        if len(tok) < 2 or tok[0].upper() not in _RANK_MIN:
            raise ValueError(f"cannot parse Cartan type {s!r}")
        comps.append(SimpleType(tok[0].upper(), int(tok[1:])))
    return CartanType(tuple(comps))


def _simple_cartan_matrix(family: str, n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain(pairs):
        for i, j in pairs:
            a[i][j] = a[j][i] = -1

    if family == "A":
        chain((i, i + 1) for i in range(n - 1))
    elif family == "B":
        chain((i, i + 1) for i in range(n - 1))
        a[n - 1][n - 2] = -2  # <alpha_{n-1}, alpha_n^vee>, alpha_n short
    elif family == "C":
        chain((i, i + 1) for i in range(n - 1))
        a[n - 2][n - 1] = -2  # <alpha_n, alpha_{n-1}^vee>, alpha_n long
    elif family == "D":
        chain((i, i + 1) for i in range(n - 2))
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif family == "E":
        spine = [0] + list(range(2, n))
        chain((spine[k], spine[k + 1]) for k in range(len(spine) - 1))
        a[1][3] = a[3][1] = -1
    elif family == "F":
        chain(((0, 1), (2, 3)))
        a[1][2] = -1
        a[2][1] = -2
    elif family == "G":
        a[0][1] = -3
        a[1][0] = -1
    return a


def _simple_symmetrizers(family: str, n: int) -> list[int]:
    if family in ("A", "D", "E"):
        return [1] * n
    if family == "B":
        return [2] * (n - 1) + [1]
    if family == "C":
        return [1] * (n - 1) + [2]
    if family == "F":
        return [2, 2, 1, 1]
    if family == "G":
        return [1, 3]
    raise AssertionError


def _positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """All positive roots by closure under root addition (string condition)."""
    n = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    allroots = set(simples) | {tuple(-c for c in s) for s in simples}
    frontier = list(simples)
    positive = list(simples)
    while frontier:
        new = []
        for gamma in frontier:
            for i in range(n):
                cand = tuple(c + (1 if j == i else 0) for j, c in enumerate(gamma))
                if cand in allroots:
                    continue
                # down-string length p of gamma through alpha_i
                p = 0
                cur = list(gamma)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in allroots:
                        p += 1
                    else:
                        break
                pair = sum(cartan[i][j] * gamma[j] for j in range(n))
                if p - pair >= 1:
                    allroots.add(cand)
                    allroots.add(tuple(-c for c in cand))
                    new.append(cand)
        positive.extend(sorted(new))
        frontier = new
    positive.sort(key=lambda r: (sum(r), r))
    return positive


def _det_and_scaled_inverse(a: list[list[int]]):
    """(det, det * a^{-1}) computed exactly; second entry has integer entries."""
    n = len(a)
    m = [[Q(a[i][j]) for j in range(n)] + [Q(1 if k == i else 0) for k in range(n)]
         for i in range(n)]
    det = Q(1)
    for col in range(n):
        piv = next(i for i in range(col, n) if m[i][col] != 0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    deti = int(det)
    scaled = [[m[i][n + j] * deti for j in range(n)] for i in range(n)]
    out = []
    for row in scaled:
        assert all(x.denominator == 1 for x in row)
        out.append([int(x) for x in row])
    return deti, out


@dataclass(frozen=True)
class CartanElement:
    """Element of the Cartan subalgebra, coordinates over the coroot basis."""

    coords: tuple[Q, ...]

    def __add__(self, other):
        return CartanElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, c):
        return CartanElement(tuple(Q(c) * a for a in self.coords))

    @property
    def is_zero(self):
        return all(a == 0 for a in self.coords)


class RootSystem:
    """Immutable root data for a (semi-)simple Cartan type."""

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        blocks = []
        offset = 0
        cm = [[0] * self.rank for _ in range(self.rank)]
        sym: list[int] = []
        pos: list[tuple[int, ...]] = []
        self.component_slices = []
        for comp in cartan_type.components:
            sub = _simple_cartan_matrix(comp.family, comp.rank)
            for i in range(comp.rank):
                for j in range(comp.rank):
                    cm[offset + i][offset + j] = sub[i][j]
            sym.extend(_simple_symmetrizers(comp.family, comp.rank))
            for r in _positive_roots(sub):
                pos.append(tuple([0] * offset + list(r) + [0] * (self.rank - offset - comp.rank)))
            self.component_slices.append(slice(offset, offset + comp.rank))
            blocks.append(sub)
            offset += comp.rank
        pos.sort(key=lambda r: (sum(r), r))
        self.cartan_matrix = tuple(tuple(row) for row in cm)
        self.symmetrizers = tuple(sym)
        self.positive_roots = tuple(pos)
        self.det_cartan, inv = _det_and_scaled_inverse(cm)
        self.inv_cartan_times_det = tuple(tuple(row) for row in inv)
        self.all_roots = self.positive_roots + tuple(
            tuple(-c for c in r) for r in self.positive_roots
        )
        self.root_index = {r: k for k, r in enumerate(self.all_roots)}
        self.num_positive = len(self.positive_roots)
        self.dimension = 2 * self.num_positive + self.rank

    # -- pairings ----------------------------------------------------------

    def pair_with_coroot(self, beta, i: int) -> int:
        """<beta, alpha_i^vee> for a root (or root-lattice vector) beta."""
        row = self.cartan_matrix[i]
        return sum(row[j] * beta[j] for j in range(self.rank))

    def bilinear(self, x, y):
        """Symmetric invariant form with short roots of squared length 2."""
        total = 0
        for i in range(self.rank):
            if x[i]:
                row = self.cartan_matrix[i]
                di = self.symmetrizers[i]
                total += x[i] * di * sum(row[j] * y[j] for j in range(self.rank))
        return total

    def root_d(self, beta) -> int:
        """Half the squared length of a root (1, 2 or 3)."""
        n2 = self.bilinear(beta, beta)
        assert n2 % 2 == 0
        return n2 // 2

    def coroot_coords(self, beta) -> tuple[int, ...]:
        """Coordinates of beta^vee over the simple coroots (always integers)."""
        d = self.root_d(beta)
        out = []
        for i in range(self.rank):
            num = beta[i] * self.symmetrizers[i]
            assert num % d == 0
            out.append(num // d)
        return tuple(out)

    def coroot_element(self, beta) -> CartanElement:
        return CartanElement(tuple(Q(c) for c in self.coroot_coords(beta)))

    def pair_root_cartan(self, beta, h: CartanElement) -> Q:
        """<beta, h> for a root beta and Cartan element h."""
        return sum(
            (h.coords[i] * self.pair_with_coroot(beta, i) for i in range(self.rank)), Q(0)
        )

    def marks_of(self, h: CartanElement) -> tuple[Q, ...]:
        """Pairings of the simple roots with h."""
        return tuple(
            sum((h.coords[i] * Q(self.cartan_matrix[i][j]) for i in range(self.rank)), Q(0))
            for j in range(self.rank)
        )

    # -- distinguished roots -------------------------------------------------

    @property
    def highest_root(self) -> tuple[int, ...]:
        if not self.cartan_type.is_simple:
            raise ValueError("highest root of a product type")
        return self.positive_roots[-1]

    @property
    def highest_short_root(self) -> tuple[int, ...]:
        if not self.cartan_type.is_simple:
            raise ValueError("highest short root of a product type")
        dmin = min(self.root_d(r) for r in self.positive_roots)
        return max(
            (r for r in self.positive_roots if self.root_d(r) == dmin),
            key=lambda r: (sum(r), r),
        )

    def dominant_marks(self, h: CartanElement) -> tuple[tuple[Q, ...], CartanElement]:
        """Weyl-dominant representative of h and its simple-root pairings."""
        cur = list(h.coords)
        while True:
            marks = [
                sum((cur[i] * Q(self.cartan_matrix[i][j]) for i in range(self.rank)), Q(0))
                for j in range(self.rank)
            ]
            neg = next((j for j in range(self.rank) if marks[j] < 0), None)
            if neg is None:
                return tuple(marks), CartanElement(tuple(cur))
            cur[neg] -= marks[neg]  # s_j(h) = h - <alpha_j, h> alpha_j^vee

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"


_CACHE: dict[str, RootSystem] = {}


def build_root_system(t: CartanType | str) -> RootSystem:
    """Construct (and cache) the root system of a valid Cartan type."""
    if isinstance(t, str):
        t = parse_cartan_type(t)
    key = str(t)
    if key not in _CACHE:
        _CACHE[key] = RootSystem(t)
    return _CACHE[key]


def coweight_element(rs: RootSystem, marks) -> CartanElement:
    """The h with <alpha_i, h> = marks_i for every simple root alpha_i."""
    if len(marks) != rs.rank:
        raise ValueError("marks length != rank")
    det = rs.det_cartan
    minv = rs.inv_cartan_times_det
    # solve A^T c = marks, i.e. c = (A^{-1})^T marks
    coords = tuple(
        sum(Q(minv[j][i]) * Q(marks[j]) for j in range(rs.rank)) / det
        for i in range(rs.rank)
    )
    return CartanElement(coords)


# ---------------------------------------------------------------------------
# root-centralizer subsystems and type identification

@dataclass(frozen=True)
class Subsystem:
    """A root subsystem: all roots vanishing on h, with identified type."""

    roots: tuple[tuple[int, ...], ...]
    simple_roots: tuple[tuple[int, ...], ...]
    cartan_type: CartanType | None  # None for the empty subsystem
    torus_dim: int


def root_centralizer_subsystem(rs: RootSystem, h: CartanElement) -> Subsystem:
    """Roots alpha with <alpha, h> = 0 and the Cartan type of their span."""
    zero = [r for r in rs.all_roots if rs.pair_root_cartan(r, h) == 0]
    pos = [r for r in zero if r > tuple([0] * rs.rank)]
    pos_set = set(pos)
    simples = [
        r for r in pos
        if not any(
            tuple(a - b for a, b in zip(r, s)) in pos_set for s in pos if s != r
        )
    ]
    simples.sort(key=lambda r: (sum(r), r))
    if not simples:
        return Subsystem((), (), None, rs.rank)
    ctype, ordered = identify_subsystem(rs, simples)
    return Subsystem(tuple(zero), tuple(ordered), ctype, rs.rank - len(simples))


def identify_subsystem(rs: RootSystem, simples) -> tuple[CartanType, tuple]:
    """Cartan type of a set of simple roots, with roots reordered to match it.

    The returned ordering makes the pairing matrix of the roots equal to the
    standard Cartan matrix of the named type (per component, components sorted
    by family/rank then concatenated).
    """
    n = len(simples)
    pair = [[0] * n for _ in range(n)]
    for i, bi in enumerate(simples):
        d = rs.root_d(bi)
        for j, bj in enumerate(simples):
            num = rs.bilinear(bi, bj)
            assert num % d == 0
            pair[i][j] = num // d
    # connected components
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for v in range(n):
                if not seen[v] and pair[u][v] != 0:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comps.append(comp)

    identified = []
    for comp in comps:
        fam, order = _identify_component(pair, comp, [rs.root_d(simples[i]) for i in comp])
        identified.append((fam, len(comp), [comp[i] for i in order]))
    identified.sort(key=lambda t: (t[0], t[1]))
    ordered = []
    comps_types = []
    for fam, k, idxs in identified:
        comps_types.append(SimpleType(fam, k))
        ordered.extend(simples[i] for i in idxs)
    ctype = CartanType(tuple(comps_types))
    # hard check: pairing matrix of the ordered roots equals the standard one
    std = build_root_system(ctype).cartan_matrix
    for i, bi in enumerate(ordered):
        d = rs.root_d(bi)
        for j, bj in enumerate(ordered):
            assert rs.bilinear(bi, bj) // d == std[i][j], "subsystem identification failed"
    return ctype, tuple(ordered)


def _identify_component(pair, comp, ds) -> tuple[str, list[int]]:
    """Classify one connected component; returns family and a local ordering."""
    k = len(comp)
    loc = {g: i for i, g in enumerate(comp)}
    adj = [[] for _ in range(k)]
    mult = {}
    for a in range(k):
        for b in range(k):
            if a != b and pair[comp[a]][comp[b]] != 0:
                adj[a].append(b)
                mult[(a, b)] = pair[comp[a]][comp[b]] * pair[comp[b]][comp[a]]
    if k == 1:
        return "A", [0]
    dmin = min(ds)
    short = [i for i in range(k) if ds[i] == dmin]
    is_short = [ds[i] == dmin for i in range(k)]
    maxmult = max(mult.values())

    def path_from(start):
        order = [start]
        prev = -1
        cur = start
        while len(order) < k:
            nxt = next(v for v in adj[cur] if v != prev)
            order.append(nxt)
            prev, cur = cur, nxt
        return order

    if maxmult == 3:
        s = short[0]
        return "G", [s, adj[s][0]]
    if maxmult == 2:
        nshort = len(short)
        if k == 2:
            lng = next(i for i in range(k) if not is_short[i])
            return "B", [lng, short[0]]  # canonical B2
        if nshort == 2 and k == 4:
            lng_leaf = next(i for i in range(k) if not is_short[i] and len(adj[i]) == 1)
            return "F", path_from(lng_leaf)
        if nshort == 1:
            # B_k: unique short root sits at one end of the chain
            start = next(i for i in range(k) if len(adj[i]) == 1 and not is_short[i])
            return "B", path_from(start)
        # C_k: unique long root at one end
        start = next(i for i in range(k) if len(adj[i]) == 1 and is_short[i])
        return "C", path_from(start)
    # simply laced
    deg = [len(a) for a in adj]
    if max(deg) <= 2:
        start = next(i for i in range(k) if deg[i] == 1)
        return "A", path_from(start)
    branch = deg.index(3)
    arms = []
    for v in adj[branch]:
        arm = [v]
        prev = branch
        cur = v
        while True:
            ext = [w for w in adj[cur] if w != prev]
            if not ext:
                break
            prev, cur = cur, ext[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=len)
    la, lb, lc = (len(a) for a in arms)
    if la == 1 and lb == 1:
        # D_{k}: long arm read inward, then branch, then the two tails
        spine = list(reversed(arms[2])) + [branch]
        return "D", spine + [arms[0][0], arms[1][0]]
    assert (la, lb) == (1, 2), "not a Dynkin diagram"
    # E_k: Bourbaki order 1,3 from a length-2 arm, 2 the short arm, 4 branch
    two_arm = arms[1]
    long_arm = arms[2]
    order = [two_arm[1], arms[0][0], two_arm[0], branch] + long_arm
    return "E", order
