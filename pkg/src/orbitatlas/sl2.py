"""sl2-triples through nilpotent representatives and isotypic bookkeeping.

Given a nilpotent X in the degree-2 piece of its weighted-diagram grading,
the triple is completed by an exact linear solve for Y in the degree -2
piece.  The centralizer k of the triple is the kernel of ad(X) on the
degree-0 piece; the isotypic multiplicities A_k come from the eigenvalue
dimensions n_k of ad(H): A_k = n_k - n_{k+2} (minus the triple's own adjoint
copy at k = 2), and the bundle fibre W = sum_{k>=2} A_k S^{k-2} has
dimension sum A_k (k-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from math import gcd

from .chevalley import AlgebraElement, ChevalleyAlgebra
from .linalg import RationalMatrix, kernel_basis_int, rank_int_rows, solve_linear
from .roots import CartanElement, coweight_element
from .orbits import WeightedDynkinDiagram


@dataclass(frozen=True)
class Sl2Triple:
    x: AlgebraElement
    y: AlgebraElement
    h: AlgebraElement
    h_cartan: CartanElement


def _graded_basis(a: ChevalleyAlgebra, h: CartanElement) -> dict:
    """Basis indices of g grouped by the (integer) ad(h) eigenvalue."""
    out: dict[int, list[int]] = {0: list(range(a.rank))}
    for k, g in enumerate(a.rs.all_roots):
        v = a.rs.pair_root_cartan(g, h)
        assert v.denominator == 1
        out.setdefault(int(v), []).append(a.rank + k)
    return out


def _restricted_map_rows(a, x_ints, src: list[int], dst: list[int]) -> list[list[int]]:
    """Rows (indexed by dst) of ad(x) restricted to the span of src."""
    rows = [[0] * len(src) for _ in dst]
    dpos = {b: i for i, b in enumerate(dst)}
    for cj, j in enumerate(src):
        vec = [0] * a.dim
        vec[j] = 1
        img = _bracket_int(a, x_ints, vec)
        for b, v in enumerate(img):
            if v:
                assert b in dpos, "image leaves the expected graded piece"
                rows[dpos[b]][cj] = v
    return rows


def _bracket_int(a: ChevalleyAlgebra, x_ints, y_ints) -> list[int]:
    out = [0] * a.dim
    for i, c in enumerate(x_ints):
        if not c:
            continue
        img = a.apply_ad_basis_int(i, y_ints)
        for k, v in enumerate(img):
            if v:
                out[k] += c * v
    return out


def complete_triple(a: ChevalleyAlgebra, x: AlgebraElement, h_cartan: CartanElement) -> Sl2Triple:
    """Solve [X, Y] = H inside the (-2)-eigenspace of ad(H); verify exactly."""
    h = a.cartan_vector(h_cartan)
    if a.bracket(h, x) != x.scale(2):
        raise ValueError("[H, X] != 2X: X is not in the degree-2 piece")
    x_ints = a._clear_denoms(x)
    graded = _graded_basis(a, h_cartan)
    gm2 = graded.get(-2, [])
    g0 = sorted(graded.get(0, []))
    if not gm2:
        raise ValueError("empty degree -2 piece")
    # columns: [X, e_gamma] for gamma in the -2 piece, expressed on g_0
    cols = []
    for j in gm2:
        vec = [0] * a.dim
        vec[j] = 1
        img = _bracket_int(a, x_ints, vec)
        cols.append([img[b] for b in g0])
    m = RationalMatrix([[cols[c][r] for c in range(len(gm2))] for r in range(len(g0))])
    target = [h.re[b] for b in g0]
    sol = solve_linear(m, target)
    if sol is None:
        raise ValueError("no sl2 partner: X is not generic in its grade")
    # the solve used den(x) * X, so scale Y up by the same factor
    d = 1
    for q in x.re:
        d = d * q.denominator // gcd(d, q.denominator)
    yco = [Q(0)] * a.dim
    for j, c in zip(gm2, sol):
        yco[j] = c * d
    y = AlgebraElement(yco)
    t = Sl2Triple(x, y, h, h_cartan)
    assert a.bracket(x, y) == h, "triple relation [X,Y]=H failed"
    assert a.bracket(h, y) == y.scale(-2), "triple relation [H,Y]=-2Y failed"
    return t


def triple_centralizer(a: ChevalleyAlgebra, t: Sl2Triple):
    """Basis and dimension of the joint centralizer k of the triple."""
    graded = _graded_basis(a, t.h_cartan)
    g0 = sorted(graded.get(0, []))
    g2 = sorted(graded.get(2, []))
    x_ints = a._clear_denoms(t.x)
    rows = _restricted_map_rows(a, x_ints, g0, g2)
    basis_small = kernel_basis_int(rows, len(g0))
    basis = []
    for v in basis_small:
        co = [Q(0)] * a.dim
        for b, c in zip(g0, v):
            co[b] = c
        u = AlgebraElement(co)
        assert all(c == 0 for c in a.bracket(u, t.y).re), "centralizer misses Y"
        basis.append(u)
    n = {k: len(v) for k, v in graded.items()}
    assert len(basis) == n.get(0, 0) - n.get(2, 0), "spectral count mismatch"
    return basis, len(basis)


@dataclass(frozen=True)
class IsotypicDecomposition:
    k_dim: int
    multiplicities: dict  # k -> dim A_k  (k >= 1, nonzero entries only)
    w_dim: int
    graded_dims: dict


def isotypic_decomposition(a: ChevalleyAlgebra, t: Sl2Triple) -> IsotypicDecomposition:
    """Decompose g = su(2) + k + sum [A_k S^k] from the ad(H) grading."""
    graded = _graded_basis(a, t.h_cartan)
    n = {k: len(v) for k, v in graded.items()}
    kmax = max(n)
    mult = {}
    for k in range(1, kmax + 1):
        ak = n.get(k, 0) - n.get(k + 2, 0)
        if k == 2:
            ak -= 1  # the triple itself spans one adjoint copy of S^2
        if ak < 0:
            raise RuntimeError("negative isotypic multiplicity")
        if ak:
            mult[k] = ak
    k_dim = n.get(0, 0) - n.get(2, 0)
    total = 3 + k_dim + sum(ak * (k + 1) for k, ak in mult.items())
    assert total == a.dim, f"isotypic bookkeeping failed: {total} != {a.dim}"
    assert all(n.get(k, 0) == n.get(-k, 0) for k in n), "asymmetric ad(H) spectrum"
    w_dim = sum(ak * (k - 1) for k, ak in mult.items() if k >= 2)
    return IsotypicDecomposition(k_dim, mult, w_dim, n)


def sl2_data_for_diagram(a: ChevalleyAlgebra, w: WeightedDynkinDiagram, seed=0):
    """representative -> triple -> decomposition, in one call."""
    from .orbits import representative

    x = representative(a, w, seed=seed)
    h = coweight_element(a.rs, w.marks)
    t = complete_triple(a, x, h)
    return t, isotypic_decomposition(a, t)


# ---------------------------------------------------------------------------
# commutants and the W-module realization

def commutant_dim(action_matrices: list[RationalMatrix]) -> int:
    """Dimension of the space of matrices commuting with all action matrices.

    Exact: the commutator constraints are stacked and the rank taken via the
    Gram-matrix route (rank A = rank A^T A over Q).
    """
    if not action_matrices:
        raise ValueError("need at least one matrix")
    d = action_matrices[0].rows
    rows = []
    for m in action_matrices:
        if m.rows != d or m.cols != d:
            raise ValueError("matrices must act on a common space")
        den = 1
        for r in m.entries:
            for q in r:
                den = den * q.denominator // gcd(den, q.denominator)
        mi = [[int(q * den) for q in r] for r in m.entries]
        # constraint on B: sum_k M[i][k] B[k][j] - B[i][k] M[k][j] = 0
        for i in range(d):
            for j in range(d):
                row = [0] * (d * d)
                for k in range(d):
                    row[k * d + j] += mi[i][k]
                    row[i * d + k] -= mi[k][j]
                if any(row):
                    rows.append(row)
    if not rows:
        return d * d
    gram = _int_gram(rows, d * d)
    return d * d - rank_int_rows(gram, d * d)


def _int_gram(rows, ncols):
    """A^T A for an integer matrix, exactly (numpy fast path with guard)."""
    maxabs = max((abs(v) for r in rows for v in r), default=0)
    if maxabs and maxabs * maxabs * len(rows) < 2**62:
        try:
            import numpy as np

            a = np.array(rows, dtype=np.int64)
            g = a.T @ a
            return [[int(v) for v in row] for row in g]
        except ImportError:  # pragma: no cover
            pass
    g = [[0] * ncols for _ in range(ncols)]
    for r in rows:
        nz = [(i, v) for i, v in enumerate(r) if v]
        for i, vi in nz:
            gi = g[i]
            for j, vj in nz:
                gi[j] += vi * vj
    return g


def w_isotypic_action(a: ChevalleyAlgebra, t: Sl2Triple, kbasis):
    """Action matrices of k on each W-block (k >= 2 isotypic multiplicity space).

    Realized on highest-vector slices: ker(ad X) in the degree-k piece; the
    k = 2 slice drops the Killing-orthogonal line through X itself.
    """
    graded = _graded_basis(a, t.h_cartan)
    n = {k: len(v) for k, v in graded.items()}
    x_ints = a._clear_denoms(t.x)
    blocks = []
    kmax = max(n)
    for k in range(2, kmax + 1):
        ak = n.get(k, 0) - n.get(k + 2, 0) - (1 if k == 2 else 0)
        if ak <= 0:
            continue
        gk = sorted(graded.get(k, []))
        gk2 = sorted(graded.get(k + 2, []))
        rows = _restricted_map_rows(a, x_ints, gk, gk2) if gk2 else []
        ker = kernel_basis_int(rows, len(gk)) if rows else [
            tuple(Q(1) if i == j else Q(0) for i in range(len(gk))) for j in range(len(gk))
        ]
        # vectors of the slice in full coordinates
        vecs = []
        for v in ker:
            co = [Q(0)] * a.dim
            for b, c in zip(gk, v):
                co[b] = c
            vecs.append(co)
        if k == 2:
            kappa = [_killing_against(a, co, t.y) for co in vecs]
            keep = _hyperplane_basis(vecs, kappa)
            vecs = keep
        assert len(vecs) == ak, f"W-block dimension mismatch at k={k}"
        mats = []
        gkset = set(gk)
        basis_mat = [[v[b] for v in vecs] for b in gk]  # len(gk) x ak
        bm = RationalMatrix(basis_mat)
        for u in kbasis:
            cols = []
            for v in vecs:
                img = _bracket_frac(a, u, v)
                assert all(c == 0 for b, c in enumerate(img) if b not in gkset), (
                    "bracket left the graded piece"
                )
                sol = solve_linear(bm, [img[b] for b in gk])
                assert sol is not None, "k-action leaves the W slice"
                cols.append(sol)
            mats.append(RationalMatrix([[cols[c][r] for c in range(len(vecs))]
                                        for r in range(len(vecs))]))
        blocks.append((k, mats, len(vecs)))
    return blocks


def _bracket_frac(a, u: AlgebraElement, vco) -> list[Q]:
    v = AlgebraElement(vco)
    return list(a.bracket(u, v).re)


def _killing_against(a, vco, y: AlgebraElement) -> Q:
    return a.killing(AlgebraElement(vco), y)


def _hyperplane_basis(vecs, kappa):
    """Basis of the kernel of the functional kappa on span(vecs)."""
    piv = next((i for i, c in enumerate(kappa) if c != 0), None)
    if piv is None:
        return vecs
    out = []
    for i, v in enumerate(vecs):
        if i == piv:
            continue
        f = kappa[i] / kappa[piv]
        out.append([a - f * b for a, b in zip(v, vecs[piv])])
    return out
