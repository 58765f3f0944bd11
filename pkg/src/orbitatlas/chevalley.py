"""Chevalley-basis realization of the complex semi-simple Lie algebras.

Basis order: coroots h_1..h_r, then e_beta for beta running through the
positive roots (height order) followed by the negative roots.  Structure
constant signs are fixed by the extraspecial-pair convention: for each
non-simple positive root gamma the extraspecial pair (a, b), a + b = gamma
with a minimal in the height-lex order, gets N_{a,b} = p + 1 > 0; every other
constant is forced from these by antisymmetry, N_{-a,-b} = -N_{a,b}, and the
two exact identities relating N on a triple of roots summing to zero.  The
construction is deterministic, so constants are reproducible across runs.

Algebras are immutable after construction; the lazily built bracket tables
are idempotent, so concurrent readers are safe.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd
import random

from .linalg import RationalMatrix, rank_int_rows
from .roots import CartanElement, RootSystem, build_root_system

ZERO = Q(0)


class AlgebraElement:
    """Element of g^C: rational coordinate vector over the Chevalley basis.

    Complex elements carry a second rational vector `im`; most of the pipeline
    works with real-rational elements (im is None).
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        self.re = tuple(Q(a) for a in re)
        self.im = tuple(Q(a) for a in im) if im is not None else None

    @property
    def is_real(self):
        return self.im is None or all(a == 0 for a in self.im)

    def __add__(self, other):
        re = tuple(a + b for a, b in zip(self.re, other.re))
        if self.im is None and other.im is None:
            return AlgebraElement(re)
        si = self.im or (ZERO,) * len(self.re)
        oi = other.im or (ZERO,) * len(other.re)
        return AlgebraElement(re, tuple(a + b for a, b in zip(si, oi)))

    def scale(self, c):
        c = Q(c)
        return AlgebraElement(
            tuple(c * a for a in self.re),
            None if self.im is None else tuple(c * a for a in self.im),
        )

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.re == other.re
            and (self.im or ()) == (other.im or ())
        )

    def __repr__(self):
        nnz = sum(1 for a in self.re if a)
        return f"AlgebraElement(nnz={nnz})"


class ChevalleyAlgebra:
    """Structure-constant realization of g^C with cached adjoint data."""

    def __init__(self, rs: RootSystem, verify="auto", seed=0):
        self.rs = rs
        self.rank = rs.rank
        self.dim = rs.dimension
        self.nroots = len(rs.all_roots)
        self._eidx = {r: rs.rank + k for k, r in enumerate(rs.all_roots)}
        self._nconst: dict = {}
        self._hcoeff = {r: rs.coroot_coords(r) for r in rs.all_roots}
        self._build_constants()
        self._pairs: dict = {}
        self._killing_e: dict = {}
        if verify == "auto":
            verify = "full" if rs.rank <= 4 else "sampled"
        if verify == "full":
            self.verify_jacobi(exhaustive=True)
        elif verify == "sampled":
            self.verify_jacobi(exhaustive=False, samples=1000, seed=seed)

    # -- construction --------------------------------------------------------

    def _down_string(self, beta, alpha) -> int:
        """Largest p with beta - p*alpha a root."""
        idx = self.rs.root_index
        p = 0
        cur = beta
        while True:
            cur = tuple(b - a for b, a in zip(cur, alpha))
            if cur in idx:
                p += 1
            else:
                return p

    def _build_constants(self):
        rs = self.rs
        idx = rs.root_index
        pos = rs.positive_roots
        order = {r: k for k, r in enumerate(pos)}
        npos: dict = {}
        dd = {r: rs.root_d(r) for r in rs.all_roots}

        def nlookup(a, b):
            if (a, b) in npos:
                return npos[(a, b)]
            return -npos[(b, a)]

        def nmixed(x, y):
            # x, y arbitrary roots with x + y a root; reduces to npos
            xp = x in order
            yp = y in order
            if xp and yp:
                return nlookup(x, y)
            if not xp and not yp:
                return -nmixed(tuple(-c for c in x), tuple(-c for c in y))
            if not xp:
                return -nmixed(y, x)
            u = tuple(-c for c in y)
            s = tuple(a - b for a, b in zip(x, u))
            if s in order:  # x - u positive
                return -Q(dd[s], dd[x]) * nlookup(u, s)
            sp = tuple(-c for c in s)
            return Q(dd[sp], dd[u]) * nlookup(sp, x)

        for gamma in pos:
            if sum(gamma) == 1:
                continue
            pairs = []
            for alpha in pos:
                if order[alpha] >= order[gamma]:
                    break
                beta = tuple(g - a for g, a in zip(gamma, alpha))
                if beta in order and order[alpha] < order[beta]:
                    pairs.append((alpha, beta))
            pairs.sort(key=lambda ab: order[ab[0]])
            a1, b1 = pairs[0]
            n1 = self._down_string(b1, a1) + 1
            npos[(a1, b1)] = n1
            for alpha, beta in pairs[1:]:
                t = Q(0)
                d1 = tuple(x - a for x, a in zip(b1, alpha))  # b1 - alpha
                if d1 in idx:
                    t += nmixed(b1, tuple(-c for c in alpha)) * nmixed(d1, a1)
                d2 = tuple(x - a for x, a in zip(a1, alpha))  # a1 - alpha
                if d2 in idx:
                    t += nmixed(tuple(-c for c in alpha), a1) * nmixed(d2, b1)
                val = Q(dd[gamma], dd[beta]) * t / n1
                assert val.denominator == 1, "inexact structure constant"
                n = int(val)
                assert abs(n) == self._down_string(beta, alpha) + 1, (
                    "structure constant magnitude violates root strings"
                )
                npos[(alpha, beta)] = n

        # fill the complete table over all root pairs
        nall = {}
        for x in rs.all_roots:
            for y in rs.all_roots:
                s = tuple(a + b for a, b in zip(x, y))
                if s in idx:
                    v = nmixed(x, y)
                    vi = int(v)
                    assert v == vi
                    nall[(x, y)] = vi
        self._nconst = nall

    # -- basis bracket table ---------------------------------------------------

    def basis_root(self, i: int):
        return self.rs.all_roots[i - self.rank] if i >= self.rank else None

    def root_vector_index(self, beta) -> int:
        return self._eidx[beta]

    def bracket_basis(self, i: int, j: int):
        """[b_i, b_j] as a tuple of (basis index, integer coeff)."""
        key = (i, j)
        if key in self._pairs:
            return self._pairs[key]
        rs = self.rs
        r = self.rank
        if i < r and j < r:
            out = ()
        elif i < r:  # [h_i, e_beta]
            beta = rs.all_roots[j - r]
            c = rs.pair_with_coroot(beta, i)
            out = ((j, c),) if c else ()
        elif j < r:
            out = tuple((k, -c) for k, c in self.bracket_basis(j, i))
        else:
            a = rs.all_roots[i - r]
            b = rs.all_roots[j - r]
            s = tuple(x + y for x, y in zip(a, b))
            if all(c == 0 for c in s):
                out = tuple((k, c) for k, c in enumerate(self._hcoeff[a]) if c)
            elif s in rs.root_index:
                out = ((self._eidx[s], self._nconst[(a, b)]),)
            else:
                out = ()
        self._pairs[key] = out
        return out

    # -- element construction ----------------------------------------------------

    def zero(self) -> AlgebraElement:
        return AlgebraElement((0,) * self.dim)

    def root_vector(self, beta) -> AlgebraElement:
        co = [ZERO] * self.dim
        co[self._eidx[beta]] = Q(1)
        return AlgebraElement(co)

    def cartan_vector(self, h: CartanElement) -> AlgebraElement:
        co = [ZERO] * self.dim
        for i, c in enumerate(h.coords):
            co[i] = Q(c)
        return AlgebraElement(co)

    def from_int_coords(self, ints, den=1) -> AlgebraElement:
        return AlgebraElement(tuple(Q(a, den) for a in ints))

    # -- bracket / adjoint -----------------------------------------------------

    def _bracket_re(self, xs, ys):
        out = [ZERO] * self.dim
        nzx = [(i, a) for i, a in enumerate(xs) if a]
        nzy = [(j, b) for j, b in enumerate(ys) if b]
        for i, a in nzx:
            for j, b in nzy:
                if i == j:
                    continue
                if i < j:
                    for k, c in self.bracket_basis(i, j):
                        out[k] += a * b * c
                else:
                    for k, c in self.bracket_basis(j, i):
                        out[k] -= a * b * c
        return out

    def bracket(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        if x.im is None and y.im is None:
            return AlgebraElement(self._bracket_re(x.re, y.re))
        zim = (ZERO,) * self.dim
        xr, xi = x.re, x.im or zim
        yr, yi = y.re, y.im or zim
        re = self._bracket_re(xr, yr)
        for k, v in enumerate(self._bracket_re(xi, yi)):
            re[k] -= v
        im = self._bracket_re(xr, yi)
        for k, v in enumerate(self._bracket_re(xi, yr)):
            im[k] += v
        return AlgebraElement(re, im)

    def apply_ad_basis_int(self, i: int, vec: list) -> list:
        """[b_i, v] for an integer coordinate vector (integer fast path)."""
        out = [0] * self.dim
        for j, b in enumerate(vec):
            if not b:
                continue
            if i < j:
                for k, c in self.bracket_basis(i, j):
                    out[k] += b * c
            elif i > j:
                for k, c in self.bracket_basis(j, i):
                    out[k] -= b * c
        return out

    def ad_int_rows(self, ints) -> list[list[int]]:
        """Columns of ad(x) for integer x, returned as rows of the transpose."""
        cols = []
        nzx = [(i, a) for i, a in enumerate(ints) if a]
        for j in range(self.dim):
            col = [0] * self.dim
            for i, a in nzx:
                if i == j:
                    continue
                if i < j:
                    for k, c in self.bracket_basis(i, j):
                        col[k] += a * c
                else:
                    for k, c in self.bracket_basis(j, i):
                        col[k] -= a * c
            cols.append(col)
        return cols

    def _clear_denoms(self, x: AlgebraElement) -> list[int]:
        if not x.is_real:
            raise ValueError("expected a real-rational element")
        den = 1
        for a in x.re:
            den = den * a.denominator // gcd(den, a.denominator)
        return [int(a * den) for a in x.re]

    def ad_matrix(self, x: AlgebraElement) -> RationalMatrix:
        """Matrix of y -> [x, y] in the Chevalley basis (real x)."""
        cols = [
            self._bracket_re(x.re, [Q(1) if t == j else ZERO for t in range(self.dim)])
            for j in range(self.dim)
        ]
        return RationalMatrix(
            [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]
        )

    def centralizer_dim(self, x: AlgebraElement) -> int:
        """Complex dimension of ker ad(x)."""
        if x.is_real:
            ints = self._clear_denoms(x)
            rows = self.ad_int_rows(ints)  # rank(ad) = rank(ad^T)
            return self.dim - rank_int_rows(rows, self.dim)
        # realified 2N x 2N kernel has twice the complex dimension
        den = 1
        for a in list(x.re) + list(x.im):
            den = den * a.denominator // gcd(den, a.denominator)
        re = [int(a * den) for a in x.re]
        im = [int(a * den) for a in x.im]
        rows_r = self.ad_int_rows(re)
        rows_i = self.ad_int_rows(im)
        big = []
        for j in range(self.dim):
            big.append(rows_r[j] + [-v for v in rows_i[j]])
            big.append(rows_i[j] + rows_r[j])
        return (2 * self.dim - rank_int_rows(big, 2 * self.dim)) // 2

    # -- Killing form ------------------------------------------------------------

    def killing_h(self, i: int, j: int) -> int:
        return sum(
            self.rs.pair_with_coroot(g, i) * self.rs.pair_with_coroot(g, j)
            for g in self.rs.all_roots
        )

    def killing_ef(self, beta) -> int:
        """K(e_beta, e_{-beta}) by an explicit trace."""
        if beta in self._killing_e:
            return self._killing_e[beta]
        ib = self._eidx[beta]
        imb = self._eidx[tuple(-c for c in beta)]
        tr = 0
        for k in range(self.dim):
            v = [0] * self.dim
            v[k] = 1
            w = self.apply_ad_basis_int(imb, v)
            u = self.apply_ad_basis_int(ib, w)
            tr += u[k]
        self._killing_e[beta] = tr
        return tr

    def killing(self, x: AlgebraElement, y: AlgebraElement) -> Q:
        """K(x, y) for real-rational elements, by bilinearity."""
        total = ZERO
        r = self.rank
        for i, a in enumerate(x.re):
            if not a:
                continue
            for j, b in enumerate(y.re):
                if not b:
                    continue
                if i < r and j < r:
                    total += a * b * self.killing_h(i, j)
                elif i >= r and j >= r:
                    bi = self.rs.all_roots[i - r]
                    bj = self.rs.all_roots[j - r]
                    if all(p + q == 0 for p, q in zip(bi, bj)):
                        pos = bi if bi in {*self.rs.positive_roots} else bj
                        total += a * b * self.killing_ef(pos)
        return total

    # -- verification ---------------------------------------------------------------

    def _jacobi_triple(self, i, j, k) -> bool:
        acc = [0] * self.dim

        def br(i1, j1):
            if i1 == j1:
                return ()
            if i1 < j1:
                return self.bracket_basis(i1, j1)
            return tuple((t, -c) for t, c in self.bracket_basis(j1, i1))

        for t, c in br(j, k):
            for u, d in br(i, t):
                acc[u] += c * d
        for t, c in br(k, i):
            for u, d in br(j, t):
                acc[u] += c * d
        for t, c in br(i, j):
            for u, d in br(k, t):
                acc[u] += c * d
        return all(v == 0 for v in acc)

    def verify_jacobi(self, exhaustive=False, samples=1000, seed=0):
        n = self.dim
        if exhaustive:
            for i in range(n):
                for j in range(i + 1, n):
                    for k in range(j + 1, n):
                        if not self._jacobi_triple(i, j, k):
                            raise AssertionError(f"Jacobi fails on basis triple {(i, j, k)}")
        else:
            rng = random.Random(seed)
            for _ in range(samples):
                i, j, k = (rng.randrange(n) for _ in range(3))
                if not self._jacobi_triple(i, j, k):
                    raise AssertionError(f"Jacobi fails on basis triple {(i, j, k)}")
        return True

    def __repr__(self):
        return f"ChevalleyAlgebra({self.rs.cartan_type}, dim={self.dim})"


class CompactFormBasis:
    """Basis of the compact real form: {i h_j} u {e_b - e_-b, i(e_b + e_-b)}."""

    def __init__(self, algebra: ChevalleyAlgebra):
        self.algebra = algebra
        a = algebra
        r = a.rank
        self.labels = []
        self.elements = []
        zero = (ZERO,) * a.dim
        for j in range(r):
            im = [ZERO] * a.dim
            im[j] = Q(1)
            self.labels.append(("ih", j))
            self.elements.append(AlgebraElement(zero, im))
        for beta in a.rs.positive_roots:
            ib, imb = a._eidx[beta], a._eidx[tuple(-c for c in beta)]
            re = [ZERO] * a.dim
            re[ib] = Q(1)
            re[imb] = Q(-1)
            self.labels.append(("e-f", beta))
            self.elements.append(AlgebraElement(re))
            im = [ZERO] * a.dim
            im[ib] = Q(1)
            im[imb] = Q(1)
            self.labels.append(("i(e+f)", beta))
            self.elements.append(AlgebraElement(zero, im))

    def __len__(self):
        return len(self.elements)

    def gram_killing(self) -> list[list[int]]:
        """Exact Killing Gram matrix of the compact basis (block structure)."""
        a = self.algebra
        r = a.rank
        n = len(self.elements)
        g = [[0] * n for _ in range(n)]
        for i in range(r):
            for j in range(r):
                g[i][j] = -a.killing_h(i, j)
        for k, beta in enumerate(a.rs.positive_roots):
            c = a.killing_ef(beta)
            g[r + 2 * k][r + 2 * k] = -2 * c
            g[r + 2 * k + 1][r + 2 * k + 1] = -2 * c
        return g


_ALG_CACHE: dict[str, ChevalleyAlgebra] = {}


def build_algebra(rs: RootSystem | str, verify="auto") -> ChevalleyAlgebra:
    """Construct (and cache) the Chevalley algebra of a root system."""
    if isinstance(rs, str):
        rs = build_root_system(rs)
    key = str(rs.cartan_type)
    if key not in _ALG_CACHE:
        _ALG_CACHE[key] = ChevalleyAlgebra(rs, verify=verify)
    return _ALG_CACHE[key]


def ad_matrix(a: ChevalleyAlgebra, x: AlgebraElement) -> RationalMatrix:
    return a.ad_matrix(x)


def centralizer_dim(a: ChevalleyAlgebra, x: AlgebraElement) -> int:
    return a.centralizer_dim(x)


def compact_form_basis(a: ChevalleyAlgebra) -> CompactFormBasis:
    return CompactFormBasis(a)
