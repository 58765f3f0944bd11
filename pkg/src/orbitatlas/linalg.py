"""Exact rational linear algebra: rank, kernel, solve.

Everything is arbitrary-precision rational arithmetic; there is no floating
point anywhere in the package.  Two exact rank routes are provided:

* fraction-free (Bareiss) elimination over the integers, used for small and
  medium matrices and for kernel/solve back-substitution;
* a deterministic multi-prime route for large matrices: the rank of an integer
  matrix equals the maximum of its ranks mod p over any set of primes whose
  product exceeds the Hadamard bound on its minors (a nonzero minor cannot be
  divisible by a larger product of distinct primes).

Both routes return the exact rank over Q and are cross-checked in the tests.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import lcm

from ._modp import LimbMatrix, prime_stream, rank_mod_p

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - optional accelerator
    def mpz(x):
        return x


class RationalMatrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(Q(a) for a in row) for row in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", len(rows[0]) if rows else 0)

    def __setattr__(self, *a):
        raise AttributeError("RationalMatrix is immutable")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"


def _int_rows(m: RationalMatrix) -> list[list[int]]:
    """Clear denominators row by row (rank and right kernel are unchanged)."""
    out = []
    for row in m.entries:
        d = lcm(*(a.denominator for a in row)) if row else 1
        out.append([int(a * d) for a in row])
    return out


# ---------------------------------------------------------------------------
# fraction-free elimination

def _bareiss_echelon(rows: list[list], ncols: int | None = None, limit: int | None = None):
    """In-place fraction-free row echelon; returns pivot column list.

    `limit` restricts pivot search to the first `limit` columns (used for
    augmented solves).  Entries must be integers (or mpz).
    """
    n = len(rows)
    m = ncols if ncols is not None else (len(rows[0]) if n else 0)
    stop = m if limit is None else limit
    prev = 1
    pivots = []
    r = 0
    for col in range(stop):
        if r >= n:
            break
        piv = -1
        for i in range(r, n):
            if rows[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pc = prow[col]
        for i in range(r + 1, n):
            ri = rows[i]
            ric = ri[col]
            if ric:
                for j in range(col + 1, m):
                    ri[j] = (pc * ri[j] - ric * prow[j]) // prev
                ri[col] = 0
            else:
                # standard one-step update degenerates to an exact rescale
                for j in range(col + 1, m):
                    ri[j] = (pc * ri[j]) // prev
        prev = pc
        pivots.append(col)
        r += 1
    return pivots


def _rank_bareiss(rows: list[list[int]], ncols: int) -> int:
    work = [[mpz(a) for a in row] for row in rows]
    return len(_bareiss_echelon(work, ncols))


def _hadamard_bits(rows: list[list[int]], size: int) -> int:
    """Upper bound (in bits) for any `size` x `size` minor."""
    norm_bits = sorted(
        (sum(a * a for a in row).bit_length() // 2 + 1 for row in rows if any(row)),
        reverse=True,
    )
    return sum(norm_bits[:size]) if norm_bits else 0


def _rank_certified(rows: list[list[int]], nrows: int, ncols: int) -> int:
    """Exact rank via the deterministic multi-prime certificate."""
    if not any(any(r) for r in rows):
        return 0
    limbs = LimbMatrix(rows)
    cols = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
    full = min(nrows, ncols)
    rank = 0
    prodbits = 0

    def target(r):
        s = min(r + 1, full)
        return min(_hadamard_bits(rows, s), _hadamard_bits(cols, s)) + 1

    goal = None
    i = 0
    while True:
        p = prime_stream(i)
        i += 1
        rp = rank_mod_p(limbs, p)
        if rp > rank:
            rank = rp
            goal = None
        if rank == full:
            return rank
        if goal is None:
            goal = target(rank)
        prodbits += p.bit_length() - 1
        if prodbits > goal:
            return rank


def rank_int_rows(rows: list[list[int]], ncols: int) -> int:
    """Exact rank of an integer matrix, choosing the cheaper exact route."""
    nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    if min(nrows, ncols) <= 24:
        return _rank_bareiss(rows, ncols)
    maxbit = max((abs(a).bit_length() for row in rows for a in row), default=0)
    if min(nrows, ncols) * maxbit <= 2500:
        return _rank_bareiss(rows, ncols)
    return _rank_certified(rows, nrows, ncols)


# ---------------------------------------------------------------------------
# public operations

def rank_rational(m: RationalMatrix) -> int:
    """Exact rank over Q."""
    return rank_int_rows(_int_rows(m), m.cols)


def kernel_basis_int(rows: list[list[int]], ncols: int) -> list[tuple[Q, ...]]:
    work = [[mpz(a) for a in row] for row in rows]
    pivots = _bareiss_echelon(work, ncols)
    rank = len(pivots)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        x = [Q(0)] * ncols
        x[f] = Q(1)
        for i in range(rank - 1, -1, -1):
            pc = pivots[i]
            s = sum((Q(int(work[i][j])) * x[j] for j in range(pc + 1, ncols) if x[j]), Q(0))
            x[pc] = -s / Q(int(work[i][pc]))
        basis.append(tuple(x))
    return basis


def kernel_basis(m: RationalMatrix) -> list[tuple[Q, ...]]:
    """Basis of the right null space; empty iff rank == cols."""
    return kernel_basis_int(_int_rows(m), m.cols)


def solve_linear(m: RationalMatrix, b) -> tuple[Q, ...] | None:
    """Some exact solution x of m x = b, or None if inconsistent."""
    if len(b) != m.rows:
        raise ValueError("dimension mismatch: len(b) != rows")
    aug = []
    for row, be in zip(m.entries, b):
        ents = list(row) + [Q(be)]
        d = lcm(*(a.denominator for a in ents))
        aug.append([mpz(int(a * d)) for a in ents])
    n, mcols = m.rows, m.cols
    pivots = _bareiss_echelon(aug, mcols + 1, limit=mcols)
    rank = len(pivots)
    for i in range(rank, n):
        if aug[i][mcols]:
            return None
    x = [Q(0)] * mcols
    for i in range(rank - 1, -1, -1):
        pc = pivots[i]
        s = sum((Q(int(aug[i][j])) * x[j] for j in range(pc + 1, mcols) if x[j]), Q(0))
        x[pc] = (Q(int(aug[i][mcols])) - s) / Q(int(aug[i][pc]))
    return tuple(x)


def is_negative_definite(sym: list[list[int]]) -> bool:
    """Sign test on leading principal minors of an exact symmetric matrix."""
    n = len(sym)
    work = [[mpz(a) for a in row] for row in sym]
    prev = 1
    for k in range(n):
        pc = work[k][k]
        if pc == 0:
            return False
        # after k steps the pivot equals the (k+1)-st leading principal minor
        minor_sign = 1 if pc > 0 else -1
        if minor_sign != (1 if (k + 1) % 2 == 0 else -1):
            return False
        for i in range(k + 1, n):
            rik = work[i][k]
            for j in range(k + 1, n):
                work[i][j] = (pc * work[i][j] - rik * work[k][j]) // prev
            work[i][k] = 0
        prev = pc
    return True
