"""Nilpotent orbit catalog: partitions, closure order, weighted diagrams.

Classical nilpotent orbits are labeled by Jordan partitions subject to the
usual parity rules; the closure order is dominance order computed inside the
valid-partition poset.  Very even D-partitions label two orbits and are
stored once with a flag.  Exceptional minimal/next-to-minimal orbits are
labeled by weighted Dynkin diagrams constructed from explicit representatives
(highest-root vector; highest-short-root vector for G2/F4; a sum over a
strongly orthogonal pair of long roots for E6/E7/E8).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction as Q

from .chevalley import AlgebraElement, ChevalleyAlgebra
from .roots import CartanType, CartanElement, build_root_system, coweight_element, parse_cartan_type


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = self.parts
        if any(a <= 0 for a in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError("parts must be weakly decreasing positive integers")

    @property
    def total(self):
        return sum(self.parts)

    def dual(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(
            tuple(sum(1 for a in self.parts if a > i) for i in range(self.parts[0]))
        )

    def multiplicity(self, k: int) -> int:
        return sum(1 for a in self.parts if a == k)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.parts) + ")"


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    marks: tuple[int, ...]

    def __post_init__(self):
        if any(m not in (0, 1, 2) for m in self.marks):
            raise ValueError("weighted Dynkin marks must lie in {0,1,2}")

    def __str__(self):
        return "".join(str(m) for m in self.marks)


@dataclass(frozen=True)
class OrbitLabel:
    """Classical partition label (with very-even flag) or exceptional diagram."""

    partition: Partition | None = None
    diagram: WeightedDynkinDiagram | None = None
    very_even: bool = False  # the label names two orbits (I and II)
    name: str = ""

    def __str__(self):
        if self.partition is not None:
            return str(self.partition) + (" [I/II]" if self.very_even else "")
        return f"wdd {self.diagram}" + (f" ({self.name})" if self.name else "")


def _ctype(t) -> CartanType:
    return parse_cartan_type(t) if isinstance(t, str) else t


def _classical_data(t: CartanType):
    if not t.is_simple:
        raise ValueError("classical operations need a simple type")
    fam, n = t.family, t.components[0].rank
    if fam == "A":
        return fam, n, n + 1
    if fam == "B":
        return fam, n, 2 * n + 1
    if fam in ("C", "D"):
        return fam, n, 2 * n
    raise ValueError(f"{t} is not a classical type")


def _partitions_of(n: int):
    def rec(n, maxpart):
        if n == 0:
            yield ()
            return
        for k in range(min(n, maxpart), 0, -1):
            for rest in rec(n - k, k):
                yield (k,) + rest

    return rec(n, n)


def partition_valid(t, p: Partition) -> bool:
    fam, n, size = _classical_data(_ctype(t))
    if p.total != size:
        return False
    if fam == "A":
        return True
    if fam in ("B", "D"):
        return all(p.multiplicity(k) % 2 == 0 for k in set(p.parts) if k % 2 == 0)
    return all(p.multiplicity(k) % 2 == 0 for k in set(p.parts) if k % 2 == 1)


def valid_partitions(t) -> list[OrbitLabel]:
    """All nilpotent orbit labels of a classical type (very even flagged once)."""
    t = _ctype(t)
    fam, n, size = _classical_data(t)
    out = []
    for parts in _partitions_of(size):
        p = Partition(parts)
        if partition_valid(t, p):
            very = fam == "D" and all(a % 2 == 0 for a in parts)
            out.append(OrbitLabel(partition=p, very_even=very))
    return out


def orbit_dimension(t, p: Partition | OrbitLabel) -> int:
    """Complex dimension of the orbit via the dual-partition centralizer formula."""
    t = _ctype(t)
    if isinstance(p, OrbitLabel):
        p = p.partition
    fam, n, size = _classical_data(t)
    if not partition_valid(t, p):
        raise ValueError(f"invalid partition {p} for {t}")
    s2 = sum(d * d for d in p.dual().parts)
    odd = sum(1 for a in p.parts if a % 2 == 1)
    if fam == "A":
        return size * size - s2
    if fam == "C":
        z = (s2 + odd) // 2
        return size * (size + 1) // 2 - z
    z = (s2 - odd) // 2
    return size * (size - 1) // 2 - z


def dominates(p: Partition, q: Partition) -> bool:
    """Dominance order: every partial sum of p is >= that of q (equal totals)."""
    if p.total != q.total:
        raise ValueError("dominance needs equal totals")
    sp = sq = 0
    n = max(len(p.parts), len(q.parts))
    for i in range(n):
        sp += p.parts[i] if i < len(p.parts) else 0
        sq += q.parts[i] if i < len(q.parts) else 0
        if sp < sq:
            return False
    return True


def hasse_diagram(t) -> list[tuple[OrbitLabel, OrbitLabel]]:
    """Covering relations (lower, upper) of the valid-partition closure order."""
    labels = valid_partitions(t)
    edges = []
    for lo in labels:
        for hi in labels:
            if lo.partition == hi.partition:
                continue
            if not dominates(hi.partition, lo.partition):
                continue
            between = any(
                mid.partition != lo.partition
                and mid.partition != hi.partition
                and dominates(hi.partition, mid.partition)
                and dominates(mid.partition, lo.partition)
                for mid in labels
            )
            if not between:
                edges.append((lo, hi))
    return edges


# ---------------------------------------------------------------------------
# weighted Dynkin diagrams

def _jordan_eigenvalues(p: Partition) -> list[int]:
    out = []
    for a in p.parts:
        out.extend(range(a - 1, -a, -2))
    return out


def weighted_diagram(t, label: OrbitLabel | Partition) -> WeightedDynkinDiagram:
    """Weighted Dynkin diagram of a nilpotent orbit.

    Classical types use the standard recipe: merge the per-block h-eigenvalue
    strings, take the dominant rearrangement in epsilon-coordinates, and read
    off the simple-root values.
    """
    t = _ctype(t)
    if isinstance(label, Partition):
        label = OrbitLabel(partition=label)
    if label.diagram is not None:
        return label.diagram
    fam, n, size = _classical_data(t)
    p = label.partition
    if not partition_valid(t, p):
        raise ValueError(f"invalid partition {p} for {t}")
    ev = sorted(_jordan_eigenvalues(p), reverse=True)
    if fam == "A":
        h = ev
        marks = [h[i] - h[i + 1] for i in range(n)]
    else:
        h = ev[:n]
        marks = [h[i] - h[i + 1] for i in range(n - 1)]
        if fam == "B":
            marks.append(h[n - 1])
        elif fam == "C":
            marks.append(2 * h[n - 1])
        else:
            marks.append(h[n - 2] + h[n - 1])
    return WeightedDynkinDiagram(tuple(marks))


# ---------------------------------------------------------------------------
# minimal and next-to-minimal orbits

def minimal_orbit(t) -> OrbitLabel:
    """Label of the minimal nonzero nilpotent orbit."""
    t = _ctype(t)
    fam = t.family
    n = t.components[0].rank
    if fam == "A":
        return OrbitLabel(partition=Partition((2,) + (1,) * (n - 1)))
    if fam == "B":
        return OrbitLabel(partition=Partition((2, 2) + (1,) * (2 * n - 3)))
    if fam == "C":
        return OrbitLabel(partition=Partition((2,) + (1,) * (2 * n - 2)))
    if fam == "D":
        return OrbitLabel(partition=Partition((2, 2) + (1,) * (2 * n - 4)))
    rs = build_root_system(t)
    h = rs.coroot_element(rs.highest_root)
    marks = tuple(int(m) for m in rs.marks_of(h))
    return OrbitLabel(diagram=WeightedDynkinDiagram(marks), name="minimal")


def next_to_minimal(t) -> list[OrbitLabel]:
    """Labels of the orbits covering the minimal one in the closure order."""
    t = _ctype(t)
    fam = t.family
    n = t.components[0].rank
    if fam == "A":
        if n == 1:
            return []
        if n == 2:
            return [OrbitLabel(partition=Partition((3,)))]
        return [OrbitLabel(partition=Partition((2, 2) + (1,) * (n - 3)))]
    if fam == "B":
        out = [OrbitLabel(partition=Partition((3,) + (1,) * (2 * n - 2)))]
        if 2 * n - 7 >= 0:
            out.append(OrbitLabel(partition=Partition((2,) * 4 + (1,) * (2 * n - 7))))
        return out
    if fam == "C":
        return [OrbitLabel(partition=Partition((2, 2) + (1,) * (2 * n - 4)))]
    if fam == "D":
        out = [OrbitLabel(partition=Partition((3,) + (1,) * (2 * n - 3)))]
        if 2 * n - 8 >= 0:
            p = Partition((2,) * 4 + (1,) * (2 * n - 8))
            out.append(OrbitLabel(partition=p, very_even=(2 * n - 8 == 0)))
        return out
    # exceptional: construct the representative's semi-simple element directly
    rs = build_root_system(t)
    if fam in ("G", "F"):
        h = rs.coroot_element(rs.highest_short_root)
    else:
        theta = rs.highest_root
        beta = next(
            b for b in rs.positive_roots if rs.bilinear(theta, b) == 0
        )
        h = rs.coroot_element(theta) + rs.coroot_element(beta)
    marks, _ = rs.dominant_marks(h)
    marks = tuple(int(m) for m in marks)
    return [OrbitLabel(diagram=WeightedDynkinDiagram(marks), name="next-to-minimal")]


# ---------------------------------------------------------------------------
# representatives

def grading(rs, h: CartanElement) -> dict:
    """Dimensions of the ad(h) eigenspaces, keyed by eigenvalue."""
    dims = {0: rs.rank}
    for g in rs.all_roots:
        v = rs.pair_root_cartan(g, h)
        k = int(v) if v.denominator == 1 else v
        dims[k] = dims.get(k, 0) + 1
    return dims


def expected_orbit_dimension(rs, w: WeightedDynkinDiagram) -> int:
    """dim g - dim g_0(h) - dim g_1(h) for h the diagram's Cartan element."""
    h = coweight_element(rs, w.marks)
    dims = grading(rs, h)
    return rs.dimension - dims.get(0, 0) - dims.get(1, 0)


def representative(
    a: ChevalleyAlgebra, w: WeightedDynkinDiagram, seed: int = 0
) -> AlgebraElement:
    """Nilpotent representative: random small-integer point of g_2(h).

    Accepted iff the exact centralizer dimension matches the orbit dimension
    the diagram predicts; retries with fresh coefficients, widening the range
    after every third failure.
    """
    rs = a.rs
    h = coweight_element(rs, w.marks)
    g2roots = [g for g in rs.all_roots if rs.pair_root_cartan(g, h) == 2]
    if not g2roots:
        raise ValueError(f"diagram {w} has empty degree-2 piece")
    expected = expected_orbit_dimension(rs, w)
    rng = random.Random(seed)
    crange = 3
    for attempt in range(30):
        coeffs = [rng.randint(-crange, crange) for _ in g2roots]
        if not any(coeffs):
            continue
        co = [Q(0)] * a.dim
        for g, c in zip(g2roots, coeffs):
            if c:
                co[a.root_vector_index(g)] = Q(c)
        x = AlgebraElement(co)
        if a.centralizer_dim(x) == a.dim - expected:
            return x
        if attempt % 3 == 2:
            crange *= 2
    raise RuntimeError(
        f"no representative found for diagram {w}: the diagram is likely wrong"
    )


def min_orbit_representative(a: ChevalleyAlgebra) -> AlgebraElement:
    """Highest-root vector: canonical representative of the minimal orbit."""
    return a.root_vector(a.rs.highest_root)
