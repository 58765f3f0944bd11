"""Cohomogeneity of adjoint orbits under the compact real form.

A point of the complexified orbit is moved around by exact unipotent flows
exp(t ad e_gamma) (polynomials, since ad e_gamma is nilpotent), so sampled
points stay on the orbit and stay rational.  At each sample the real orbit
dimension of the compact form is an exact matrix rank; the cohomogeneity is
the orbit's real dimension minus the largest sampled value.  The result is
exact at every sampled point and certifies the cohomogeneity up to genericity
of the samples; pinned expected values in the test suite surface any
non-generic run.

Samples are independent (one derived seed per index) and merged by max, so a
report is deterministic for a given (seed, num_samples) regardless of
evaluation order, and sampling may run in parallel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .chevalley import AlgebraElement, ChevalleyAlgebra
from .linalg import RationalMatrix, rank_int_rows
from .orbits import OrbitLabel, representative, weighted_diagram


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    num_samples: int = 5
    unipotent_steps: int | None = None  # default: 2 x number of positive roots
    coefficient_range: int = 3

    def __post_init__(self):
        if self.num_samples < 1 or self.coefficient_range < 1:
            raise ValueError("num_samples and coefficient_range must be positive")
        if self.unipotent_steps is not None and self.unipotent_steps < 0:
            raise ValueError("unipotent_steps must be non-negative")

    def steps_for(self, a: ChevalleyAlgebra) -> int:
        if self.unipotent_steps is not None:
            return self.unipotent_steps
        return 2 * a.rs.num_positive


@dataclass(frozen=True)
class CohomReport:
    cohomogeneity: int
    orbit_real_dim: int
    samples: tuple[tuple[int, int], ...]  # (sample seed, real orbit dimension)
    certification: str

    def as_dict(self):
        return {
            "cohomogeneity": self.cohomogeneity,
            "orbit_real_dim": self.orbit_real_dim,
            "samples": [list(s) for s in self.samples],
            "certification": self.certification,
        }


_CERT = (
    "exact rank at each sampled point; cohomogeneity certified as generic-orbit "
    "codimension up to genericity of the samples"
)


def _factorials(n):
    out = [1]
    for k in range(1, n + 1):
        out.append(out[-1] * k)
    return out


def derived_seed(cfg: SampleConfig, index: int) -> int:
    return (cfg.seed * 1_000_003) ^ (index * 7_919)


def sample_orbit_point(
    a: ChevalleyAlgebra, x0: AlgebraElement, cfg: SampleConfig, index: int = 0
) -> AlgebraElement:
    """Image of x0 under a random product of root-unipotent flows (exact)."""
    rng = random.Random(derived_seed(cfg, index))
    steps = cfg.steps_for(a)
    num = a._clear_denoms(x0)
    den = 1
    roots = a.rs.all_roots
    rmax = cfg.coefficient_range
    for _ in range(steps):
        gamma = roots[rng.randrange(len(roots))]
        t = rng.choice([c for c in range(-rmax, rmax + 1) if c])
        gi = a.root_vector_index(gamma)
        terms = [num]
        cur = num
        while True:
            cur = a.apply_ad_basis_int(gi, cur)
            if not any(cur):
                break
            terms.append(cur)
        kmax = len(terms) - 1
        fact = _factorials(kmax)
        fk = fact[kmax]
        new = [0] * a.dim
        for k, vec in enumerate(terms):
            c = (t ** k) * (fk // fact[k])
            for j, v in enumerate(vec):
                if v:
                    new[j] += c * v
        num = new
        den *= fk
        g = den
        for v in num:
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            num = [v // g for v in num]
            den //= g
    return a.from_int_coords(num, den)


def real_orbit_dim(a: ChevalleyAlgebra, x: AlgebraElement) -> int:
    """dim_R of span{[u, x] : u in the compact form basis}, by exact rank.

    For real-rational x the brackets with {e-f} rows are real and the brackets
    with {ih, i(e+f)} rows are purely imaginary, so the realified rank splits
    into two N-column ranks.
    """
    ints = a._clear_denoms(x)
    real_rows = []
    imag_rows = []
    for j in range(a.rank):
        imag_rows.append(a.apply_ad_basis_int(j, ints))
    for beta in a.rs.positive_roots:
        ib = a.root_vector_index(beta)
        imb = a.root_vector_index(tuple(-c for c in beta))
        ve = a.apply_ad_basis_int(ib, ints)
        vf = a.apply_ad_basis_int(imb, ints)
        real_rows.append([p - q for p, q in zip(ve, vf)])
        imag_rows.append([p + q for p, q in zip(ve, vf)])
    return rank_int_rows(real_rows, a.dim) + rank_int_rows(imag_rows, a.dim)


def cohom_adjoint(
    a: ChevalleyAlgebra, x0: AlgebraElement, cfg: SampleConfig = SampleConfig()
) -> CohomReport:
    """Cohomogeneity of the G^C-orbit of x0 under the compact real form."""
    z = a.centralizer_dim(x0)
    orbit_real = 2 * (a.dim - z)
    if orbit_real == 0:
        raise ValueError("x0 must be nonzero")
    samples = []
    best = 0
    for i in range(cfg.num_samples):
        x = sample_orbit_point(a, x0, cfg, index=i)
        d = real_orbit_dim(a, x)
        assert d <= orbit_real
        samples.append((derived_seed(cfg, i), d))
        best = max(best, d)
    return CohomReport(orbit_real - best, orbit_real, tuple(samples), _CERT)


def cohom_linear_rep(
    action_matrices: list[RationalMatrix], rep_dim: int, cfg: SampleConfig = SampleConfig()
) -> CohomReport:
    """Cohomogeneity of a linear action given a basis of action matrices."""
    best = 0
    samples = []
    for i in range(cfg.num_samples):
        rng = random.Random(derived_seed(cfg, i))
        v = [rng.randint(-cfg.coefficient_range - 1, cfg.coefficient_range + 1) for _ in range(rep_dim)]
        rows = []
        for m in action_matrices:
            row = [sum(m.entries[r][c] * v[c] for c in range(rep_dim)) for r in range(rep_dim)]
            den = 1
            for q in row:
                den = den * q.denominator // gcd(den, q.denominator)
            rows.append([int(q * den) for q in row])
        d = rank_int_rows(rows, rep_dim) if rows else 0
        samples.append((derived_seed(cfg, i), d))
        best = max(best, d)
    return CohomReport(rep_dim - best, rep_dim, tuple(samples), _CERT)


@dataclass(frozen=True)
class MonotonicityReport:
    labels: tuple[str, ...]
    cohomogeneities: tuple[int, ...]
    strictly_increasing: bool


def check_monotonicity(
    a: ChevalleyAlgebra, labels: list[OrbitLabel], cfg: SampleConfig = SampleConfig()
) -> MonotonicityReport:
    """Cohomogeneities along a closure-order chain (low to high orbit)."""
    t = a.rs.cartan_type
    cohoms = []
    for lab in labels:
        w = lab.diagram if lab.diagram is not None else weighted_diagram(t, lab)
        x = representative(a, w, seed=cfg.seed)
        cohoms.append(cohom_adjoint(a, x, cfg).cohomogeneity)
    ok = all(cohoms[i] < cohoms[i + 1] for i in range(len(cohoms) - 1))
    return MonotonicityReport(
        tuple(str(l) for l in labels), tuple(cohoms), ok
    )
