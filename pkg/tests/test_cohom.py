import pytest

from orbitatlas.chevalley import build_algebra
from orbitatlas.cohom import (
    SampleConfig,
    check_monotonicity,
    cohom_adjoint,
    cohom_linear_rep,
    real_orbit_dim,
    sample_orbit_point,
)
from orbitatlas.linalg import RationalMatrix
from orbitatlas.orbits import (
    Partition,
    hasse_diagram,
    min_orbit_representative,
    minimal_orbit,
    valid_partitions,
)
from orbitatlas.roots import coweight_element


def test_zero_steps_returns_x0():
    a = build_algebra("A2")
    x0 = a.root_vector(a.rs.highest_root)
    cfg = SampleConfig(seed=5, unipotent_steps=0)
    assert sample_orbit_point(a, x0, cfg) == x0


def test_single_step_sl2():
    # exp(ad e) h = h + [e, h] = h - 2e
    a = build_algebra("A1")
    h = a.cartan_vector(coweight_element(a.rs, [2]))
    e = a.root_vector((1,))
    moved = a.bracket(e, h)
    assert moved == e.scale(-2)


def test_sampling_preserves_centralizer_dim():
    a = build_algebra("C2")
    x0 = min_orbit_representative(a)
    z0 = a.centralizer_dim(x0)
    for i in range(4):
        x = sample_orbit_point(a, x0, SampleConfig(seed=11), index=i)
        assert a.centralizer_dim(x) == z0


def test_real_orbit_dims_A1():
    a = build_algebra("A1")
    assert real_orbit_dim(a, a.zero()) == 0
    assert real_orbit_dim(a, a.root_vector((1,))) == 3
    assert real_orbit_dim(a, a.cartan_vector(coweight_element(a.rs, [2]))) == 2


def test_cohom_rejects_zero():
    a = build_algebra("A1")
    with pytest.raises(ValueError):
        cohom_adjoint(a, a.zero())


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "C2", "G2"])
def test_minimal_orbit_cohom_one_small(name):
    a = build_algebra(name)
    r = cohom_adjoint(a, min_orbit_representative(a))
    assert r.cohomogeneity == 1
    assert all(d <= r.orbit_real_dim for _, d in r.samples)


def test_A2_regular_cohom_four():
    from orbitatlas.orbits import representative, weighted_diagram

    a = build_algebra("A2")
    x = representative(a, weighted_diagram("A2", Partition((3,))))
    assert cohom_adjoint(a, x).cohomogeneity == 4


def test_nilpotent_cohom_at_least_one():
    a = build_algebra("B2")
    for lab in valid_partitions("B2"):
        if lab.partition.parts == (1,) * 5:
            continue
        from orbitatlas.orbits import representative, weighted_diagram

        x = representative(a, weighted_diagram("B2", lab))
        assert cohom_adjoint(a, x).cohomogeneity >= 1


def test_scaling_invariance():
    a = build_algebra("C2")
    x0 = min_orbit_representative(a)
    r1 = cohom_adjoint(a, x0)
    r2 = cohom_adjoint(a, x0.scale(4))
    assert r1.cohomogeneity == r2.cohomogeneity


def test_monotone_refinement_under_pooling():
    a = build_algebra("C2")
    x0 = min_orbit_representative(a)
    base = max(d for _, d in cohom_adjoint(a, x0, SampleConfig(seed=0)).samples)
    pooled = base
    for seed in (1, 2, 3):
        r = cohom_adjoint(a, x0, SampleConfig(seed=seed))
        pooled = max(pooled, *(d for _, d in r.samples))
    assert pooled >= base


def test_cohom_linear_rep_trivial():
    m = RationalMatrix([[0, 0], [0, 0]])
    assert cohom_linear_rep([m], 2).cohomogeneity == 2


def test_cohom_linear_rep_rotation():
    m = RationalMatrix([[0, -1], [1, 0]])
    assert cohom_linear_rep([m], 2).cohomogeneity == 1


def test_cohom_linear_rep_so3_diagonal():
    import itertools

    def so3_gen(i, j):
        rows = [[0] * 6 for _ in range(6)]
        for off in (0, 3):
            rows[off + i][off + j] = -1
            rows[off + j][off + i] = 1
        return RationalMatrix(rows)

    mats = [so3_gen(i, j) for i, j in itertools.combinations(range(3), 2)]
    assert cohom_linear_rep(mats, 6).cohomogeneity == 3


def test_monotonicity_C2_chain():
    a = build_algebra("C2")
    chain = [
        lab for lab in valid_partitions("C2") if lab.partition.parts != (1, 1, 1, 1)
    ]
    chain.sort(key=lambda l: sum(i for i, _ in enumerate(l.partition.parts)))
    from orbitatlas.orbits import orbit_dimension

    chain.sort(key=lambda l: orbit_dimension("C2", l))
    rep = check_monotonicity(a, chain)
    assert rep.strictly_increasing
    assert list(rep.cohomogeneities) == sorted(rep.cohomogeneities)


def test_single_orbit_trivially_monotone():
    a = build_algebra("A2")
    rep = check_monotonicity(a, [minimal_orbit("A2")])
    assert rep.strictly_increasing


def test_A3_min_vs_ntm():
    a = build_algebra("A3")
    from orbitatlas.orbits import next_to_minimal

    rep = check_monotonicity(a, [minimal_orbit("A3")] + next_to_minimal("A3"))
    assert rep.cohomogeneities == (1, 2)
