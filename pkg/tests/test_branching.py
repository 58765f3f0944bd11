import pytest

from orbitatlas.branching import branch_adjoint, restriction_matrix, weight_multiplicities
from orbitatlas.roots import build_root_system, coweight_element, root_centralizer_subsystem


def adjoint_hw(rs):
    return tuple(rs.pair_with_coroot(rs.highest_root, i) for i in range(rs.rank))


def test_A1_adjoint_weights():
    rs = build_root_system("A1")
    t = weight_multiplicities(rs, (2,))
    assert t.entries == {(2,): 1, (0,): 1, (-2,): 1}


def test_A2_adjoint():
    rs = build_root_system("A2")
    t = weight_multiplicities(rs, (1, 1))
    assert t.dimension == 8
    assert t.entries[(0, 0)] == 2
    assert sum(1 for m in t.entries.values() if m == 1) == 6


def test_G2_adjoint():
    rs = build_root_system("G2")
    t = weight_multiplicities(rs, adjoint_hw(rs))
    assert t.dimension == 14
    assert t.entries[(0, 0)] == 2


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "F4"])
def test_adjoint_zero_weight_is_rank(name):
    rs = build_root_system(name)
    t = weight_multiplicities(rs, adjoint_hw(rs))
    assert t.dimension == rs.dimension
    assert t.entries[(0,) * rs.rank] == rs.rank


def test_weyl_invariance_spot_check():
    rs = build_root_system("C3")
    t = weight_multiplicities(rs, (1, 0, 1))
    for w, m in t.entries.items():
        for j in range(rs.rank):
            refl = tuple(
                w[k] - w[j] * rs.cartan_matrix[k][j] for k in range(rs.rank)
            )
            assert t.entries.get(refl) == m


def test_non_dominant_rejected():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        weight_multiplicities(rs, (1, -1))


def test_restriction_full_system_identity_like():
    rs = build_root_system("A2")
    simples = [(1, 0), (0, 1)]
    r = restriction_matrix(rs, simples)
    assert [[int(v) for v in row] for row in r.entries] == [[1, 0], [0, 1]]


def test_restriction_A2_to_A1():
    rs = build_root_system("A2")
    r = restriction_matrix(rs, [(1, 0)])
    # alpha_2 has fundamental coordinates (-1, 2); <alpha_2, alpha_1^vee> = -1
    alpha2_fund = tuple(rs.cartan_matrix[i][1] for i in range(2))
    assert int(sum(r.entries[0][i] * v for i, v in enumerate(alpha2_fund))) == -1


def test_restriction_rejects_dependent():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        restriction_matrix(rs, [(1, 0), (-1, 0)])


def test_branch_A1_to_itself():
    rs = build_root_system("A1")
    br = branch_adjoint(rs, [(1,)])
    assert len(br.components) == 1
    assert br.components[0].highest_weight == (2,)


def test_branch_to_full_system_is_identity():
    for name in ("A2", "B2", "G2"):
        rs = build_root_system(name)
        simples = [
            tuple(1 if j == i else 0 for j in range(rs.rank)) for i in range(rs.rank)
        ]
        br = branch_adjoint(rs, simples)
        assert len(br.components) == 1
        assert br.components[0].multiplicity == 1
        assert br.components[0].dimension == rs.dimension


def test_branch_G2_to_long_A2():
    rs = build_root_system("G2")
    longs = [r for r in rs.positive_roots if rs.root_d(r) == 3]
    lset = set(longs)
    simples = [
        r for r in longs
        if not any(tuple(a - b for a, b in zip(r, s)) in lset for s in longs if s != r)
    ]
    br = branch_adjoint(rs, simples)
    dims = sorted(c.dimension * c.multiplicity for c in br.components)
    assert dims == [3, 3, 8]
    assert br.total_dimension == 14


def test_branch_A2_to_A1_plus_torus():
    rs = build_root_system("A2")
    br = branch_adjoint(rs, [(1, 0)])
    dims = sorted(c.dimension for c in br.components)
    assert dims == [1, 2, 2, 3]
    # the two doublets carry opposite nonzero torus charges
    two = [c for c in br.components if c.dimension == 2]
    assert two[0].torus_charge == tuple(-q for q in two[1].torus_charge)
    assert any(q != 0 for q in two[0].torus_charge)


@pytest.mark.parametrize(
    "name,marks",
    [("B3", [0, 1, 0]), ("F4", [1, 0, 0, 0]), ("E6", [1, 0, 0, 0, 0, 0])],
)
def test_branch_dimension_conservation(name, marks):
    rs = build_root_system(name)
    sub = root_centralizer_subsystem(rs, coweight_element(rs, marks))
    br = branch_adjoint(rs, sub.simple_roots)
    assert br.total_dimension == rs.dimension


def test_branch_E8_fig1_pipeline():
    rs = build_root_system("E8")
    h = coweight_element(rs, [1, 0, 0, 0, 0, 0, 0, 0])
    sub = root_centralizer_subsystem(rs, h)
    assert str(sub.cartan_type) == "D7"
    # subalgebra dimension plus torus equals the centralizer dimension of h
    assert len(sub.roots) + (rs.rank - sub.torus_dim) + sub.torus_dim == 92
    br = branch_adjoint(rs, sub.simple_roots)
    assert br.total_dimension == 248
    mults = sorted(c.dimension for c in br.components)
    assert mults == [1, 14, 14, 64, 64, 91]
