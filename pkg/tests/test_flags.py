import itertools

import pytest

from orbitatlas.chevalley import build_algebra
from orbitatlas.cohom import SampleConfig
from orbitatlas.flags import (
    classify_ss_low_cohom,
    flag_cohom,
    isotropy_roots,
    kostant_summands,
    nodes_up_to_automorphism,
    painted,
    scan_types,
)
from orbitatlas.roots import build_root_system, parse_cartan_type


def test_all_crossed_gives_all_roots():
    rs = build_root_system("B2")
    pd = painted("B2", [0, 1])
    assert set(isotropy_roots(rs, pd)) == set(rs.all_roots)


def test_A2_isotropy_roots():
    rs = build_root_system("A2")
    got = set(isotropy_roots(rs, painted("A2", [0])))
    assert got == {(1, 0), (1, 1), (-1, 0), (-1, -1)}


def test_C2_isotropy_dimension():
    rs = build_root_system("C2")
    # m = H^n + R^2 at n = 1: real dimension 6
    assert len(isotropy_roots(rs, painted("C2", [0]))) == 6


def test_kostant_A2_single_class():
    rs = build_root_system("A2")
    assert kostant_summands(rs, painted("A2", [0])).num_summands == 1


def test_kostant_C2_two_classes():
    rs = build_root_system("C2")
    assert kostant_summands(rs, painted("C2", [0])).num_summands == 2


def test_kostant_B2_full_flag():
    rs = build_root_system("B2")
    assert kostant_summands(rs, painted("B2", [0, 1])).num_summands >= 3


def test_painted_validation():
    with pytest.raises(ValueError):
        painted("A2", [])
    with pytest.raises(ValueError):
        painted("A2", [5])


def test_flag_cohom_projective_spaces():
    for n in (1, 2, 3):
        a = build_algebra(f"A{n}")
        assert flag_cohom(a, painted(f"A{n}", [0])).cohomogeneity == 1


def test_flag_cohom_sp_family():
    for k in (2, 3):
        a = build_algebra(f"C{k}")
        assert flag_cohom(a, painted(f"C{k}", [0])).cohomogeneity == 2


def test_flag_cohom_full_B2_flag_at_least_three():
    a = build_algebra("B2")
    assert flag_cohom(a, painted("B2", [0, 1])).cohomogeneity >= 3


def test_hermitian_rank_equals_cohom():
    # Hermitian symmetric length-1 flags: cohomogeneity = rank of the space
    for t, node, rank in [
        ("A3", 1, 2),   # Gr_2(C^4)
        ("B3", 0, 2),   # hyperquadric
        ("D4", 0, 2),
        ("A5", 2, 3),   # Gr_3(C^6)
        ("C3", 2, 3),   # Sp(3)/U(3)
    ]:
        a = build_algebra(t)
        assert flag_cohom(a, painted(t, [node])).cohomogeneity == rank


def test_lower_bound_by_summand_count():
    for t in ("A2", "B2", "C2", "A3", "B3", "C3", "G2"):
        rs = build_root_system(t)
        a = build_algebra(t)
        for r in range(1, rs.rank + 1):
            for crossed in itertools.combinations(range(rs.rank), r):
                pd = painted(t, crossed)
                s = kostant_summands(rs, pd).num_summands
                assert flag_cohom(a, pd).cohomogeneity >= s


def test_length_two_at_least_three():
    # every length-2 painted diagram over rank <= 3 types
    for t in ("A2", "B2", "C2", "G2", "A3", "B3", "C3"):
        rs = build_root_system(t)
        a = build_algebra(t)
        for crossed in itertools.combinations(range(rs.rank), 2):
            pd = painted(t, crossed)
            assert kostant_summands(rs, pd).num_summands >= 3
            assert flag_cohom(a, pd).cohomogeneity >= 3


def test_fibration_monotonicity_rank2():
    # K1 > K2 implies cohom(K1) >= cohom(K2) + (|K1| - |K2|)
    for t in ("A2", "B2", "C2", "G2"):
        a = build_algebra(t)
        cohoms = {}
        for r in range(1, 3):
            for crossed in itertools.combinations(range(2), r):
                cohoms[frozenset(crossed)] = flag_cohom(a, painted(t, crossed)).cohomogeneity
        for k1, c1 in cohoms.items():
            for k2, c2 in cohoms.items():
                if k2 < k1:
                    assert c1 >= c2 + (len(k1) - len(k2))


def test_automorphism_classes():
    assert nodes_up_to_automorphism(parse_cartan_type("A4")) == [0, 1]
    assert nodes_up_to_automorphism(parse_cartan_type("D4")) == [0, 1]
    assert nodes_up_to_automorphism(parse_cartan_type("D5")) == [0, 1, 2, 3]
    assert nodes_up_to_automorphism(parse_cartan_type("E6")) == [0, 1, 2, 3]
    assert nodes_up_to_automorphism(parse_cartan_type("F4")) == [0, 1, 2, 3]


def test_scan_types_skips_D3():
    names = {str(t) for t in scan_types(4)}
    assert "D3" not in names
    assert {"A3", "B2", "C2", "D4", "G2", "F4"} <= names


def test_scan_rank3():
    got1 = {str(p) for p in classify_ss_low_cohom(3, 1)}
    assert got1 == {"A1[x1]", "A2[x1]", "A3[x1]"}
    got2 = {str(p) for p in classify_ss_low_cohom(3, 2)}
    assert got2 == {
        "A3[x2]", "B2[x1]", "B2[x2]", "B3[x1]", "C2[x1]", "C2[x2]", "C3[x1]",
    }


def test_scan_G2_target2_empty():
    a = build_algebra("G2")
    for node in (0, 1):
        assert flag_cohom(a, painted("G2", [node])).cohomogeneity >= 3
