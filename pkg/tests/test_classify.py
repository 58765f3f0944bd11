import pytest

from orbitatlas.classify import (
    ClassificationError,
    assemble_tables_2_3,
    expected_ss_c1,
    expected_ss_c2,
    load_shared_orbits,
    mixed_orbit_cohom,
    product_orbit_cohom,
    reproduce_table1,
    reproduce_thm_ss_c2,
    table1_expected,
)
from orbitatlas.cohom import SampleConfig
from orbitatlas.flags import painted
from orbitatlas.orbits import minimal_orbit


def test_mixed_orbit_cohom_is_five():
    assert mixed_orbit_cohom(3).cohomogeneity == 5


def test_mixed_orbit_semisimple_part_alone():
    # sanity: the semi-simple part alone is the cohomogeneity-one T*CP(n)
    from orbitatlas.chevalley import build_algebra
    from orbitatlas.cohom import cohom_adjoint
    from orbitatlas.roots import coweight_element

    a = build_algebra("A3")
    h = coweight_element(a.rs, [0, 0, 4])
    assert cohom_adjoint(a, a.cartan_vector(h)).cohomogeneity == 1


def test_mixed_orbit_rejects_small_rank():
    with pytest.raises(ValueError):
        mixed_orbit_cohom(2)


def test_product_minimal_times_minimal():
    p = product_orbit_cohom(
        [("A1", minimal_orbit("A1")), ("A1", minimal_orbit("A1"))]
    )
    assert p.component_cohoms == (1, 1)
    assert p.report.cohomogeneity == 2
    assert p.additive


def test_product_flag_times_minimal():
    p = product_orbit_cohom(
        [("A2", painted("A2", [0])), ("A1", minimal_orbit("A1"))]
    )
    assert p.report.cohomogeneity == 2
    assert p.additive


def test_product_single_component():
    p = product_orbit_cohom([("A2", minimal_orbit("A2"))])
    assert p.report.cohomogeneity == p.component_cohoms[0] == 1


def test_table1_expected_rows():
    assert table1_expected("A2")[0]["cohom"] == 4
    assert table1_expected("G2")[0]["w_dim"] == 4
    assert table1_expected("F4")[0] == {
        "orbit": "wdd 0001", "cohom": 2, "k_dim": 15, "w_dim": 6, "k_name": "so(6)"}
    assert table1_expected("E8")[0]["k_dim"] == 78
    assert len(table1_expected("B4")) == 2
    assert len(table1_expected("B3")) == 1


def test_reproduce_table1_small():
    table = reproduce_table1(types=["A2", "A3", "C2", "B3", "G2"], strict=True)
    assert table.all_match
    assert len(table.rows) == 5


def test_reproduce_table1_reports_diagnostics_on_mismatch(monkeypatch):
    import orbitatlas.classify as C

    bad = dict(C.table1_expected("A2")[0])
    bad["cohom"] = 3
    monkeypatch.setattr(C, "table1_expected", lambda t: [bad])
    with pytest.raises(ClassificationError):
        C.reproduce_table1(types=["A2"], strict=True)
    table = C.reproduce_table1(types=["A2"], strict=False)
    assert not table.all_match


def test_expected_scan_sets():
    e1 = expected_ss_c1(4)
    assert e1 == {"A1[x1]", "A2[x1]", "A3[x1]", "A4[x1]"}
    e2 = expected_ss_c2(4)
    assert "C3[x1]" in e2 and "D4[x1]" in e2 and "A3[x2]" in e2
    assert "D5[x4]" in expected_ss_c2(5)
    assert "E6[x1]" in expected_ss_c2(6)


def test_reproduce_thm_ss_c2_rank3():
    table = reproduce_thm_ss_c2(max_rank=3, strict=True)
    assert table.all_match


def test_shared_orbit_data_loads():
    data = load_shared_orbits()
    assert len(data["pairs"]) == 7
    covers = {p["cover"] for p in data["pairs"]}
    assert {"E6", "F4", "so(7)", "G2"} <= covers


def test_tables_2_3_assembly():
    t2, t3 = assemble_tables_2_3(verify_support=False)
    assert len(t2.rows) == 9
    assert len(t3.rows) == 7
    for row in t2.rows + t3.rows:
        assert row.provenance  # every row carries a provenance tag
    shared_rows = [r for r in t2.rows if "external data" in r.provenance]
    assert len(shared_rows) == 6
    assert all(r.computed.get("shared_pair") for r in shared_rows)
