"""End-to-end smoke tests for the trisphom Python bindings."""

import pytest

import trisphom


def test_version():
    assert trisphom.__version__ == "1.0.0"


def test_lattice_construction():
    l5 = trisphom.subset_lattice(5)
    assert len(l5) == 30
    assert l5.kind == "subset"
    assert l5.ground_n == 5
    assert l5.label(0) == "{1}"
    assert l5.rank(0) == 1

    pi5 = trisphom.partition_lattice(5)
    assert len(pi5) == 50
    assert pi5.kind == "partition"

    with pytest.raises(ValueError):
        trisphom.partition_lattice(2)


def test_order_complexes():
    l5 = trisphom.subset_lattice(5)
    delta_l = trisphom.order_complex(l5)
    assert delta_l.dimension == 3
    assert delta_l.f_vector == [30, 150, 240, 120]
    assert delta_l.euler == 0

    pi5 = trisphom.partition_lattice(5)
    delta_pi = trisphom.order_complex(pi5)
    assert delta_pi.f_vector == [50, 205, 180]
    assert delta_pi.euler == 25


def test_groups():
    c5 = trisphom.cyclic_group(5)
    assert c5.degree == 5
    assert c5.order == 5
    assert c5.is_abelian
    assert c5.abelian_invariants() == [5]
    assert c5.elements[0] == "()"

    four_cycle = trisphom.group_from_cycles("(2 3 4 5)", 5)
    assert four_cycle.order == 4


def test_free_action_and_quotient():
    l5 = trisphom.subset_lattice(5)
    action = trisphom.Action(trisphom.cyclic_group(5), l5)
    verdict = trisphom.is_free(action)
    assert verdict == {"free": True}

    full = trisphom.order_complex(l5)
    quot = trisphom.quotient(full, action)
    assert quot.f_vector == [6, 30, 48, 24]

    pi5 = trisphom.partition_lattice(5)
    pi_action = trisphom.Action(trisphom.cyclic_group(5), pi5)
    pi_quot = trisphom.quotient(trisphom.order_complex(pi5), pi_action)
    assert pi_quot.f_vector == [10, 41, 36]


def test_non_free_action_is_reported_and_refused():
    pi5 = trisphom.partition_lattice(5)
    action = trisphom.Action(trisphom.group_from_cycles("(2 3 4 5)", 5), pi5)
    verdict = trisphom.is_free(action)
    assert verdict["free"] is False
    assert verdict["witness_group_element"] != "()"
    assert verdict["witness_label"].startswith("{")

    with pytest.raises(ValueError, match="fixes"):
        trisphom.quotient(trisphom.order_complex(pi5), action)


def test_homology_of_the_subset_quotient():
    l5 = trisphom.subset_lattice(5)
    action = trisphom.Action(trisphom.cyclic_group(5), l5)
    quot = trisphom.quotient(trisphom.order_complex(l5), action)

    h = trisphom.homology(quot, "Z,Q,F5")
    assert h["Z"][0] == {"free_rank": 1, "torsion": []}
    assert h["Z"][1] == {"free_rank": 0, "torsion": [5]}
    assert h["Z"][2] == {"free_rank": 0, "torsion": []}
    assert h["Z"][3] == {"free_rank": 1, "torsion": []}
    assert h["Q"] == [1, 0, 0, 1]
    assert h["F5"] == [1, 1, 1, 1]


def test_homology_of_the_partition_quotient():
    pi5 = trisphom.partition_lattice(5)
    action = trisphom.Action(trisphom.cyclic_group(5), pi5)
    quot = trisphom.quotient(trisphom.order_complex(pi5), action)

    h = trisphom.homology(quot)  # coeffs defaults to "Z"
    assert h["Z"][1] == {"free_rank": 0, "torsion": [5]}
    assert h["Z"][2] == {"free_rank": 4, "torsion": []}


def test_betti_prediction():
    assert trisphom.predict_quotient_betti(24, 2, 5) == [1, 0, 4]
    assert trisphom.predict_quotient_betti(1, 3, 5) == [1, 0, 0, 1]
    with pytest.raises(ValueError):
        trisphom.predict_quotient_betti(3, 2, 5)


def test_verify_paper_suite():
    report = trisphom.verify_paper(5)
    assert report["p"] == 5
    assert report["complete"] is True
    assert report["all_pass"] is True
    assert len(report["verdicts"]) == 9
    claim_ids = [v["claim"] for v in report["verdicts"]]
    assert claim_ids == sorted(claim_ids)
    assert "eq1" in claim_ids and "wedge-obstruction" in claim_ids
    assert len(report["observations"]) == 4

    with pytest.raises(ValueError):
        trisphom.verify_paper(4)


def test_verify_paper_with_non_free_group():
    report = trisphom.verify_paper(5, group="(2 3 4 5)")
    assert report["complete"] is True
    assert report["all_pass"] is False
    failing = [v for v in report["verdicts"] if not v["pass"]]
    assert {v["claim"] for v in failing} == {
        "lemma-free-Lp",
        "lemma-free-Pip",
    }
