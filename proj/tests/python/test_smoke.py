import pytest

negacode = pytest.importorskip("negacode")


def test_counts_match_known_values():
    assert negacode.count_selfdual(3, 2) == 4
    assert negacode.count_selfdual(3, 4) == 8
    assert negacode.count_selfdual(3, 8) == 80
    assert negacode.count_selfdual(5, 4) == 24


def test_count_rejects_non_two_power_lengths():
    with pytest.raises(Exception):
        negacode.count_selfdual(3, 7)


def test_existence_predicate():
    assert not negacode.selfdual_exists(3, 5)
    assert negacode.selfdual_exists(5, 5)
    assert negacode.selfdual_exists(3, 6)
    assert negacode.selfdual_exists(2, 3)


def test_witness_construction_and_criterion():
    w = negacode.construct_witness(3, 6)
    assert w is not None
    assert w["coeffs"] == [1, 0, 0, 1, 0, 0]
    assert w["provenance"] == "two-power-subalgebra"
    assert negacode.is_selfdual_generator(3, 6, w["coeffs"])
    assert negacode.construct_witness(3, 5) is None


def test_orbits_of_q3_n10():
    t = negacode.q_orbits(10, 3)
    assert t["ord_q"] == 4
    assert [5, 15] in t["orbits"]
    i = t["orbits"].index([5, 15])
    assert t["pairing"][i] == i


def test_mu_and_orders():
    assert negacode.mu_q(3) == 2
    assert negacode.mu_q(7) == 3
    assert negacode.mu_q(31) == 5
    assert negacode.ord_two_power(3, 4) == 4
    assert negacode.unit_order(20, 3) == 4


def test_enumerate_matches_count():
    ds = negacode.enumerate_selfdual(3, 4)
    assert len(ds) == 8
    assert all(negacode.is_selfdual_generator(3, 4, g) for g in ds)


def test_code_and_min_weight():
    code = negacode.code_from_pair(3, 2, [1, 0], [1, 1])
    assert code["dimension"] == 2
    assert code["self_dual"]
    rep = negacode.min_weight(3, 2, [1, 0], [1, 1])
    assert rep["exhaustive"]
    assert rep["min_weight"] == 3
    assert rep["relative"] == pytest.approx(0.75)


def test_entropy_endpoints():
    assert negacode.entropy(0, 1, 3) == 0.0
    assert negacode.entropy(1, 2, 2) == pytest.approx(1.0)
    with pytest.raises(Exception):
        negacode.entropy(9, 10, 2)
