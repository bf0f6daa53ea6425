import pytest

import fpkz


def test_instance_derivation():
    inst = fpkz.make_instance(13, 3, [2, 2, 2, 1, 1, 1])
    assert inst.M == [8, 8, 8, 4, 4, 4]
    assert inst.r == 2
    assert not inst.ample
    assert inst.delta(1) == 23
    assert inst.delta(2) == 10


def test_invalid_instance_raises():
    with pytest.raises(fpkz.FpkzError):
        fpkz.make_instance(4, 2, [1, 1])


def test_scalar_functions():
    assert fpkz.gamma(0, 5) == 1
    assert fpkz.gamma(1, 5) == 4
    assert fpkz.binom(8, 7, 13) == 8
    assert fpkz.beta(3, 2, 5) == 3


def test_solve_and_verify_roundtrip():
    inst = fpkz.make_instance(5, 3, [1, 1])
    sol = fpkz.solve(inst, 1)
    assert sol["degree"] == 1
    coords = sol["solution"]["coords"]
    assert coords[0]["terms"] == [
        {"exp": [1, 0], "coeff": 3},
        {"exp": [0, 1], "coeff": 2},
    ]
    report = fpkz.verify(inst, sol)
    assert report["pass"] is True


def test_leading_prediction():
    inst = fpkz.make_instance(13, 3, [2, 2, 2, 1, 1, 1])
    lead = fpkz.leading(inst, 1)
    assert lead["exponents"] == [8, 8, 7, 0, 0, 0]
    assert lead["coeff"] == [0, 0, 12, 5, 5, 5]


def test_det_report():
    inst = fpkz.make_instance(5, 3, [1, 1])
    rep = fpkz.det_report(inst)
    assert rep["equal"] is True


def test_search_and_reduce():
    inst = fpkz.make_instance(5, 3, [1, 1])
    space = fpkz.search(inst, 1)
    assert space["dimension"] == 1
    red = fpkz.reduce(inst, space["basis"][0])
    assert red["reducible"] is True

    rank0 = fpkz.make_instance(3, 2, [1, 1])
    space2 = fpkz.search(rank0, 2)
    assert space2["dimension"] == 1
    red2 = fpkz.reduce(rank0, space2["basis"][0])
    assert red2["reducible"] is False


def test_initial_value():
    inst = fpkz.make_instance(5, 3, [1, 1])
    sol = fpkz.solve(inst, 1)
    # w = I^[1](x) must come back as the unit vector
    x = [0, 1]
    w = [
        sum(t["coeff"] * x[0] ** t["exp"][0] * x[1] ** t["exp"][1] for t in c["terms"]) % 5
        for c in sol["solution"]["coords"]
    ]
    assert fpkz.initial_value(inst, x, w) == [1]
