import json

import pytest

from pdgwebster import MIXED, Algebra, FlavorMismatch
from pdgwebster.algebra import PSI, X, crossing, edot, layer_str, parse_layer, preform, xdot


def test_sequences_and_unit():
    A = Algebra("D", (2,), 1, 3)
    assert A.sequences == [(0, 1), (1, 0)]
    assert len(A.one().terms) == 2
    W = Algebra("W", (2,), 1, 3)
    # e(b,2) has a leftmost black strand, so it is zero in W
    assert str(W.one()) == "e(2,b)"


def test_degrees():
    A = Algebra("D", (2,), 2, 3)
    assert A.x(1, "b,2,b").degree() == 2
    assert A.E(2, 2, "b,2,b").degree() == 4
    assert A.psi(1, "b,b,2").degree() == -2
    assert A.psi(1, "b,2,b").degree() == 2
    assert A.zero().degree() is None
    assert (A.x(1, "b,2,b") + A.e("b,2,b")).degree() is MIXED


def test_cyclotomic_zeroing():
    W = Algebra("W", (2,), 1, 3)
    assert W.psi(1, "2,b").is_zero()
    assert not W.x(2, "2,b").is_zero()
    assert W.e("b,2").is_zero()


def test_walk_rejects_invalid_crossings():
    A = Algebra("D", (1, 1), 0, 3)
    assert A.walk((1, 2), (crossing(1),)) is None
    assert A.psi(1, "1,1").is_zero()


def test_product_orientation():
    # in a * b, a sits on top
    A = Algebra("D", (1,), 1, 3)
    top = A.x(2, "1,b")
    bottom = A.psi(1, "b,1")
    assert str(top * bottom) == "x@2 psi@1 e(b,1)"
    assert (bottom * top).is_zero()


def test_flavor_mismatch():
    with pytest.raises(FlavorMismatch):
        Algebra("NH", (), 2, 3).one() * Algebra("NH", (), 2, 5).one()
    with pytest.raises(FlavorMismatch):
        Algebra("D", (1,), 1, 3).one() + Algebra("W", (1,), 1, 3).one()


def test_preform_commutes_far_layers():
    assert preform((crossing(1), xdot(3))) == preform((xdot(3), crossing(1)))
    assert preform((xdot(2), xdot(1))) == preform((xdot(1), xdot(2)))
    assert preform((crossing(1), xdot(2))) != preform((xdot(2), crossing(1)))


def test_layer_text_round_trip():
    for lay in (xdot(3), edot(2, 5), crossing(1)):
        assert parse_layer(layer_str(lay)) == lay


def test_json_round_trip():
    A = Algebra("D", (2, 1), 1, 5)
    el = A.psi(1, "b,2,1").scale(3) + A.E(2, 2, "b,2,1")
    obj = json.loads(el.to_json())
    assert obj["flavor"] == {"kind": "D", "s": [2, 1], "n": 1}
    assert Algebra.from_json_obj(obj) == el


def test_blocks_and_components():
    A = Algebra("NH", (), 2, 3)
    el = A.x(1) + A.psi(1)
    comps = el.homogeneous_components()
    assert set(comps) == {2, -2}
    assert el.blocks() == {((0, 0), (0, 0))}


def test_scalars_reduce_mod_p():
    A = Algebra("NH", (), 1, 3)
    assert A.x(1).scale(3).is_zero()
    assert A.x(1).scale(4) == A.x(1)
    assert (A.x(1) - A.x(1)).is_zero()


def test_invalid_configuration():
    with pytest.raises(Exception):
        Algebra("NH", (), 2, 4)
    with pytest.raises(ValueError):
        Algebra("D", (1,), 1, 3).e("b,b")
