import os

import pytest

from pdgwebster import PROVEN, UNKNOWN, Algebra, prove_zero, reduce
from pdgwebster.algebra import crossing, xdot
from pdgwebster.parser import parse
from pdgwebster.rewrite import CANONICAL, NONCANONICAL, arrangement, canonical_word, measure


def test_debug_measure_enabled():
    assert os.environ.get("PDGWEBSTER_DEBUG")


def test_psi_square_nilhecke():
    A = Algebra("NH", (), 2, 3)
    assert reduce(parse("psi@1 psi@1", A)).reduced.is_zero()


def test_psi_square_red_black_frozen():
    A = Algebra("D", (2,), 1, 3)
    rep = reduce(parse("psi@1 psi@1 e(b,2)", A))
    assert str(rep.reduced) == "x@1 x@1 e(b,2) - E(1)@2 x@1 e(b,2) + E(2)@2 e(b,2)"
    assert rep.flag == CANONICAL
    assert rep.trace_length > 0


def test_dot_slide_nilhecke():
    A = Algebra("NH", (), 2, 3)
    got = reduce(parse("x@2 psi@1", A)).reduced
    assert str(got) == "-e(b,b) + psi@1 x@1 e(b,b)"


def test_nilhecke_braid():
    A = Algebra("NH", (), 3, 5)
    lhs = parse("psi@1 psi@2 psi@1", A)
    rhs = parse("psi@2 psi@1 psi@2", A)
    assert reduce(lhs - rhs).reduced.is_zero()


def test_normal_form_is_idempotent():
    A = Algebra("D", (1,), 2, 3)
    el = parse("psi@2 psi@1 x@3 psi@2 psi@1 e(1,b,b)", A)
    once = reduce(el).reduced
    assert reduce(once).reduced == once


def test_trace_lines():
    A = Algebra("NH", (), 2, 3)
    rep = reduce(parse("x@2 psi@1", A), trace=True)
    assert rep.trace and all("terms=" in str(t) for t in rep.trace)


def test_canonical_word():
    assert canonical_word(arrangement((1, 2, 1), 3)) in ((1, 2, 1), (2, 1, 2))
    assert canonical_word(arrangement((2, 1, 2), 3)) == canonical_word(arrangement((1, 2, 1), 3))
    assert canonical_word(arrangement((), 3)) == ()


def test_measure_orders_crossings_first():
    assert measure((crossing(1), crossing(1)), 2) > measure((xdot(1),), 2)


def test_webster_cyclotomic_frozen():
    # x_2^s e(s, b) vanishes in W but x_2^(s-1) e(s, b) does not
    for s in (1, 2, 3):
        W = Algebra("W", (s,), 1, 3)
        el = W.e(f"{s},b")
        for _ in range(s):
            el = W.x(2) * el
        assert prove_zero(el) == PROVEN
        assert reduce(el).flag == NONCANONICAL or el.is_zero()
        less = W.e(f"{s},b")
        for _ in range(s - 1):
            less = W.x(2) * less
        assert prove_zero(less) == UNKNOWN


def test_prove_zero_on_nonzero_and_budget():
    A = Algebra("D", (1,), 1, 3)
    assert prove_zero(A.x(1, "b,1")) == UNKNOWN
    assert prove_zero(A.zero()) == PROVEN
    assert prove_zero(A.x(1, "b,1"), budget=5, seed=1) == UNKNOWN
    with pytest.raises(ValueError):
        prove_zero(A.x(1, "b,1"), budget=-1)


def test_reduce_preserves_degree_and_blocks():
    A = Algebra("D", (2,), 2, 3)
    el = parse("psi@2 psi@1 psi@1 psi@2 e(b,b,2)", A)
    red = reduce(el).reduced
    for deg, comp in red.homogeneous_components().items():
        assert deg == el.degree()
    assert red.blocks() <= el.blocks()
