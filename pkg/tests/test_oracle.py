import pytest

from pdgwebster import Algebra
from pdgwebster.linalg import RowSpace, rank_mod_p
from pdgwebster.oracle import ResourceError, oracle_equal
from pdgwebster.parser import parse


def test_rowspace_basics():
    rs = RowSpace(3)
    assert rs.add({0: 1, 1: 2})
    assert not rs.add({0: 2, 1: 1})
    assert rs.contains({0: 2, 1: 1})
    assert not rs.contains({1: 1})
    assert rs.rank == 1
    assert rank_mod_p([{0: 1, 1: 1}, {0: 1, 1: 2}, {0: 2}], 3) == 2


def test_oracle_relations():
    A = Algebra("D", (2,), 1, 3)
    lhs = parse("psi@1 psi@1 e(b,2)", A)
    rhs = parse("x@1 x@1 e(b,2) - E(1)@2 x@1 e(b,2) + E(2)@2 e(b,2)", A)
    assert oracle_equal(lhs, rhs)
    assert not oracle_equal(lhs, A.zero())


def test_oracle_nilhecke_braid():
    A = Algebra("NH", (), 3, 3)
    assert oracle_equal(parse("psi@1 psi@2 psi@1", A), parse("psi@2 psi@1 psi@2", A))
    assert not oracle_equal(parse("x@1 psi@1", A), parse("psi@1 x@1", A))


def test_oracle_webster_cyclotomic():
    W = Algebra("W", (1,), 1, 3)
    assert oracle_equal(W.x(2) * W.e("1,b"), W.zero())
    assert not oracle_equal(W.e("1,b"), W.zero())


def test_oracle_caps():
    A = Algebra("NH", (), 2, 7)
    with pytest.raises(ResourceError):
        oracle_equal(A.x(1), A.x(1))
    B = Algebra("NH", (), 5, 3)
    with pytest.raises(ResourceError):
        oracle_equal(B.x(1), B.x(1))
    C = Algebra("NH", (), 1, 3)
    big = C.x(1)
    for _ in range(7):
        big = C.x(1) * big
    with pytest.raises(ResourceError):
        oracle_equal(big, big)
    assert oracle_equal(big, big, caps={"degree": 20})
