from pdgwebster import Algebra, reduce
from pdgwebster.derivation import (
    DerivationTable,
    all_proven,
    check_leibniz_power,
    check_p_nilpotent_generators,
    check_relation_preservation,
    derive,
    iterate,
)
from pdgwebster.parser import parse


def test_nilhecke_derivation_frozen():
    A = Algebra("NH", (), 2, 3)
    T = DerivationTable(A)
    assert T(A.x(1)) == A.x(1) * A.x(1)
    psi = A.psi(1)
    assert T(psi) == (A.x(1) * psi).scale(-1) - psi * A.x(2)


def test_idempotents_are_constants():
    A = Algebra("D", (1, 2), 1, 3)
    T = DerivationTable(A)
    for q in A.sequences:
        assert T(A.e(q)).is_zero()


def test_second_derivative_red_strand_frozen():
    A = Algebra("D", (2,), 2, 3)
    got = reduce(derive(parse("psi@1 e(b,2,b)", A), 2)).reduced
    assert str(got) == "-psi@1 E(1)@2 E(1)@2 e(b,2,b) + psi@1 E(2)@2 e(b,2,b)"


def test_checks_pass_on_small_grid():
    for kind, s in (("NH", ()), ("D", (2,)), ("D", (1, 1)), ("W", (2,))):
        for p in (2, 3):
            T = DerivationTable(Algebra(kind, s, 2, p))
            assert all_proven(check_relation_preservation(T))
            assert all_proven(check_p_nilpotent_generators(T))


class DoubledDotTable(DerivationTable):
    def image(self, layer, below):
        out = super().image(layer, below)
        return [(2 * c, rep) for c, rep in out] if layer[0] == 0 else out


def test_corrupted_table_is_detected():
    T = DoubledDotTable(Algebra("D", (1,), 1, 3))
    rows = check_relation_preservation(T) + check_p_nilpotent_generators(T)
    assert not all_proven(rows)


def test_leibniz_power():
    A = Algebra("D", (1,), 2, 3)
    T = DerivationTable(A)
    a = parse("psi@1 x@1 e(b,b,1)", A)
    b = parse("x@1 psi@2 e(b,1,b)", A)
    assert check_leibniz_power(T, a, b)
    assert iterate(T, a, 0) == a
