"""Property tests for the algebraic invariants."""

import json

from hypothesis import given, settings, strategies as st

from pdgwebster import PROVEN, Algebra, prove_zero, reduce
from pdgwebster.algebra import E, crossing, edot, xdot
from pdgwebster.derivation import DerivationTable, check_leibniz_power
from pdgwebster.parser import parse

ALGEBRAS = [
    Algebra("NH", (), 3, 3),
    Algebra("D", (2,), 2, 3),
    Algebra("D", (1, 1), 1, 2),
    Algebra("D", (1,), 2, 5),
    Algebra("W", (2,), 2, 3),
]


def layers_for(A):
    out = [crossing(j) for j in range(1, A.strands)] + [xdot(j) for j in range(1, A.strands + 1)]
    if A.has_red_dots:
        top = max(A.labels)
        out += [edot(j, d) for j in range(1, A.strands + 1) for d in range(1, top + 1)]
    return out


@st.composite
def words(draw, A, max_layers=4):
    """A nonzero diagram built one valid layer at a time."""
    bottom = draw(st.sampled_from([q for q in A.sequences if A.walk(q, ()) is not None]))
    layers = ()
    for _ in range(draw(st.integers(0, max_layers))):
        options = [l for l in layers_for(A) if A.walk(bottom, layers + (l,)) is not None]
        if not options:
            break
        layers += (draw(st.sampled_from(options)),)
    return A.word(bottom, layers)


@st.composite
def elements(draw, A, max_terms=3, max_layers=4):
    el = A.zero()
    for _ in range(draw(st.integers(1, max_terms))):
        el = el + draw(words(A, max_layers)).scale(draw(st.integers(1, A.p - 1)))
    return el


algebras = st.sampled_from(ALGEBRAS)
SETTINGS = settings(max_examples=40, deadline=None)


@SETTINGS
@given(st.data())
def test_associativity(data):
    A = data.draw(algebras)
    a, b, c = (data.draw(elements(A)) for _ in range(3))
    assert prove_zero((a * b) * c - a * (b * c)) == PROVEN


@SETTINGS
@given(st.data())
def test_unit_and_distributivity(data):
    A = data.draw(algebras)
    a, b, c = (data.draw(elements(A)) for _ in range(3))
    assert A.one() * a == a == a * A.one()
    assert prove_zero(a * (b + c) - a * b - a * c) == PROVEN


@SETTINGS
@given(st.data())
def test_leibniz(data):
    A = data.draw(algebras)
    T = DerivationTable(A)
    a, b = data.draw(elements(A)), data.draw(elements(A))
    assert prove_zero(T(a * b) - T(a) * b - a * T(b)) == PROVEN
    assert check_leibniz_power(T, a, b)


@SETTINGS
@given(st.data())
def test_derivation_is_p_nilpotent_and_raises_degree(data):
    A = data.draw(algebras)
    T = DerivationTable(A)
    a = data.draw(elements(A, max_terms=1, max_layers=3))
    b = a
    for _ in range(A.p):
        b = T(b)
    assert prove_zero(b) == PROVEN
    da = T(a)
    if isinstance(a.degree(), int) and not da.is_zero():
        assert da.degree() == a.degree() + 2


@SETTINGS
@given(st.data())
def test_reduce_keeps_degree_blocks_and_value(data):
    A = data.draw(algebras)
    a = data.draw(elements(A))
    red = reduce(a).reduced
    assert set(red.homogeneous_components()) <= set(a.homogeneous_components())
    assert red.blocks() <= a.blocks()
    assert prove_zero(a - red) == PROVEN
    assert reduce(red).reduced == red


@SETTINGS
@given(st.data())
def test_cache_consistency(data):
    A = data.draw(algebras)
    a = data.draw(elements(A))
    fresh = Algebra(A.kind, A.labels, A.n, A.p)
    assert str(reduce(a).reduced) == str(reduce(fresh.element(dict(a.terms))).reduced)
    assert reduce(a).reduced == reduce(a).reduced


@SETTINGS
@given(st.data())
def test_text_and_json_round_trip(data):
    A = data.draw(algebras)
    a = data.draw(elements(A))
    assert parse(str(a), A) == a
    assert Algebra.from_json_obj(json.loads(a.to_json())) == a
