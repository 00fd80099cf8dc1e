"""The divided-difference action of NH_n on F_p[t_1..t_n], used as a cross-check oracle."""

from __future__ import annotations

from .algebra import NH, PSI, X, Element
from .polyoracle import Polynomial, divided_difference, monomials_up_to, multiply_by_variable


def act(a: Element, f: Polynomial) -> Polynomial:
    """Apply a nilHecke element to f: x_i multiplies by t_i, psi_i is the divided difference.

    The bottom layer of a diagram acts first.
    """
    if a.algebra.kind != NH:
        raise ValueError("the polynomial representation is defined for the nilHecke algebra")
    out = Polynomial.zero(f.n, f.p)
    for (_, layers), c in a.terms.items():
        g = f
        for kind, pos, _ in layers:
            g = multiply_by_variable(g, pos) if kind == X else divided_difference(g, pos)
            if g.is_zero():
                break
        out = out + g * c
    return out


def same_operator(a: Element, b: Element, max_degree: int = 6) -> bool:
    """Whether a and b act identically on every monomial of degree <= max_degree (deg t_i = 2)."""
    n, p = a.algebra.n, a.algebra.p
    for exps in monomials_up_to(n, max_degree // 2):
        f = Polynomial(n, p, {exps: 1})
        if act(a, f) != act(b, f):
            return False
    return True
