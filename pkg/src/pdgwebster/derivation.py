"""The p-derivations on NH_n, W_n^s and D(s, n), extended to elements by Leibniz.

The generator images, with the running sequence i below the generator:

    x_j                     -> x_j^2
    E(d)_j, d < label       -> E(d)_j E(1)_j - (d+1) E(d+1)_j
    E(d)_j, d = label       -> E(d)_j E(1)_j
    psi_j, (b, b)           -> -x_j psi_j - psi_j x_{j+1}
    psi_j, (red s, b)       -> s psi_j x_{j+1}
    psi_j, (b, red s)       -> psi_j E(1)_{j+1}      (zero in W)
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import E, PSI, W, X, Algebra, Element, FlavorMismatch, crossing, edot, preform, xdot
from .rewrite import PROVEN, prove_zero, reduce
from .seqcore import BLACK, format_entries


@dataclass(frozen=True)
class DerivationTable:
    """Generator rules of the derivation for one algebra."""

    algebra: Algebra

    def image(self, layer, below):
        """Image of one generator in context, as [(coeff, replacement layers bottom to top)]."""
        A = self.algebra
        kind, pos, d = layer
        if kind == X:
            return [(1, (layer, layer))]
        if kind == E:
            s = A.label(below[pos - 1])
            out = [(1, (layer, edot(pos, 1)))]
            if d < s:
                out.append((-(d + 1), (edot(pos, d + 1),)))
            return out
        a, b = below[pos - 1], below[pos]
        if a == BLACK and b == BLACK:
            return [(-1, (layer, xdot(pos))), (-1, (xdot(pos + 1), layer))]
        if a != BLACK:
            return [(A.label(a), (xdot(pos + 1), layer))]
        if A.kind == W:
            return []
        return [(1, (edot(pos + 1, 1), layer))]

    def apply(self, a: Element) -> Element:
        if a.algebra != self.algebra:
            raise FlavorMismatch("derivation table and element belong to different algebras")
        A = self.algebra
        out = {}
        p = A.p
        for (bottom, layers), c in a.terms.items():
            heights = A.heights(bottom, layers)
            for h, (lay, below) in enumerate(zip(layers, heights)):
                for coeff, rep in self.image(lay, below):
                    new = layers[:h] + rep + layers[h + 1:]
                    if A.walk(bottom, new) is None:
                        continue
                    key = (bottom, preform(new))
                    out[key] = (out.get(key, 0) + c * coeff) % p
        return Element(A, out)

    __call__ = apply


def table_for(algebra: Algebra) -> DerivationTable:
    return DerivationTable(algebra)


def apply(table: DerivationTable, a: Element) -> Element:
    return table.apply(a)


def iterate(table: DerivationTable, a: Element, k: int) -> Element:
    if k < 0:
        raise ValueError("k must be nonnegative")
    for _ in range(k):
        a = table.apply(a)
    return a


def derive(a: Element, k: int = 1) -> Element:
    """The k-th power of the algebra's own derivation applied to a."""
    return iterate(DerivationTable(a.algebra), a, k)


def _row(ident, algebra, seq, status, steps):
    return {
        "id": ident,
        "sequence": format_entries(seq, algebra.spec),
        "p": algebra.p,
        "status": status,
        "trace_length": steps,
    }


def _prove(el: Element, budget: int = 0):
    status = prove_zero(el, budget)
    return status, (reduce(el).trace_length if el.terms else 0)


def check_p_nilpotent_generators(table: DerivationTable, budget: int = 0) -> list:
    """prove_zero(d^p g) for every generator g in every color context."""
    A = table.algebra
    rows = []
    for layer, seq in A.generators():
        g = A.generator(layer, seq)
        status, steps = _prove(iterate(table, g, A.p), budget)
        rows.append(_row(f"nilpotent:{_layer_name(layer)}", A, seq, status, steps))
    return rows


def _layer_name(layer):
    from .algebra import layer_str

    return layer_str(layer)


def check_relation_preservation(table: DerivationTable, budget: int = 0) -> list:
    """prove_zero(d(LHS - RHS)) for every defining relation instance."""
    from .relations import relation_instances

    A = table.algebra
    rows = []
    for inst in relation_instances(A):
        status, steps = _prove(table.apply(inst.element), budget)
        rows.append(_row(f"relation:{inst.name}", A, inst.sequence, status, steps))
    return rows


def check_leibniz_power(table: DerivationTable, a: Element, b: Element) -> bool:
    """Whether d^p(ab) - d^p(a) b - a d^p(b) is proven zero."""
    p = table.algebra.p
    diff = iterate(table, a * b, p) - iterate(table, a, p) * b - a * iterate(table, b, p)
    return prove_zero(diff) == PROVEN


def all_proven(rows) -> bool:
    return all(r["status"] == PROVEN for r in rows)
