"""The inclusions Phi_{j,a}, the quotient D(s, n) -> W_n^s, and the splitter bimodules."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .algebra import D, E, PSI, W, X, Algebra, Element, FlavorMismatch, crossing, edot, xdot
from .derivation import DerivationTable
from .rewrite import PROVEN, prove_zero
from .seqcore import (
    BLACK,
    adjacent_pair_idempotents,
    format_entries,
    is_adjacent_pair,
    merge_spec,
    red_position,
    split_entries,
    split_spec,
)


class SplitMap:
    """Phi_{j,a}: D(s, n) -> D(phi_{j,a}(s), n), splitting red strand j into (s_j - a, a)."""

    def __init__(self, source: Algebra, j: int, a: int):
        if source.kind != D:
            raise FlavorMismatch("the split map is defined on deformed Webster algebras")
        self.source = source
        self.j = j
        self.a = a
        spec = split_spec(source.spec, j, a)
        self.target = Algebra(D, spec.labels, source.n, source.p)

    def __repr__(self):
        return f"SplitMap(j={self.j}, a={self.a}, {self.source!r} -> {self.target!r})"

    def layer_image(self, layer, below):
        """Image of one generator on the source sequence `below`: [(coeff, target layers)]."""
        kind, l, d = layer
        split = red_position(below, self.j)
        if kind == X:
            return [(1, (xdot(l if l < split else l + 1),))]
        if kind == E:
            if l < split:
                return [(1, (edot(l, d),))]
            if l > split:
                return [(1, (edot(l + 1, d),))]
            out = []
            for d1 in range(d + 1):
                d2 = d - d1
                lay = ((edot(l, d1),) if d1 else ()) + ((edot(l + 1, d2),) if d2 else ())
                out.append((1, lay))
            return out
        if l < split - 1:
            return [(1, (crossing(l),))]
        if l > split:
            return [(1, (crossing(l + 1),))]
        if l == split - 1:
            # psi_{l+1} psi_l: the black strand crosses both halves, psi_l first
            return [(1, (crossing(l), crossing(l + 1)))]
        return [(1, (crossing(l + 1), crossing(l)))]

    def apply(self, el: Element) -> Element:
        if el.algebra != self.source:
            raise FlavorMismatch(f"{el.algebra!r} is not the source {self.source!r}")
        T = self.target
        out = T.zero()
        for (bottom, layers), c in el.terms.items():
            partial = [(c, ())]
            for lay, below in zip(layers, self.source.heights(bottom, layers)):
                img = self.layer_image(lay, below)
                partial = [(c1 * c2, l1 + l2) for c1, l1 in partial for c2, l2 in img]
            start = split_entries(bottom, self.j)
            for coeff, lay in partial:
                out = out + T.word(start, lay, coeff)
        return out

    __call__ = apply


def split_apply(phi: SplitMap, a: Element) -> Element:
    return phi.apply(a)


def merged_source(algebra: Algebra, j: int) -> Algebra:
    """D(s^j, n), the source of the map Phi_{j, s_{j+1}} landing in `algebra`."""
    merged = merge_spec(algebra.spec, j)
    return Algebra(D, merged.labels, algebra.n, algebra.p)


class QuotientMap:
    """q: D(s, n) -> W_n^s, killing red dots and idempotents with a leftmost black strand."""

    def __init__(self, source: Algebra):
        if source.kind != D:
            raise FlavorMismatch("the quotient map is defined on deformed Webster algebras")
        self.source = source
        self.target = Algebra(W, source.labels, source.n, source.p)

    def apply(self, el: Element) -> Element:
        if el.algebra != self.source:
            raise FlavorMismatch(f"{el.algebra!r} is not the source {self.source!r}")
        T = self.target
        out = {}
        for (bottom, layers), c in el.terms.items():
            if any(l[0] == E for l in layers):
                continue
            if T.walk(bottom, layers) is None:
                continue
            out[(bottom, layers)] = c
        return Element(T, out)

    __call__ = apply


def quotient_apply(q: QuotientMap, a: Element) -> Element:
    return q.apply(a)


def quotient_intertwines(algebra: Algebra, budget: int = 0) -> list:
    """Per generator g of D(s, n): q(d_D g) = d_W q(g), and d_D keeps the ideal generators in I."""
    q = QuotientMap(algebra)
    dD = DerivationTable(algebra)
    dW = DerivationTable(q.target)
    rows = []

    def row(ident, seq, status):
        return {
            "id": ident,
            "sequence": format_entries(seq, algebra.spec),
            "p": algebra.p,
            "status": status,
            "trace_length": 0,
        }

    from .algebra import layer_str

    for layer, seq in algebra.generators():
        g = algebra.generator(layer, seq)
        diff = q(dD(g)) - dW(q(g))
        rows.append(row(f"intertwine:{layer_str(layer)}", seq, prove_zero(diff, budget)))
        if layer[0] == E:
            rows.append(row(f"ideal:{layer_str(layer)}", seq, prove_zero(q(dD(g)), budget)))
    for seq in algebra.sequences:
        if seq[0] == BLACK:
            e = algebra.e(seq)
            rows.append(row("ideal:e", seq, prove_zero(q(dD(e)), budget)))
    return rows


# -- splitter bimodules

UP, DOWN = "up", "down"


class SplitterBimodule:
    """The bimodules triangle^j(s) (side "up") and nabla^j(s) (side "down").

    Both are stored as blocks of D(s, n).  For "up" the elements have their
    top sequence in Seq^j(s, n); D(s^j, n) acts on top through Phi_{j, s_{j+1}}
    and D(s, n) acts below by multiplication.  "down" is the mirror image.
    """

    def __init__(self, side: str, s, n: int, j: int, p: int):
        if side not in (UP, DOWN):
            raise ValueError("side must be 'up' or 'down'")
        self.side = side
        self.j = j
        self.big = Algebra(D, s, n, p)
        self.small = merged_source(self.big, j)
        self.phi = SplitMap(self.small, j, self.big.label(j + 1))
        assert self.phi.target == self.big
        self.shift = -self.big.label(j) * self.big.label(j + 1) if side == UP else 0
        self.derivation = DerivationTable(self.big)
        self.block = [sq.entries for sq in adjacent_pair_idempotents(self.big.spec, n, j)]

    def __repr__(self):
        return f"SplitterBimodule({self.side}, j={self.j}, {self.big!r})"

    def _in_block(self, bottom, layers) -> bool:
        if self.side == UP:
            return is_adjacent_pair(self.big.walk(bottom, layers), self.j)
        return is_adjacent_pair(bottom, self.j)

    def restrict(self, el: Element) -> "BimoduleElement":
        """Project an element of D(s, n) onto the bimodule block."""
        if el.algebra != self.big:
            raise FlavorMismatch("bimodule elements live in D(s, n)")
        terms = {k: c for k, c in el.terms.items() if self._in_block(*k)}
        return BimoduleElement(self, Element(self.big, terms))

    def element(self, el: Element) -> "BimoduleElement":
        m = self.restrict(el)
        if len(m.element.terms) != len(el.terms):
            raise ValueError("element does not lie in the bimodule block")
        return m

    def generators(self) -> list:
        """The idempotents e(i), i in Seq^j, which generate the bimodule."""
        return [self.element(self.big.e(q)) for q in self.block]

    def act(self, outer: Element, m: "BimoduleElement", inner: Element) -> "BimoduleElement":
        """outer . m . inner, with the merged algebra acting through Phi on its side."""
        if m.module is not self:
            raise FlavorMismatch("element belongs to another bimodule")
        if self.side == UP:
            if outer.algebra != self.small or inner.algebra != self.big:
                raise FlavorMismatch("triangle: outer in D(s^j, n), inner in D(s, n)")
            out = self.phi(outer) * m.element * inner
        else:
            if outer.algebra != self.big or inner.algebra != self.small:
                raise FlavorMismatch("nabla: outer in D(s, n), inner in D(s^j, n)")
            out = outer * m.element * self.phi(inner)
        return self.restrict(out)

    def deriv(self, m: "BimoduleElement") -> "BimoduleElement":
        return BimoduleElement(self, self.derivation(m.element))


@dataclass(frozen=True)
class BimoduleElement:
    module: SplitterBimodule
    element: Element

    def __add__(self, other):
        return BimoduleElement(self.module, self.element + other.element)

    def __sub__(self, other):
        return BimoduleElement(self.module, self.element - other.element)

    def degree(self):
        d = self.element.degree()
        return d + self.module.shift if isinstance(d, int) else d

    def is_zero(self) -> bool:
        return prove_zero(self.element) == PROVEN

    def to_json(self) -> str:
        return json.dumps(
            {
                "side": self.module.side,
                "j": self.module.j,
                "shift": self.module.shift,
                "element": self.module.big.to_json_obj(self.element),
            },
            sort_keys=True,
        )


def bimodule_act(bm: SplitterBimodule, outer: Element, m: BimoduleElement, inner: Element):
    return bm.act(outer, m, inner)


def bimodule_deriv(bm: SplitterBimodule, m: BimoduleElement) -> BimoduleElement:
    return bm.deriv(m)


def split_commutes_with_derivation(phi: SplitMap, budget: int = 0) -> list:
    """Measure Phi(d g) = d Phi(g) on every generator g of the source; report per case."""
    dS = DerivationTable(phi.source)
    dT = DerivationTable(phi.target)
    rows = []
    from .algebra import layer_str

    for layer, seq in phi.source.generators():
        g = phi.source.generator(layer, seq)
        diff = phi(dS(g)) - dT(phi(g))
        rows.append(
            {
                "id": f"commute:{layer_str(layer)}",
                "sequence": format_entries(seq, phi.source.spec),
                "p": phi.source.p,
                "status": prove_zero(diff, budget),
                "trace_length": 0,
            }
        )
    return rows


def compatibility_rows(bm: SplitterBimodule, budget: int = 0) -> list:
    """d(E(i)_j (x) 1) = d(1 (x) sum_{a+b=i} E(a)_j E(b)_{j+1}) for 1 <= i <= s_j + s_{j+1}.

    In the block model E(i) (x) 1 is Phi(E(i) e(c)) and the right side is the
    convolution of red dots in D(s, n); the identity is Phi(d E(i)) = d Phi(E(i)).
    """
    small, big = bm.small, bm.big
    dS, dB = DerivationTable(small), DerivationTable(big)
    rows = []
    total = small.label(bm.j)
    for c in small.sequences:
        ell = red_position(c, bm.j)
        split = split_entries(c, bm.j)
        for i in range(1, total + 1):
            lhs_el = small.E(i, ell, c)
            conv = big.zero()
            for a_ in range(i + 1):
                b_ = i - a_
                if a_ > big.label(bm.j) or b_ > big.label(bm.j + 1):
                    continue
                conv = conv + big.E(a_, ell) * big.E(b_, ell + 1) * big.e(split)
            image = bm.phi(lhs_el)
            # the two expansions agree before differentiating
            same = prove_zero(image - conv, budget)
            diff = bm.phi(dS(lhs_el)) - dB(conv)
            status = prove_zero(diff, budget) if same == PROVEN else same
            rows.append(
                {
                    "id": f"compatibility:E({i})",
                    "sequence": format_entries(c, small.spec),
                    "p": small.p,
                    "status": status,
                    "trace_length": 0,
                }
            )
    return rows


def bimodule_nilpotency_rows(bm: SplitterBimodule, budget: int = 0) -> list:
    """d^p vanishes on the bimodule generators and on generator translates e(i) g."""
    big = bm.big
    rows = []
    cands = [m.element for m in bm.generators()]
    for layer, seq in big.generators():
        el = bm.restrict(big.generator(layer, seq)).element
        if el.terms:
            cands.append(el)
    for el in cands:
        out = el
        for _ in range(big.p):
            out = bm.derivation(out)
        rows.append(
            {
                "id": f"bimodule-{bm.side}:{str(el)}",
                "sequence": format_entries(next(iter(el.terms))[0], big.spec),
                "p": big.p,
                "status": prove_zero(out, budget),
                "trace_length": 0,
            }
        )
    return rows
