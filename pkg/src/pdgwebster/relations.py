"""Instances of the defining relations, as elements LHS - RHS that must vanish.

Relations are instantiated on every bottom sequence and every admissible
position.  Families that hold identically in the layered representation
(commuting dots, far commutations) are included too; they cost nothing and
make the preservation checks exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import D, Algebra, Element
from .modp import compositions
from .seqcore import BLACK


@dataclass(frozen=True)
class RelationInstance:
    name: str
    sequence: tuple
    element: Element


def _dots_on(A: Algebra, seq):
    """Dot generators available on seq: (builder, position, label) triples."""
    out = []
    for pos, v in enumerate(seq, start=1):
        if v == BLACK:
            out.append(("x", pos, 0))
        elif A.has_red_dots:
            for d in range(1, A.label(v) + 1):
                out.append(("E", pos, d))
    return out


def _dot(A: Algebra, spec):
    kind, pos, d = spec
    return A.x(pos) if kind == "x" else A.E(d, pos)


def relation_instances(A: Algebra) -> list:
    out = []
    N = A.strands
    for seq in A.sequences:
        e = A.e(seq)
        if A.cyclotomic and not e:
            continue
        name_of = lambda base: base  # noqa: E731
        add = lambda base, el: out.append(RelationInstance(name_of(base), seq, el))  # noqa: E731
        add("idempotent", e * e - e)
        dots = _dots_on(A, seq)
        # commuting dots
        for a_ in dots:
            for b_ in dots:
                if a_ < b_:
                    add("dot-commute", _dot(A, a_) * _dot(A, b_) * e - _dot(A, b_) * _dot(A, a_) * e)
        for j in range(1, N):
            psi = A.psi(j)
            c0, c1 = seq[j - 1], seq[j]
            # dots far from the crossing commute with it
            for kind, l, d in dots:
                if l in (j, j + 1):
                    continue
                lower = _dot(A, (kind, l, d))
                add("psi-dot-far", psi * lower * e - lower * psi * e)
            # red dots slide through crossings
            if A.has_red_dots:
                if c0 != BLACK and c1 == BLACK:
                    for d in range(1, A.label(c0) + 1):
                        add("psi-E-slide", psi * A.E(d, j) * e - A.E(d, j + 1) * psi * e)
                if c0 == BLACK and c1 != BLACK:
                    for d in range(1, A.label(c1) + 1):
                        add("E-psi-slide", A.E(d, j) * psi * e - psi * A.E(d, j + 1) * e)
            # far crossings commute
            for l in range(j + 2, N):
                add("psi-far", psi * A.psi(l) * e - A.psi(l) * psi * e)
            if c0 != BLACK and c1 != BLACK:
                continue
            xj, xj1 = A.x(j), A.x(j + 1)
            if c1 == BLACK:
                rhs = e if c0 == BLACK else A.zero()
                add("dot-slide-1", xj * psi * e - psi * xj1 * e - rhs)
            if c0 == BLACK:
                rhs = e if c1 == BLACK else A.zero()
                add("dot-slide-2", psi * xj * e - xj1 * psi * e - rhs)
            add("psi-square", psi * psi * e - psi_square_rhs(A, seq, j))
            if j + 1 < N:
                lhs = (psi * A.psi(j + 1) * psi - A.psi(j + 1) * psi * A.psi(j + 1)) * e
                add("braid", lhs - braid_rhs(A, seq, j))
    return out


def psi_square_rhs(A: Algebra, seq, j) -> Element:
    e = A.e(seq)
    c0, c1 = seq[j - 1], seq[j]
    if c0 == BLACK and c1 == BLACK:
        return A.zero()
    out = A.zero()
    if c0 != BLACK:
        s = A.label(c0)
        for d in range(s + 1):
            if d and A.kind != D:
                continue
            out = out + (A.E(d, j) * _power(A, j + 1, s - d) * e).scale((-1) ** d)
    else:
        s = A.label(c1)
        for d in range(s + 1):
            if d and A.kind != D:
                continue
            out = out + (_power(A, j, s - d) * A.E(d, j + 1) * e).scale((-1) ** d)
    return out


def braid_rhs(A: Algebra, seq, j) -> Element:
    e = A.e(seq)
    if not (seq[j - 1] == BLACK and seq[j + 1] == BLACK and seq[j] != BLACK):
        return A.zero()
    s = A.label(seq[j])
    out = A.zero()
    if s < 1:
        return out
    for d1, d2, d3 in compositions(s - 1, 3):
        if d3 and A.kind != D:
            continue
        term = _power(A, j, d1) * A.E(d3, j + 1) * _power(A, j + 2, d2) * e
        out = out + term.scale((-1) ** d3)
    return out


def _power(A: Algebra, j, k) -> Element:
    out = A.one()
    for _ in range(k):
        out = A.x(j) * out
    return out
