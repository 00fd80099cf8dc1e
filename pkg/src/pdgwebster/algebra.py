"""Elements of NH_n, the cyclotomic Webster algebra W_n^s and the deformed Webster algebra D(s, n).

An element is a finite linear combination of layered diagrams.  A diagram is a
bottom sequence plus a tuple of elementary layers read bottom to top; a layer
is ``(kind, pos, d)`` with kind one of X (black dot), E (red dot E(d)) or PSI
(crossing of strands pos, pos+1).  Positions are 1-based.

Products stack diagrams: in ``a * b`` the diagram b is the lower one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .modp import PrimeConfig
from .seqcore import (
    BLACK,
    RedSpec,
    StrandSequence,
    as_spec,
    enumerate_entries,
    format_entries,
    parse_entries,
)

X, E, PSI = 0, 1, 2
KIND_NAMES = {X: "x", E: "E", PSI: "psi"}

NH, D, W = "NH", "D", "W"


class FlavorMismatch(ValueError):
    """Raised when elements of different algebras are combined."""


class Mixed:
    """Degree marker for inhomogeneous elements."""

    def __repr__(self):
        return "MIXED"


MIXED = Mixed()


def xdot(pos):
    return (X, pos, 0)


def edot(pos, d):
    return (E, pos, d)


def crossing(pos):
    return (PSI, pos, 0)


def layer_str(layer) -> str:
    kind, pos, d = layer
    if kind == E:
        return f"E({d})@{pos}"
    return f"{KIND_NAMES[kind]}@{pos}"


def parse_layer(text: str):
    text = text.strip()
    head, _, pos = text.partition("@")
    pos = int(pos)
    if head == "x":
        return xdot(pos)
    if head == "psi":
        return crossing(pos)
    if head.startswith("E(") and head.endswith(")"):
        return edot(pos, int(head[2:-1]))
    raise ValueError(f"bad layer {text!r}")


def _independent(a, b) -> bool:
    if a[0] != PSI and b[0] != PSI:
        return True
    if a[0] == PSI and b[0] == PSI:
        return abs(a[1] - b[1]) >= 2
    c, dot = (a, b) if a[0] == PSI else (b, a)
    return dot[1] not in (c[1], c[1] + 1)


def _layer_key(layer):
    # dots sink below crossings whenever they commute past them
    return (layer[0] == PSI, layer[1], layer[0], layer[2])


@lru_cache(maxsize=200_000)
def preform(layers: tuple) -> tuple:
    """Lexicographic normal form of the layer word modulo free commutations.

    Two layers commute freely when both are dots, when a dot is off the
    strands of a crossing, or when two crossings are at distance >= 2.  At
    each height the smallest available layer (by _layer_key) is emitted.
    """
    rest = list(layers)
    out = []
    while rest:
        best = None
        for i, lay in enumerate(rest):
            if all(_independent(lay, rest[k]) for k in range(i)):
                if best is None or _layer_key(lay) < _layer_key(rest[best]):
                    best = i
        out.append(rest.pop(best))
    return tuple(out)


@dataclass(frozen=True)
class Flavor:
    kind: str
    spec: RedSpec
    n: int

    def __post_init__(self):
        if self.kind not in (NH, D, W):
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        object.__setattr__(self, "spec", as_spec(self.spec))
        if self.kind == NH and self.spec.m:
            raise ValueError("the nilHecke algebra has no red strands")

    def describe(self):
        if self.kind == NH:
            return f"NH_{self.n}"
        name = "D" if self.kind == D else "W"
        return f"{name}(s={self.spec}, n={self.n})"


@dataclass(frozen=True)
class Monomial:
    """A layered diagram with its top sequence and degree."""

    bottom: tuple
    layers: tuple
    top: tuple
    degree: int


class Algebra:
    """One of NH_n, W_n^s, D(s, n) over F_p; constructs and multiplies elements."""

    def __init__(self, kind: str, s=(), n: int = 0, p: int = 2):
        self.flavor = Flavor(kind, as_spec(s), n)
        self.prime = PrimeConfig(p)
        self.p = p
        self.kind = kind
        self.spec = self.flavor.spec
        self.labels = self.spec.labels
        self.n = n
        self.m = self.spec.m
        self.strands = self.m + n
        self.sequences = enumerate_entries(self.m, n)
        self._valid_cache = {}
        self._engine = None

    # identity and comparison of algebras
    def _key(self):
        return (self.kind, self.labels, self.n, self.p)

    def __eq__(self, other):
        return isinstance(other, Algebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Algebra({self.flavor.describe()}, p={self.p})"

    @property
    def cyclotomic(self) -> bool:
        return self.kind == W

    @property
    def has_red_dots(self) -> bool:
        return self.kind == D

    def label(self, ordinal: int) -> int:
        return self.labels[ordinal - 1]

    def seq(self, value) -> tuple:
        """Coerce a textual / StrandSequence / raw tuple sequence to raw entries."""
        if isinstance(value, StrandSequence):
            if value.spec != self.spec:
                raise FlavorMismatch(f"sequence {value} does not belong to {self.flavor.describe()}")
            entries = value.entries
        elif isinstance(value, str):
            entries = parse_entries(value, self.spec)
        else:
            entries = tuple(value)
            StrandSequence(entries, self.spec)
        if len(entries) != self.strands or sum(1 for k in entries if k == BLACK) != self.n:
            raise ValueError(f"sequence {entries} is not in Seq({self.spec}, {self.n})")
        return entries

    def seq_str(self, entries) -> str:
        return format_entries(entries, self.spec)

    # validity / running sequences
    def walk(self, bottom: tuple, layers: tuple):
        """Top sequence of a layered word, or None if the word is zero by a local relation."""
        key = (bottom, layers)
        cached = self._valid_cache.get(key, False)
        if cached is not False:
            return cached
        out = self._walk(bottom, layers)
        if len(self._valid_cache) > 500_000:
            self._valid_cache.clear()
        self._valid_cache[key] = out
        return out

    def _walk(self, bottom, layers):
        cur = list(bottom)
        if self.cyclotomic and cur and cur[0] == BLACK:
            return None
        for kind, pos, d in layers:
            if not 1 <= pos <= self.strands:
                return None
            here = cur[pos - 1]
            if kind == X:
                if here != BLACK:
                    return None
            elif kind == E:
                if not self.has_red_dots or here == BLACK:
                    return None
                if not 1 <= d <= self.label(here):
                    return None
            else:
                if pos >= self.strands:
                    return None
                other = cur[pos]
                if here != BLACK and other != BLACK:
                    return None
                cur[pos - 1], cur[pos] = other, here
                if self.cyclotomic and cur[0] == BLACK:
                    return None
        return tuple(cur)

    def heights(self, bottom, layers):
        """Running sequence below each layer (list of len(layers) tuples)."""
        cur = list(bottom)
        out = []
        for kind, pos, d in layers:
            out.append(tuple(cur))
            if kind == PSI:
                cur[pos - 1], cur[pos] = cur[pos], cur[pos - 1]
        return out

    def layer_degree(self, layer, below: tuple) -> int:
        kind, pos, d = layer
        if kind == X:
            return 2
        if kind == E:
            return 2 * d
        a, b = below[pos - 1], below[pos]
        if a == BLACK and b == BLACK:
            return -2
        return self.label(a if a != BLACK else b)

    def word_degree(self, bottom, layers) -> int:
        return sum(self.layer_degree(l, h) for l, h in zip(layers, self.heights(bottom, layers)))

    def monomial(self, bottom, layers) -> Monomial:
        top = self.walk(bottom, layers)
        if top is None:
            raise ValueError("zero diagram")
        return Monomial(bottom, layers, top, self.word_degree(bottom, layers))

    # element constructors
    def element(self, terms=None) -> "Element":
        return Element(self, terms or {})

    def zero(self) -> "Element":
        return Element(self, {})

    def word(self, bottom, layers=(), coeff: int = 1) -> "Element":
        """The single diagram with the given bottom and layers (zero if invalid)."""
        bottom = self.seq(bottom)
        layers = tuple(l for l in layers if not (l[0] == E and l[2] == 0))
        if self.walk(bottom, layers) is None:
            return self.zero()
        return Element(self, {(bottom, preform(layers)): coeff % self.p})

    def e(self, sequence) -> "Element":
        return self.word(sequence, ())

    def one(self) -> "Element":
        return Element(self, {(q, ()): 1 for q in self.sequences if self.walk(q, ()) is not None})

    def _generator(self, layer, sequence):
        if sequence is not None:
            return self.word(sequence, (layer,))
        out = {}
        for q in self.sequences:
            if self.walk(q, (layer,)) is not None:
                out[(q, (layer,))] = 1
        return Element(self, out)

    def x(self, j, sequence=None) -> "Element":
        return self._generator(xdot(j), sequence)

    def E(self, d, j, sequence=None) -> "Element":
        if d == 0:
            return self.one() if sequence is None else self.e(sequence)
        return self._generator(edot(j, d), sequence)

    def psi(self, j, sequence=None) -> "Element":
        return self._generator(crossing(j), sequence)

    def generator(self, layer, sequence) -> "Element":
        return self.word(sequence, (layer,))

    def generators(self):
        """All (layer, bottom) generator instances that are nonzero."""
        out = []
        for q in self.sequences:
            for pos in range(1, self.strands + 1):
                if q[pos - 1] == BLACK:
                    lay = [xdot(pos)]
                elif self.has_red_dots:
                    lay = [edot(pos, d) for d in range(1, self.label(q[pos - 1]) + 1)]
                else:
                    lay = []
                if pos < self.strands:
                    lay.append(crossing(pos))
                for l in lay:
                    if self.walk(q, (l,)) is not None:
                        out.append((l, q))
        return out

    # serialization
    def to_json_obj(self, el: "Element") -> dict:
        return {
            "flavor": {"kind": self.kind, "s": list(self.labels), "n": self.n},
            "p": self.p,
            "terms": [
                {
                    "bottom": self.seq_str(bottom),
                    "layers": [layer_str(l) for l in layers],
                    "coeff": c,
                }
                for (bottom, layers), c in sorted(el.terms.items())
            ],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "Element":
        fl = obj["flavor"]
        alg = cls(fl["kind"], tuple(fl["s"]), fl["n"], obj["p"])
        out = alg.zero()
        for t in obj["terms"]:
            out = out + alg.word(t["bottom"], tuple(parse_layer(l) for l in t["layers"]), t["coeff"])
        return out

    @property
    def engine(self):
        if self._engine is None:
            from .rewrite import RewriteEngine

            self._engine = RewriteEngine(self)
        return self._engine


class Element:
    """A finite F_p-linear combination of layered diagrams.

    ``==`` compares the stored layered forms; equality in the algebra is
    decided by :func:`pdgwebster.rewrite.reduce` or the linear-algebra oracle.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Algebra, terms: dict):
        p = algebra.p
        self.algebra = algebra
        self.terms = {k: c % p for k, c in terms.items() if c % p}

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise FlavorMismatch(
                f"{self.algebra!r} and {other.algebra!r} are different algebras"
            )

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Element(self.algebra, out)

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return Element(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def scale(self, c: int) -> "Element":
        return Element(self.algebra, {k: v * int(c) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        A = self.algebra
        by_top = {}
        for (bottom, layers), c in other.terms.items():
            by_top.setdefault(A.walk(bottom, layers), []).append((bottom, layers, c))
        out = {}
        p = A.p
        for (bottom, layers), c in self.terms.items():
            for b2, l2, c2 in by_top.get(bottom, ()):
                key = (b2, preform(l2 + layers))
                out[key] = (out.get(key, 0) + c * c2) % p
        return Element(A, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def monomials(self):
        A = self.algebra
        return [(A.monomial(b, l), c) for (b, l), c in sorted(self.terms.items())]

    def degree(self):
        """Common degree, MIXED for inhomogeneous elements, None for zero."""
        A = self.algebra
        degs = {A.word_degree(b, l) for (b, l) in self.terms}
        if not degs:
            return None
        return degs.pop() if len(degs) == 1 else MIXED

    def is_homogeneous(self) -> bool:
        return self.degree() is not MIXED

    def homogeneous_components(self) -> dict:
        A = self.algebra
        out = {}
        for (b, l), c in self.terms.items():
            out.setdefault(A.word_degree(b, l), {})[(b, l)] = c
        return {d: Element(A, t) for d, t in out.items()}

    def blocks(self) -> set:
        A = self.algebra
        return {(b, A.walk(b, l)) for (b, l) in self.terms}

    def max_layers(self) -> int:
        return max((len(l) for (_, l) in self.terms), default=0)

    def to_json(self) -> str:
        return json.dumps(self.algebra.to_json_obj(self), sort_keys=True)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{self.algebra.flavor.describe()} p={self.algebra.p}: {format_element(self)}>"


def signed(c: int, p: int) -> int:
    return c - p if c > p // 2 and p > 2 else c


def format_term(algebra: Algebra, bottom, layers) -> str:
    parts = [layer_str(l) for l in reversed(layers)]
    parts.append(f"e({algebra.seq_str(bottom)})")
    return " ".join(parts)


def format_element(el: Element) -> str:
    """Text form in the expression grammar: layers top to bottom, then the bottom idempotent."""
    if not el.terms:
        return "0"
    A = el.algebra
    out = []
    for (bottom, layers), c in sorted(el.terms.items()):
        c = signed(c, A.p)
        body = format_term(A, bottom, layers)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        text = body if mag == 1 else f"{mag} {body}"
        if out:
            out.append(f"{sign} {text}")
        else:
            out.append(text if sign == "+" else f"-{text}")
    return " ".join(out)
