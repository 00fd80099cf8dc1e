"""Oriented rewriting toward the PBW-shaped normal form, and the zero prover.

Target shape of a normal monomial, bottom to top: the dots (x and E) in sorted
order, then the crossings forming the lexicographically smallest reduced word
of their permutation.  Rules used:

* dot slide: a dot directly above a crossing moves below it (with the unit
  correction term for black-black crossings);
* exchange: commutations and braid moves rewrite a reduced crossing word into
  its canonical word, each braid move emitting its defect polynomial;
* psi squared: a non-reduced crossing word is brought to contain an adjacent
  pair psi_j psi_j, which is replaced by its polynomial.

All rules are relations of the algebra, so reduction is sound.  In the
cyclotomic algebra the spanning set is not a basis, so prove_zero falls back
to exact linear algebra over the cyclotomic ideal (see ``_cyclotomic_zero``).
"""

from __future__ import annotations

import os
import random
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .algebra import E, PSI, X, Algebra, Element, crossing, edot, preform, xdot
from .linalg import RowSpace
from .modp import compositions
from .seqcore import BLACK

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

CANONICAL = "canonical"
NONCANONICAL = "irreducible-noncanonical"
PROVEN = "proven"
UNKNOWN = "unknown"


# -- permutations and reduced words (positions 1-based, arrangements 0-based)

def arrangement(word, size: int) -> tuple:
    """arr[pos] = original strand at pos after applying the crossings bottom to top."""
    arr = list(range(size))
    for j in word:
        arr[j - 1], arr[j] = arr[j], arr[j - 1]
    return tuple(arr)


@lru_cache(maxsize=None)
def canonical_word(arr: tuple) -> tuple:
    """Lexicographically smallest reduced word (read bottom to top) for arr."""
    where = [0] * len(arr)
    for pos, strand in enumerate(arr):
        where[strand] = pos
    for s in range(len(arr) - 1):
        if where[s] > where[s + 1]:
            swapped = tuple(s + 1 if v == s else s if v == s + 1 else v for v in arr)
            return (s + 1,) + canonical_word(swapped)
    return ()


def inversions(arr) -> int:
    return sum(1 for a in range(len(arr)) for b in range(a + 1, len(arr)) if arr[a] > arr[b])


def _bring_top(w, length, s, moves):
    """Rewrite w[:length] (reduced, s a right descent) to end with s."""
    if w[length - 1] == s:
        return
    t = w[length - 1]
    _bring_top(w, length - 1, s, moves)
    if abs(s - t) >= 2:
        w[length - 2], w[length - 1] = w[length - 1], w[length - 2]
        moves.append(("commute", length - 2))
    else:
        _bring_top(w, length - 2, t, moves)
        w[length - 3:length] = [s, t, s]
        moves.append(("braid", length - 3))


def _bring_bottom(w, start, s, moves):
    """Rewrite w[start:] (reduced, s a left descent) to begin with s."""
    if w[start] == s:
        return
    t = w[start]
    _bring_bottom(w, start + 1, s, moves)
    if abs(s - t) >= 2:
        w[start], w[start + 1] = w[start + 1], w[start]
        moves.append(("commute", start))
    else:
        _bring_bottom(w, start + 2, t, moves)
        w[start:start + 3] = [s, t, s]
        moves.append(("braid", start))


def to_canonical_moves(word, size):
    w = list(word)
    target = canonical_word(arrangement(word, size))
    moves = []
    for idx, s in enumerate(target):
        _bring_bottom(w, idx, s, moves)
    return moves


def to_top_moves(word, s):
    w = list(word)
    moves = []
    _bring_top(w, len(w), s, moves)
    return moves


# -- local relation right-hand sides, as lists of (coeff, dot layers)

def psi_square_poly(algebra: Algebra, below, j):
    a, b = below[j - 1], below[j]
    if a == BLACK and b == BLACK:
        return []
    out = []
    if a != BLACK:
        s = algebra.label(a)
        for d in range(s + 1):
            lay = ((edot(j, d),) if d else ()) + (xdot(j + 1),) * (s - d)
            out.append(((-1) ** d, lay))
    else:
        s = algebra.label(b)
        for d in range(s + 1):
            lay = (xdot(j),) * (s - d) + ((edot(j + 1, d),) if d else ())
            out.append(((-1) ** d, lay))
    return out


def braid_defect_poly(algebra: Algebra, below, j):
    """sum_{d1+d2+d3=s-1} (-1)^d3 x_j^d1 E(d3)_{j+1} x_{j+2}^d2 on (b, s, b); else nothing."""
    a, r, c = below[j - 1], below[j], below[j + 1]
    if not (a == BLACK and c == BLACK and r != BLACK):
        return []
    s = algebra.label(r)
    out = []
    if s < 1:
        return out
    for d1, d2, d3 in compositions(s - 1, 3):
        lay = (xdot(j),) * d1 + ((edot(j + 1, d3),) if d3 else ()) + (xdot(j + 2),) * d2
        out.append(((-1) ** d3, lay))
    return out


@dataclass
class TraceLine:
    rule: str
    position: int
    terms: int

    def __str__(self):
        return f"{self.rule} @{self.position} terms={self.terms}"


@dataclass
class NormalFormReport:
    input: Element
    reduced: Element
    trace_length: int
    flag: str = CANONICAL
    trace: list = field(default_factory=list)


class RewriteEngine:
    """Memoized normal forms of single layered words for one algebra."""

    def __init__(self, algebra: Algebra, cyclotomic: bool | None = None):
        self.A = algebra
        self.p = algebra.p
        self.cyclotomic = algebra.cyclotomic if cyclotomic is None else cyclotomic
        self._cache = {}
        self.steps = 0
        self.trace = None
        self.check_measure = bool(os.environ.get("PDGWEBSTER_DEBUG"))

    def _alive(self, bottom, layers) -> bool:
        if self.cyclotomic:
            return self.A.walk(bottom, layers) is not None
        return self._walk_nc(bottom, layers)

    def _walk_nc(self, bottom, layers) -> bool:
        # validity without the cyclotomic condition; used for the covering algebra
        cur = list(bottom)
        for kind, pos, d in layers:
            here = cur[pos - 1]
            if kind == X and here != BLACK:
                return False
            if kind == E and (not self.A.has_red_dots or here == BLACK
                              or not 1 <= d <= self.A.label(here)):
                return False
            if kind == PSI:
                if here != BLACK and cur[pos] != BLACK:
                    return False
                cur[pos - 1], cur[pos] = cur[pos], here
        return True

    def _log(self, rule, pos, terms):
        self.steps += 1
        if self.trace is not None:
            self.trace.append(TraceLine(rule, pos, terms))

    def normal_form(self, bottom, layers) -> dict:
        """Normal form of one word as {layers: coeff}; the bottom never changes."""
        key = (bottom, layers)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out = self._compute(bottom, layers)
        self._cache[key] = out
        return out

    def _combine(self, bottom, pieces, source=None) -> dict:
        out = {}
        p = self.p
        for coeff, layers in pieces:
            if not self._alive(bottom, layers):
                continue
            if self.check_measure and source is not None:
                assert measure(layers, self.A.strands) < measure(source, self.A.strands), (
                    f"termination measure did not decrease: {source} -> {layers}"
                )
            for nf, c in self.normal_form(bottom, layers).items():
                v = (out.get(nf, 0) + coeff * c) % p
                if v:
                    out[nf] = v
                else:
                    out.pop(nf, None)
        return out

    def _compute(self, bottom, layers) -> dict:
        A = self.A
        # 1. slide the lowest dot that sits directly above a crossing
        for i in range(1, len(layers)):
            if layers[i][0] != PSI and layers[i - 1][0] == PSI:
                return self._combine(bottom, self._dot_slide(bottom, layers, i), layers)
        k = 0
        while k < len(layers) and layers[k][0] != PSI:
            k += 1
        dots = tuple(sorted(layers[:k], key=lambda l: (l[1], l[0], l[2])))
        cross = [l[1] for l in layers[k:]]
        # 2. find the first prefix that is non-reduced or non-canonical
        size = A.strands
        arr = list(range(size))
        for t, j in enumerate(cross):
            if arr[j - 1] > arr[j]:
                return self._combine(bottom, self._psi_square(bottom, dots, cross, t), layers)
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            if canonical_word(tuple(arr)) != tuple(cross[: t + 1]):
                return self._combine(bottom, self._exchange(bottom, dots, cross, t), layers)
        return {dots + tuple(crossing(j) for j in cross): 1}

    def _dot_slide(self, bottom, layers, i):
        A = self.A
        below = A.heights(bottom, layers[: i])[i - 1]
        j = layers[i - 1][1]
        kind, l, d = layers[i]
        head, tail = layers[: i - 1], layers[i + 1:]
        if l not in (j, j + 1):
            self._log("commute-dot", i, 1)
            return [(1, head + ((kind, l, d), layers[i - 1]) + tail)]
        other = j + 1 if l == j else j
        out = [(1, head + ((kind, other, d), layers[i - 1]) + tail)]
        if kind == X and below[j - 1] == BLACK and below[j] == BLACK:
            out.append((1 if l == j else -1, head + tail))
        self._log("dot-slide", i, len(out))
        return out

    def _apply_moves(self, bottom, dots, cross, moves):
        """Replay exchange moves on the crossing word, collecting braid defects."""
        A = self.A
        cur = list(cross)
        pieces = []
        for kind, q in moves:
            if kind == "commute":
                cur[q], cur[q + 1] = cur[q + 1], cur[q]
                self._log("commute", len(dots) + q, 1)
                continue
            a, b, _ = cur[q:q + 3]
            j = min(a, b)
            below = arrangement_seq(bottom, cur[:q])
            sign = 1 if a == j else -1
            lower = dots + tuple(crossing(v) for v in cur[:q])
            upper = tuple(crossing(v) for v in cur[q + 3:])
            for c, poly in braid_defect_poly(A, below, j):
                pieces.append((sign * c, lower + poly + upper))
            cur[q:q + 3] = [b, a, b]
            self._log("braid", len(dots) + q, 1 + len(pieces))
        return cur, pieces

    def _exchange(self, bottom, dots, cross, t):
        moves = to_canonical_moves(cross[: t + 1], self.A.strands)
        cur, pieces = self._apply_moves(bottom, dots, cross, moves)
        pieces.append((1, dots + tuple(crossing(v) for v in cur)))
        return pieces

    def _psi_square(self, bottom, dots, cross, t):
        s = cross[t]
        moves = to_top_moves(cross[:t], s)
        cur, pieces = self._apply_moves(bottom, dots, cross, moves)
        below = arrangement_seq(bottom, cur[: t - 1])
        lower = dots + tuple(crossing(v) for v in cur[: t - 1])
        upper = tuple(crossing(v) for v in cur[t + 1:])
        polys = psi_square_poly(self.A, below, s)
        for c, poly in polys:
            pieces.append((c, lower + poly + upper))
        self._log("psi-square", len(dots) + t - 1, len(pieces))
        return pieces

    def reduce_terms(self, terms: dict) -> dict:
        out = {}
        p = self.p
        for (bottom, layers), c in terms.items():
            if not self._alive(bottom, layers):
                continue
            for nf, c2 in self.normal_form(bottom, layers).items():
                key = (bottom, nf)
                v = (out.get(key, 0) + c * c2) % p
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out


def measure(layers, size: int) -> tuple:
    """(crossings, sum over dots of the crossings below them, non-canonical suffix length)."""
    cross = [l[1] for l in layers if l[0] == PSI]
    below = 0
    seen = 0
    for l in layers:
        if l[0] == PSI:
            seen += 1
        else:
            below += seen
    arr = list(range(size))
    good = 0
    for t, j in enumerate(cross):
        if arr[j - 1] > arr[j]:
            break
        arr[j - 1], arr[j] = arr[j], arr[j - 1]
        if canonical_word(tuple(arr)) != tuple(cross[: t + 1]):
            break
        good = t + 1
    return (len(cross), below, len(cross) - good)


def arrangement_seq(bottom, word) -> tuple:
    cur = list(bottom)
    for j in word:
        cur[j - 1], cur[j] = cur[j], cur[j - 1]
    return tuple(cur)


def _normal_flag(algebra: Algebra) -> str:
    # the PBW-shaped words are a basis except in the cyclotomic quotient
    return NONCANONICAL if algebra.cyclotomic else CANONICAL


def reduce(a: Element, trace: bool = False) -> NormalFormReport:
    """Rewrite every term to normal form.  The result equals a in the algebra."""
    A = a.algebra
    eng = A.engine
    eng.steps = 0
    eng.trace = [] if trace else None
    if trace:
        # memoized work would hide rule applications from the trace
        eng._cache.clear()
    terms = eng.reduce_terms(a.terms)
    out = Element(A, terms)
    lines = eng.trace or []
    eng.trace = None
    flag = _normal_flag(A) if out.terms else CANONICAL
    return NormalFormReport(a, out, eng.steps, flag, lines)


def normal_form(a: Element) -> Element:
    return reduce(a).reduced


# -- the zero prover

def pbw_words(algebra: Algebra, source, target, degree: int, cyclotomic: bool = False):
    """Normal-shaped words from source (bottom) to target (top) of the given degree."""
    A = algebra
    size = A.strands
    blacks_src = [i for i, v in enumerate(source) if v == BLACK]
    blacks_tgt = [i for i, v in enumerate(target) if v == BLACK]
    if [v for v in source if v != BLACK] != [v for v in target if v != BLACK]:
        return []
    red_map = {}
    for i, v in enumerate(source):
        if v != BLACK:
            red_map[target.index(v)] = i
    out = []
    for perm in permutations(blacks_src):
        arr = [0] * size
        for pos, strand in red_map.items():
            arr[pos] = strand
        for pos, strand in zip(blacks_tgt, perm):
            arr[pos] = strand
        word = canonical_word(tuple(arr))
        cross = tuple(crossing(j) for j in word)
        cdeg = A.word_degree(source, cross)
        rest = degree - cdeg
        if rest < 0 or rest % 2:
            continue
        for dots in dot_monomials(A, source, rest // 2):
            layers = dots + cross
            ok = A.walk(source, layers) is not None if cyclotomic else A.engine._walk_nc(source, layers)
            if ok:
                out.append(layers)
    return out


def dot_monomials(algebra: Algebra, seq, units: int):
    """Sorted dot layer tuples on seq of total weight `units` (x weighs 1, E(d) weighs d)."""
    variables = []
    for pos, v in enumerate(seq, start=1):
        if v == BLACK:
            variables.append((xdot(pos), 1))
        elif algebra.has_red_dots:
            for d in range(1, algebra.label(v) + 1):
                variables.append((edot(pos, d), d))
    out = []

    def rec(idx, left, acc):
        if left == 0:
            out.append(tuple(sorted(acc, key=lambda l: (l[1], l[0], l[2]))))
            return
        if idx == len(variables):
            return
        lay, w = variables[idx]
        k = 0
        while k * w <= left:
            rec(idx + 1, left - k * w, acc + [lay] * k)
            k += 1

    rec(0, units, [])
    return out


def _covering_engine(algebra: Algebra) -> RewriteEngine:
    eng = getattr(algebra, "_cover_engine", None)
    if eng is None:
        eng = RewriteEngine(algebra, cyclotomic=False)
        algebra._cover_engine = eng
    return eng


def _cyclotomic_zero(a: Element) -> bool:
    """Decide a = 0 in W by linear algebra in the non-cyclotomic cover.

    The cyclotomic ideal J is spanned by products u e(c) v with c_1 black.
    Working modulo words that pass through a leftmost black strand, a is
    zero iff its cover normal form lies in the span of the normal forms of
    such products u v of the right block and degree.
    """
    A = a.algebra
    eng = _covering_engine(A)

    def project(terms):
        return {k: c for k, c in terms.items() if A.walk(k[0], k[1]) is not None}

    target = project(eng.reduce_terms(a.terms))
    if not target:
        return True
    groups = {}
    for (b, l), c in target.items():
        top = arrangement_seq(b, [lay[1] for lay in l if lay[0] == PSI])
        groups.setdefault((b, top, A.word_degree(b, l)), {})[(b, l)] = c
    for (bot, top, deg), part in groups.items():
        space = RowSpace(A.p)
        cols = {}

        def col(key):
            if key not in cols:
                cols[key] = len(cols)
            return cols[key]

        for c in A.sequences:
            if c[0] != BLACK:
                continue
            lo_u = _min_crossing_degree(A, c, top)
            lo_v = _min_crossing_degree(A, bot, c)
            if lo_u is None or lo_v is None:
                continue
            for d_u in range(lo_u, deg - lo_v + 1):
                us = pbw_words(A, c, top, d_u)
                vs = pbw_words(A, bot, c, deg - d_u) if us else []
                for v in vs:
                    for u in us:
                        terms = project(eng.reduce_terms({(bot, v + u): 1}))
                        if terms:
                            space.add({col(k): val for k, val in terms.items()})
        vec = {col(k): val for k, val in part.items()}
        if not space.contains(vec):
            return False
    return True


def _min_crossing_degree(A: Algebra, source, target):
    """Smallest degree of a crossing word source -> target, or None if there is none."""
    best = None
    for d in _crossing_degrees(A, source, target):
        best = d if best is None else min(best, d)
    return best


def _crossing_degrees(A: Algebra, source, target):
    size = A.strands
    blacks_src = [i for i, v in enumerate(source) if v == BLACK]
    blacks_tgt = [i for i, v in enumerate(target) if v == BLACK]
    if [v for v in source if v != BLACK] != [v for v in target if v != BLACK]:
        return []
    out = []
    for perm in permutations(blacks_src):
        arr = [0] * size
        for i, v in enumerate(source):
            if v != BLACK:
                arr[target.index(v)] = i
        for pos, strand in zip(blacks_tgt, perm):
            arr[pos] = strand
        word = canonical_word(tuple(arr))
        out.append(A.word_degree(source, tuple(crossing(j) for j in word)))
    return out


def prove_zero(a: Element, budget: int = 0, seed: int = 0) -> str:
    """'proven' if a is zero in its algebra by the rewriting relations, else 'unknown'."""
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    if not a.terms:
        return PROVEN
    if not reduce(a).reduced.terms:
        return PROVEN
    if a.algebra.cyclotomic:
        return PROVEN if _cyclotomic_zero(a) else UNKNOWN
    rng = random.Random(seed)
    for _ in range(budget):
        if not reduce(_perturb(a, rng)).reduced.terms:
            return PROVEN
    return UNKNOWN


def _perturb(a: Element, rng) -> Element:
    """Apply one exploratory braid move (with its defect) to a random term."""
    A = a.algebra
    out = {}
    for (bottom, layers), c in a.terms.items():
        sites = [
            i for i in range(len(layers) - 2)
            if all(layers[i + k][0] == PSI for k in range(3))
            and layers[i][1] == layers[i + 2][1]
            and abs(layers[i][1] - layers[i + 1][1]) == 1
        ]
        if not sites:
            out[(bottom, layers)] = (out.get((bottom, layers), 0) + c) % A.p
            continue
        i = rng.choice(sites)
        a_, b_ = layers[i][1], layers[i + 1][1]
        j = min(a_, b_)
        below = A.heights(bottom, layers)[i]
        sign = 1 if a_ == j else -1
        moved = layers[:i] + (crossing(b_), crossing(a_), crossing(b_)) + layers[i + 3:]
        pieces = [(1, moved)] + [
            (sign * cc, layers[:i] + poly + layers[i + 3:])
            for cc, poly in braid_defect_poly(A, below, j)
        ]
        for cc, lay in pieces:
            if A.walk(bottom, lay) is None:
                continue
            key = (bottom, lay)
            out[key] = (out.get(key, 0) + c * cc) % A.p
    return Element(A, out)
