"""Bounded-degree ideal membership by exact linear algebra (Macaulay-style matrices).

This is deliberately independent of the rewrite engine.  Words are taken in
"slot form": a bottom sequence, a crossing word, and a commutative dot
monomial in each of the k+1 slots between the k crossings.  In this form the
commutations among dots are built in; every other relation is an explicit row.

For a block (bottom, top) and degree, the space holds all slot words with at
most K crossings.  For each word in the space (including words that are zero
by the cyclotomic condition) we emit every relation instance the word is the
distinguished side of: dot slides, far commutations of crossings, braid moves
and psi squared.  All other words in such a row have no more crossings, so the
rows stay inside the space.  Then a - b is tested for membership in the row
span over F_p.
"""

from __future__ import annotations

from .algebra import E, PSI, X, Algebra, Element
from .linalg import RowSpace
from .seqcore import BLACK


class ResourceError(RuntimeError):
    """Raised when a computation would exceed the configured caps."""


DEFAULT_CAPS = {"degree": 12, "strands": 4, "p": 5, "columns": 60_000}


def _slot_form(A: Algebra, bottom, layers):
    slots = [[]]
    cross = []
    for lay in layers:
        if lay[0] == PSI:
            cross.append(lay[1])
            slots.append([])
        else:
            slots[-1].append(lay)
    return (bottom, tuple(cross), tuple(tuple(sorted(s)) for s in slots))


def _sequences_along(bottom, cross):
    out = [tuple(bottom)]
    cur = list(bottom)
    for j in cross:
        cur[j - 1], cur[j] = cur[j], cur[j - 1]
        out.append(tuple(cur))
    return out


class _Space:
    def __init__(self, A: Algebra, bottom, top, degree, max_cross, caps):
        self.A = A
        self.bottom = bottom
        self.top = top
        self.degree = degree
        self.K = max_cross
        self.caps = caps
        self.words = []
        self.cols = {}

    def _variables(self, seq):
        A = self.A
        out = []
        for pos, v in enumerate(seq, start=1):
            if v == BLACK:
                out.append(((X, pos, 0), 1))
            elif A.has_red_dots:
                for d in range(1, A.label(v) + 1):
                    out.append(((E, pos, d), d))
        return out

    def _monomials(self, seq, units):
        variables = self._variables(seq)
        out = []

        def rec(idx, left, acc):
            if left == 0:
                out.append(tuple(sorted(acc)))
                return
            if idx == len(variables):
                return
            var, w = variables[idx]
            k = 0
            while k * w <= left:
                rec(idx + 1, left - k * w, acc + [var] * k)
                k += 1

        rec(0, units, [])
        return out

    def _crossing_words(self):
        A = self.A
        out = []
        N = A.strands

        def rec(cur, word, deg):
            if tuple(cur) == self.top:
                out.append((tuple(word), deg))
            if len(word) == self.K:
                return
            for j in range(1, N):
                a, b = cur[j - 1], cur[j]
                if a != BLACK and b != BLACK:
                    continue
                if a == BLACK and b == BLACK:
                    dd = -2
                else:
                    dd = A.label(a if a != BLACK else b)
                cur[j - 1], cur[j] = b, a
                word.append(j)
                rec(cur, word, deg + dd)
                word.pop()
                cur[j - 1], cur[j] = a, b

        rec(list(self.bottom), [], 0)
        return out

    def enumerate(self):
        for cross, cdeg in self._crossing_words():
            rest = self.degree - cdeg
            if rest < 0 or rest % 2:
                continue
            seqs = _sequences_along(self.bottom, cross)
            k = len(cross)
            for split in _splits(rest // 2, k + 1):
                parts = [self._monomials(seqs[h], split[h]) for h in range(k + 1)]
                for combo in _product(parts):
                    self.words.append((cross, combo))
                    if len(self.words) > self.caps["columns"]:
                        raise ResourceError("oracle column cap exceeded")

    def is_zero_word(self, cross):
        if not self.A.cyclotomic:
            return False
        return any(seq[0] == BLACK for seq in _sequences_along(self.bottom, cross))

    def col(self, word):
        cross, slots = word
        if self.is_zero_word(cross):
            return None
        c = self.cols.get(word)
        if c is None:
            c = self.cols[word] = len(self.cols)
        return c


def _splits(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _splits(total - first, parts - 1):
            yield (first,) + rest


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for tail in _product(lists[1:]):
            yield (head,) + tail


def _merge(*monos):
    out = []
    for m in monos:
        out.extend(m)
    return tuple(sorted(out))


def _remove_one(mono, var):
    lst = list(mono)
    lst.remove(var)
    return tuple(lst)


def _rows_for(space: _Space, word):
    """Relation rows having `word` as the distinguished term."""
    A = space.A
    cross, slots = word
    seqs = _sequences_along(space.bottom, cross)
    rows = []
    k = len(cross)
    for c in range(k):
        j = cross[c]
        below = seqs[c]
        # dot slides: a variable in the slot above crossing c moves below it
        for var in sorted(set(slots[c + 1])):
            kind, l, d = var
            rest_above = _remove_one(slots[c + 1], var)
            if l in (j, j + 1):
                new_var = (kind, j + 1 if l == j else j, d)
            else:
                new_var = var
            moved = slots[:c] + (_merge(slots[c], (new_var,)), rest_above) + slots[c + 2:]
            row = [(1, word), (-1, (cross, moved))]
            if kind == X and l in (j, j + 1) and below[j - 1] == BLACK and below[j] == BLACK:
                merged = slots[:c] + (_merge(slots[c], rest_above),) + slots[c + 2:]
                row.append((-1 if l == j else 1, (cross[:c] + cross[c + 1:], merged)))
            rows.append(row)
    for c in range(k - 1):
        if slots[c + 1]:
            continue
        j, l = cross[c], cross[c + 1]
        below = seqs[c]
        if abs(j - l) >= 2 and j > l:
            new_cross = cross[:c] + (l, j) + cross[c + 2:]
            rows.append([(1, word), (-1, (new_cross, slots))])
        if j == l:
            new_cross = cross[:c] + cross[c + 2:]
            row = [(1, word)]
            for coeff, mono in _psi_square(A, below, j):
                merged = slots[:c] + (_merge(slots[c], mono, slots[c + 2]),) + slots[c + 3:]
                row.append((-coeff, (new_cross, merged)))
            rows.append(row)
    for c in range(k - 2):
        if slots[c + 1] or slots[c + 2]:
            continue
        a, b, a2 = cross[c:c + 3]
        if not (a == a2 and b == a + 1):
            continue
        below = seqs[c]
        new_cross = cross[:c] + (b, a, b) + cross[c + 3:]
        row = [(1, word), (-1, (new_cross, slots))]
        short = cross[:c] + cross[c + 3:]
        for coeff, mono in _braid(A, below, a):
            merged = slots[:c] + (_merge(slots[c], mono, slots[c + 3]),) + slots[c + 4:]
            row.append((-coeff, (short, merged)))
        rows.append(row)
    return rows


def _psi_square(A: Algebra, below, j):
    a, b = below[j - 1], below[j]
    if a == BLACK and b == BLACK:
        return []
    out = []
    if a != BLACK:
        s = A.label(a)
        for d in range(s + 1):
            if d and not A.has_red_dots:
                continue
            mono = ((E, j, d),) * (1 if d else 0) + ((X, j + 1, 0),) * (s - d)
            out.append(((-1) ** d, mono))
    else:
        s = A.label(b)
        for d in range(s + 1):
            if d and not A.has_red_dots:
                continue
            mono = ((X, j, 0),) * (s - d) + ((E, j + 1, d),) * (1 if d else 0)
            out.append(((-1) ** d, mono))
    return out


def _braid(A: Algebra, below, j):
    if not (below[j - 1] == BLACK and below[j + 1] == BLACK and below[j] != BLACK):
        return []
    s = A.label(below[j])
    out = []
    for d3 in range(s):
        if d3 and not A.has_red_dots:
            continue
        for d1 in range(s - d3):
            d2 = s - 1 - d3 - d1
            mono = ((X, j, 0),) * d1 + ((E, j + 1, d3),) * (1 if d3 else 0) + ((X, j + 2, 0),) * d2
            out.append(((-1) ** d3, mono))
    return out


def _check_caps(A: Algebra, caps, degree):
    if abs(degree) > caps["degree"]:
        raise ResourceError(f"degree {degree} exceeds the oracle cap {caps['degree']}")
    if A.strands > caps["strands"]:
        raise ResourceError(f"{A.strands} strands exceed the oracle cap {caps['strands']}")
    if A.p > caps["p"]:
        raise ResourceError(f"p={A.p} exceeds the oracle cap {caps['p']}")


def oracle_equal(a: Element, b: Element, caps=None, extra_crossings=None) -> bool:
    """Decide a == b in the algebra by linear algebra within degree caps."""
    caps = dict(DEFAULT_CAPS, **(caps or {}))
    if a.algebra != b.algebra:
        raise ValueError("elements of different algebras")
    A = a.algebra
    for el in (a, b):
        for (bottom, layers) in el.terms:
            _check_caps(A, caps, A.word_degree(bottom, layers))
    diff = a - b
    if extra_crossings is None:
        extra_crossings = 2 if A.cyclotomic else 0
    groups = {}
    for (bottom, layers), c in diff.terms.items():
        top = A.walk(bottom, layers)
        deg = A.word_degree(bottom, layers)
        groups.setdefault((bottom, top, deg), []).append((_slot_form(A, bottom, layers), c))
    for (bottom, top, deg), terms in groups.items():
        _check_caps(A, caps, deg)
        K = max(len(w[1]) for w, _ in terms) + extra_crossings
        if not _member(A, bottom, top, deg, K, terms, caps):
            return False
    return True


def _member(A, bottom, top, deg, K, terms, caps):
    space = _Space(A, bottom, top, deg, K, caps)
    space.enumerate()
    rows = RowSpace(A.p)
    # word columns are ordered so that long words are eliminated first
    for cross, slots in sorted(space.words, key=lambda w: -len(w[0])):
        space.col((cross, slots))
    for word in space.words:
        for row in _rows_for(space, word):
            vec = {}
            for coeff, w in row:
                c = space.col(w)
                if c is None:
                    continue
                vec[c] = (vec.get(c, 0) + coeff) % A.p
            rows.add(vec)
    target = {}
    for (b, cross, slots), c in terms:
        col = space.col((cross, slots))
        if col is None:
            continue
        target[col] = (target.get(col, 0) + c) % A.p
    return rows.contains(target)
