"""Sparse row echelon form over F_p, for span-membership questions."""

from __future__ import annotations

import heapq

from .modp import inv_mod


class RowSpace:
    """Incrementally built span of sparse vectors {column: coefficient}.

    Every stored row is normalized so that its smallest column (the pivot)
    has coefficient 1.  Reducing a vector eliminates pivots in increasing
    column order; subtracting a row only introduces larger columns, so the
    loop terminates.
    """

    def __init__(self, p: int):
        self.p = p
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        p = self.p
        v = {c: x % p for c, x in vec.items() if x % p}
        heap = [c for c in v if c in self.rows]
        heapq.heapify(heap)
        while heap:
            q = heapq.heappop(heap)
            coeff = v.get(q)
            if not coeff:
                continue
            for c, x in self.rows[q].items():
                new = (v.get(c, 0) - coeff * x) % p
                if new:
                    if c not in v and c in self.rows:
                        heapq.heappush(heap, c)
                    v[c] = new
                else:
                    v.pop(c, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        r = self.reduce(vec)
        if not r:
            return False
        q = min(r)
        inv = inv_mod(r[q], self.p)
        self.rows[q] = {c: (x * inv) % self.p for c, x in r.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rank_mod_p(rows, p: int) -> int:
    space = RowSpace(p)
    for r in rows:
        space.add(r)
    return space.rank
