"""Splitting a red strand and the bimodules that merge two of them."""

from pdgwebster import PROVEN, Algebra, prove_zero
from pdgwebster.morphisms import (
    DOWN,
    UP,
    SplitMap,
    SplitterBimodule,
    bimodule_nilpotency_rows,
    compatibility_rows,
)
from pdgwebster.relations import relation_instances

small = Algebra("D", (3,), 1, 3)
phi = SplitMap(small, 1, 1)
print(small, "->", phi.target)
print("psi e(b,3)  ->", phi(small.psi(1, "b,3")))
print("E(2) e(3,b) ->", phi(small.E(2, 1, "3,b")))

insts = relation_instances(small)
ok = sum(prove_zero(phi(r.element)) == PROVEN for r in insts)
print(f"relation images that vanish: {ok}/{len(insts)}")

for side in (UP, DOWN):
    bm = SplitterBimodule(side, (2, 1), 1, 1, 3)
    rows = compatibility_rows(bm) + bimodule_nilpotency_rows(bm)
    good = sum(r["status"] == PROVEN for r in rows)
    print(f"{side:>4}: shift {bm.shift}, {len(bm.generators())} generators, {good}/{len(rows)} checks proven")
