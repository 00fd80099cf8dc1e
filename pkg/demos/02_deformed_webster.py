"""Red strands with elementary-symmetric dots, and the cyclotomic quotient."""

from pdgwebster import PROVEN, Algebra, prove_zero, reduce
from pdgwebster.derivation import DerivationTable, check_relation_preservation, iterate
from pdgwebster.morphisms import QuotientMap

D = Algebra("D", (2,), 1, 3)
psi = D.psi(1, "b,2")
print("psi^2 on e(2,b):", reduce(D.psi(1) * D.psi(1, "2,b")).reduced)
print("psi^2 on e(b,2):", reduce(D.psi(1) * psi).reduced)

T = DerivationTable(D)
for k in range(1, 4):
    print(f"d^{k}(psi e(b,2)) =", reduce(iterate(T, psi, k)).reduced)

rows = check_relation_preservation(T)
print(f"relations preserved: {sum(r['status'] == PROVEN for r in rows)}/{len(rows)}")

# killing the red dots and the leftmost-black idempotents lands in W
q = QuotientMap(D)
W = q.target
print("q(E(1) e(b,2)) =", q(D.E(1, 2, "b,2")))
x2 = W.x(2, "2,b")
print("x_2^2 e(2,b) is zero in W:", prove_zero(W.x(2) * x2) == PROVEN)
print("x_2 e(2,b) proven zero:", prove_zero(x2))
