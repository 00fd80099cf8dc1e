"""The nilHecke algebra, its divided-difference action and its p-derivation."""

from pdgwebster import Algebra, reduce
from pdgwebster.derivation import DerivationTable, iterate
from pdgwebster.parser import parse
from pdgwebster.polyoracle import Polynomial
from pdgwebster.polyrep import act

A = Algebra("NH", (), 2, 3)
print(A)

# crossings square to zero, dots slide through with a correction
for text in ("psi@1 psi@1", "x@2 psi@1", "psi@1 x@1"):
    print(f"{text:>12}  ->  {reduce(parse(text, A)).reduced}")

# psi acts on polynomials as the divided difference (f - s f) / (t1 - t2)
t1 = Polynomial.variable(1, 2, 3)
print("psi_1 (t1^2) =", act(A.psi(1), t1 * t1))

# d(psi) = -x psi - psi x', and d^3 vanishes in characteristic 3
T = DerivationTable(A)
psi = A.psi(1)
for k in range(4):
    print(f"d^{k}(psi) =", reduce(iterate(T, psi, k)).reduced)
