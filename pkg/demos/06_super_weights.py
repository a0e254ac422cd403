"""The super side: rho-shifted weights, the 01-matrix dictionary, orders.

Integral weights carry a parity pattern from the type; the signed form
(delta_i, delta_j) = (-1)^{p_i} delta_{ij} drives every pairing.  Dominant
weights translate into 01-matrices over the whole line, turning the Bruhat
order into the matrix order, and the linkage relation walks down through
dot-reflections and odd-root subtractions.
"""

from superkl.superweights import (
    SuperWeight, bruhat_leq, dominance_super, from_matrix01, linkage_up,
    parities, rho, shifted, to_matrix01,
)
from superkl.weights import TypeNC, order_leq

t = TypeNC((2, 1), (0, 1))   # gl(2|1) flavored type
print("parity pattern:", parities(t))
print("rho =", rho(t).coords)

lam = SuperWeight((2, 0, -1), t)
print()
print("lam =", lam.coords, " lam+rho =", shifted(lam))
mat = to_matrix01(lam)
print("dictionary image:", mat.text(), " devs:", mat.devs)
print("round trip:", from_matrix01(mat) == lam)

print()
print("== linkage going down ==")
for mu in linkage_up(lam):
    print("  ", mu.coords,
          " bruhat mu<=lam:", bruhat_leq(mu, lam),
          " dominance lam>=mu:", dominance_super(lam, mu))

print()
print("== Bruhat order agrees with the matrix order on dominant pairs ==")
pairs = [((2, 0, -1), (1, 1, -1)), ((1, 0, 0), (1, 0, 0)), ((2, -1, 1), (1, 0, 1))]
for a_coords, b_coords in pairs:
    a, b = SuperWeight(a_coords, t), SuperWeight(b_coords, t)
    try:
        ma, mb = to_matrix01(a), to_matrix01(b)
    except Exception as exc:
        print(f"  {a_coords} vs {b_coords}: {type(exc).__name__}")
        continue
    print(f"  {a_coords} <= {b_coords}: bruhat {bruhat_leq(a, b)}, "
          f"matrix {order_leq(ma, mb)}")
