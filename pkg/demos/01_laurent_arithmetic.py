"""Exact Laurent polynomial arithmetic in Z[q, q^-1].

Everything downstream (graded dimensions, decomposition polynomials,
canonical basis coefficients) lives in this ring, so we start here.
"""

from superkl.laurent import LaurentInt, div_exact, qfact, qint

q = LaurentInt.monomial(1)
qinv = LaurentInt.monomial(-1)

print("== basics ==")
p = 3 * q ** 2 + 1 + qinv ** 2
print("p                =", p)
print("p * (q - q^-1)   =", p * (q - qinv))
print("bar(p) [q->q^-1] =", p.bar())

print()
print("== balanced quantum integers ==")
for m in range(5):
    print(f"[{m}] = {qint(m)}")
print("[3]! =", qfact(3))
print("every [m] and [m]! is bar-symmetric:",
      all(qint(m).bar() == qint(m) and qfact(m).bar() == qfact(m)
          for m in range(13)))

print()
print("== exact division ==")
num = qint(2) * qint(3) * (q ** 5 - 7)
print("([2][3](q^5-7)) / [3] =", div_exact(num, qint(3)))
try:
    div_exact(q + 1, q - 1)
except Exception as exc:
    print("(q+1)/(q-1) raises:", type(exc).__name__)
