"""The quantum module structure on tensor products of exterior powers.

f_j flips a (1,0)-pattern in columns (j, j+1), picking up a q-power from
the rows below; e_j is the mirror.  All operators are exact, and the
monomial basis is orthonormal for the bilinear form, with f* = q e k and
e* = q f k^{-1} as adjoints.
"""

from superkl.laurent import qint
from superkl.qmodule import (
    ModuleVec, act_e, act_f, act_f_star, act_k, divided_power_f, form,
)
from superkl.weights import Interval, TypeNC, enumerate_weights, kappa, parse_matrix

I = Interval.finite(0, 0)
t = TypeNC((1, 1), (0, 0))

v = ModuleVec.monomial(parse_matrix("10/10", I, t))
print("v               =", v)
print("f_0 v           =", act_f(0, v))
print("f_0 f_0 v       =", act_f(0, act_f(0, v)))
print("f_0^(2) v       =", divided_power_f(0, 2, v), "  (divided by [2]! =", qint(2), ")")
print("e_0 f_0 v       =", act_e(0, act_f(0, v)))
print("k_0 v           =", act_k(0, +1, v))

print()
print("== the quantum sl2 relation on a monomial ==")
lam = parse_matrix("10/01", I, t)
w = ModuleVec.monomial(lam)
lhs = act_e(0, act_f(0, w)) - act_f(0, act_e(0, w))
print("(e f - f e) v_lam =", lhs, "   <wt, alpha_0> = 0 here")

print()
print("== adjointness under the form ==")
a = ModuleVec.monomial(parse_matrix("10/01", I, t))
b = ModuleVec.monomial(parse_matrix("01/01", I, t))
print("(f_0 a, b)      =", form(act_f(0, a), b))
print("(a, f*_0 b)     =", form(a, act_f_star(0, b)))

print()
print("== orthonormality ==")
ws = enumerate_weights(I, t)
gram = [[str(form(ModuleVec.monomial(x), ModuleVec.monomial(y))) for y in ws]
        for x in ws]
for row in gram:
    print("  ", row)
print("kappa:", kappa(I, t).text())
