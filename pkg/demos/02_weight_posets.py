"""01-matrix weights: enumeration, the highest weight, order and defect.

A weight for a type (n, c) over an interval I is an l-row 01-matrix whose
row i differs from the constant baseline c_i in exactly n_i columns of
I_+ = I u (I+1).  The partial order compares signed prefix sums; weights
are comparable only inside their block (equal sl_I-weight).
"""

from superkl.weights import (
    Interval, TypeNC, defect, enumerate_weights, kappa, order_leq, weight_of,
)

I = Interval.finite(0, 1)        # colors {0, 1}, columns {0, 1, 2}
t = TypeNC((1, 1), (0, 0))       # two tensor factors, both plain wedges

ws = enumerate_weights(I, t)
print(f"Lambda for n={t.n}, c={t.c} over I=[0,1] has {len(ws)} weights:")
print(" ", " ".join(w.text() for w in ws))

kap = kappa(I, t)
print("highest weight kappa =", kap.text(), " sl-weight:", dict(weight_of(kap)))

print()
print("== order (within blocks only) ==")
for a in ws:
    ups = [b.text() for b in ws if b != a and order_leq(a, b)]
    if ups:
        print(f"  {a.text()} <", ", ".join(ups))

print()
print("== defect ==")
for a in ws:
    print(f"  def({a.text()}) = {defect(a)}")

# mixing polarities: a dual factor counts 0-entries as deviations
t2 = TypeNC((1, 2), (1, 0))
print()
print(f"with a dual factor, n={t2.n}, c={t2.c}:")
for w in enumerate_weights(I, t2)[:4]:
    print(" ", w.text(), "devs:", w.devs)
