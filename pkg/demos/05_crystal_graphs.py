"""Crystal graphs by the signature rule, and the prinjective component.

Per color, rows showing (1,0) at the two relevant columns read '-' and
rows showing (0,1) read '+'; cancelling +- pairs (plus above minus) leaves
the reduced signature.  f moves the lowest surviving '-', e the highest
surviving '+'.  The component of the highest weight collects the
prinjective indices.
"""

from superkl.crystal import WindowTower, crystal_dot, crystal_e, crystal_f, lambda_circ
from superkl.weights import Interval, TypeNC, enumerate_weights, kappa, parse_matrix

I = Interval.finite(0, 1)
t = TypeNC((1, 1), (0, 0))

print("== edges out of each weight (color 0) ==")
for lam in enumerate_weights(I, t):
    f0 = crystal_f(lam, 0)
    e0 = crystal_e(lam, 0)
    print(f"  {lam.text()}  f-> {f0.text() if f0 else '.':10}  e-> "
          f"{e0.text() if e0 else '.'}")

circ = lambda_circ(I, t)
print()
print(f"component of kappa has {len(circ)} of {len(enumerate_weights(I, t))} weights")
outside = sorted(w.text() for w in set(enumerate_weights(I, t)) - circ)
print("outside the component:", outside)

print()
print("== DOT output (first lines) ==")
print("\n".join(crystal_dot(I, t).splitlines()[:6]), "...")

print()
print("== nested windows over the whole line ==")
tower = WindowTower(Interval.all_z(), t)
for r in (1, 2, 3):
    data = tower.shift(r)
    print(f"I_{r} = {tower.window(r).text():7} kappa^{r} = {tower.kappa_r(r).text():10}"
          f" next step grows {data.grew}, word {list(data.word)}, sigma {data.sigma}")
print("divided-power chain reproduces kappa^1 exactly:",
      tower.bandon_chain(1).support()[0] == tower.kappa_r(1))
print("components nest:",
      tower.component_r(1) <= tower.component_r(2) <= tower.component_r(3))
