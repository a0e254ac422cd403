"""Everything over an infinite interval runs through finite windows.

Defect and decomposition polynomials computed in any admissible window
agree with every enlargement; the library picks the minimal window, then
re-verifies stability on one-column enlargements automatically.
"""

from superkl.canonical import kl_d, kl_d_stable
from superkl.crystal import WindowTower, is_prinjective
from superkl.weights import (
    Interval, Matrix01, TypeNC, defect, defect_in_window, minimal_window, truncate,
)

z = Interval.all_z()
t = TypeNC((2, 1), (0, 1))

lam = Matrix01(z, t, ((0, 3), (2,)))
print("lam =", lam.text())
window = minimal_window(z, t, lam.all_dev_cols())
print("minimal admissible window:", window.text())
for pad in (0, 1, 2, 3):
    w = Interval.finite(window.lo - pad, window.hi + pad)
    print(f"  defect over {w.text():7} = {defect_in_window(lam, w)}")
print("defect(lam) =", defect(lam))

print()
print("== window-stable decomposition polynomials ==")
mu = Matrix01(z, t, ((2, 3), (0,)))
print("mu =", mu.text())
print("kl_d_stable(lam, mu) =", kl_d_stable(lam, mu))
for pad in (1, 3):
    w = Interval.finite(window.lo - pad, window.hi + pad)
    print(f"  recomputed over {w.text():8}:",
          kl_d(truncate(lam, w), truncate(mu, w)))

print()
print("== prinjectivity through the window tower ==")
tower = WindowTower(z, t)
probes = [tower.kappa_r(1), lam, Matrix01(z, t, ((25, 26), (25,)))]
for probe in probes:
    r = is_prinjective(probe, tower, r_max=6)
    verdict = f"in the component at r={r}" if r else "unknown at this budget"
    print(f"  {probe.text():16} -> {verdict}")

print()
print("half-infinite intervals pin their towers at the closed end:")
up = WindowTower(Interval.half_up(0), t)
print("  geq:0 windows:", ", ".join(up.window(r).text() for r in (1, 2, 3)))
