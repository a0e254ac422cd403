"""Crystal graph on the weight set, blocks, and the prinjective component.

The edges of color i at a weight come from the signature rule: label each
row '-' when its entries at columns (i, i+1) read (1, 0) and '+' when they
read (0, 1), then cancel +- pairs whenever the + row is above the - row
with only unlabeled rows between (a single top-to-bottom stack scan).  A
surviving '-' gives the f-edge at its lowest such row; a surviving '+'
gives the e-edge at its highest such row.

For infinite intervals the prinjective set is the nested union of the
components of the highest weights of a tower of finite windows growing
toward the unbounded side(s); the tower also carries the word and shift
bookkeeping attached to each enlargement step.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContextMismatch, EmptyWeightSet, IntervalInfinite
from .qmodule import ModuleVec, divided_power_f
from .weights import (
    Interval,
    Matrix01,
    TypeNC,
    enumerate_weights,
    in_Lambda_J,
    kappa,
    kappa_for_window,
    weight_of,
)


def _signature(lam: Matrix01, i: int):
    """Return (surviving minus rows, surviving plus rows), top to bottom."""
    minus_rows = []
    plus_stack = []
    for row in range(lam.tnc.level):
        pair = (lam.entry(row, i), lam.entry(row, i + 1))
        if pair == (1, 0):
            if plus_stack:
                plus_stack.pop()
            else:
                minus_rows.append(row)
        elif pair == (0, 1):
            plus_stack.append(row)
    return minus_rows, plus_stack


def crystal_f(lam: Matrix01, i: int) -> Matrix01 | None:
    """Follow the f-edge of color i, or None when there is none."""
    minus_rows, _ = _signature(lam, i)
    if not minus_rows:
        return None
    return lam.flip(minus_rows[-1], i)


def crystal_e(lam: Matrix01, i: int) -> Matrix01 | None:
    """Follow the e-edge of color i, or None when there is none."""
    _, plus_stack = _signature(lam, i)
    if not plus_stack:
        return None
    return lam.flip(plus_stack[0], i)


def same_block(lam: Matrix01, mu: Matrix01) -> bool:
    """Two weights index the same block iff their sl_I-weights agree."""
    if lam.interval != mu.interval or lam.tnc != mu.tnc:
        raise ContextMismatch("weights live over different contexts")
    return weight_of(lam) == weight_of(mu)


def _component(start: Matrix01, colors) -> set[Matrix01]:
    seen = {start}
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        for i in colors:
            for step in (crystal_f, crystal_e):
                nxt = step(lam, i)
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return seen


def lambda_circ(interval: Interval, tnc: TypeNC) -> set[Matrix01]:
    """The crystal component of kappa over a finite interval."""
    if not interval.is_finite():
        raise IntervalInfinite("use a WindowTower over infinite intervals")
    kap = kappa(interval, tnc)
    return _component(kap, list(interval.colors()))


@dataclass(frozen=True)
class ShiftData:
    """Word and grading-shift bookkeeping for one window enlargement."""

    grew: str                      # "left" or "right"
    p: tuple[int, ...]             # p_1, ..., p_a
    a: int
    s: int
    eps: int                       # +1 when growing left, -1 when growing right
    word: tuple[int, ...]          # (s+eps*a)^{p_a} ... (s+eps*1)^{p_1}
    d_r: int
    sigma: Fraction                # (1/2)(p_1 + ... + p_a), kept exact

    def colors(self) -> list[int]:
        return [self.s + self.eps * k for k in range(1, self.a + 1)]


class WindowTower:
    """Nested finite windows I_1 c I_2 c ... inside an infinite interval.

    |I_1|+1 >= 2 max(n) and each step adds one column toward an unbounded
    side.  The growth schedule is a run parameter; the default alternates
    (starting leftward) over the whole line and grows toward the open end
    of a half-infinite interval.
    """

    def __init__(self, interval: Interval, tnc: TypeNC,
                 schedule: str = "default", base_lo: int | None = None):
        if interval.is_finite():
            raise IntervalInfinite("a tower needs an infinite interval")
        self.interval = interval
        self.tnc = tnc
        width = max(1, 2 * tnc.max_n() - 1)  # |I_1|, so |I_1+| >= 2 max(n)
        if interval.lo is not None:
            # half line up: the base window is pinned at the closed end
            lo = interval.lo
            directions = "right"
        elif interval.hi is not None:
            lo = interval.hi - width + 1
            directions = "left"
        else:
            lo = 0 if base_lo is None else base_lo
            directions = "alternate_lr" if schedule == "default" else schedule
        self._dirs = directions
        self._windows = [Interval.finite(lo, lo + width - 1)]
        self._shifts: list[ShiftData] = []

    def _direction(self, r: int) -> str:
        if self._dirs == "left":
            return "left"
        if self._dirs == "right":
            return "right"
        if self._dirs == "alternate_lr":
            return "left" if r % 2 == 1 else "right"
        if self._dirs == "alternate_rl":
            return "right" if r % 2 == 1 else "left"
        raise ValueError(f"unknown schedule {self._dirs!r}")

    def _grow(self):
        r = len(self._windows)
        prev = self._windows[-1]
        direction = self._direction(r)
        if direction == "left":
            nxt = Interval.finite(prev.lo - 1, prev.hi)
        else:
            nxt = Interval.finite(prev.lo, prev.hi + 1)
        if not nxt.issubset(self.interval):
            raise ValueError("window escaped the ambient interval")
        self._windows.append(nxt)
        self._shifts.append(self._shift_data(prev, nxt, direction))

    def _shift_data(self, prev: Interval, nxt: Interval, direction: str) -> ShiftData:
        if direction == "left":
            # max(I_r) = max(I_{r+1}): rows of polarity 0 shift rightward
            pol = 0
            s = nxt.lo - 1
            eps = 1
        else:
            pol = 1
            s = nxt.hi + 1
            eps = -1
        ns = [n for n, c in zip(self.tnc.n, self.tnc.c) if c == pol]
        a = max(ns, default=0)
        p = tuple(sum(1 for n in ns if n >= j) for j in range(1, a + 1))
        word = []
        for k in range(a, 0, -1):
            word.extend([s + eps * k] * p[k - 1])
        d_r = sum(ns)
        sigma = Fraction(sum(p), 2)
        return ShiftData(direction, p, a, s, eps, tuple(word), d_r, sigma)

    def window(self, r: int) -> Interval:
        """The r-th window I_r (1-based)."""
        while len(self._windows) < r:
            self._grow()
        return self._windows[r - 1]

    def kappa_r(self, r: int) -> Matrix01:
        """kappa^r: the weight restricting to the highest weight of I_r."""
        return kappa_for_window(self.interval, self.tnc, self.window(r))

    def shift(self, r: int) -> ShiftData:
        """Shift data of the step I_r -> I_{r+1}."""
        self.window(r + 1)
        return self._shifts[r - 1]

    def sigma_total(self, r: int) -> Fraction:
        """Sigma_r = sigma_1 + ... + sigma_{r-1}."""
        return sum((self.shift(k).sigma for k in range(1, r)), Fraction(0))

    def component_r(self, r: int) -> set[Matrix01]:
        """Lambda^o_r: the crystal component of kappa^r under colors of I_r."""
        window = self.window(r)
        return _component(self.kappa_r(r), list(window.colors()))

    def bandon_chain(self, r: int) -> ModuleVec:
        """Apply the divided-power chain of step r to v_{kappa^{r+1}}.

        The result equals v_{kappa^r}; tests assert it.
        """
        data = self.shift(r)
        v = ModuleVec.monomial(self.kappa_r(r + 1))
        for k in range(data.a, 0, -1):
            v = divided_power_f(data.s + data.eps * k, data.p[k - 1], v)
        return v


def is_prinjective(lam: Matrix01, tower: WindowTower, r_max: int):
    """Membership of lam in the prinjective set, budgeted at r_max windows.

    Returns the first r with lam in Lambda^o_r, or None when undecided
    within the budget (the nested union only grows, so no finite stage can
    rule membership out).
    """
    if lam.interval != tower.interval or lam.tnc != tower.tnc:
        raise ContextMismatch("weight does not match the tower")
    for r in range(1, r_max + 1):
        if not in_Lambda_J(lam, tower.window(r)):
            continue
        if lam in tower.component_r(r):
            return r
    return None


def crystal_edges(interval: Interval, tnc: TypeNC):
    """All f-edges over a finite interval: list of (lam, color, mu)."""
    if not interval.is_finite():
        raise IntervalInfinite("crystal enumeration requires a finite interval")
    weights = enumerate_weights(interval, tnc)
    if not weights:
        raise EmptyWeightSet("no weights for this type")
    edges = []
    for lam in weights:
        for i in interval.colors():
            mu = crystal_f(lam, i)
            if mu is not None:
                edges.append((lam, i, mu))
    return weights, edges


def crystal_dot(interval: Interval, tnc: TypeNC) -> str:
    """Emit the crystal graph in DOT format."""
    weights, edges = crystal_edges(interval, tnc)
    lines = ["digraph crystal {"]
    for lam in weights:
        lines.append(f'  "{lam.text()}";')
    for lam, i, mu in edges:
        lines.append(f'  "{lam.text()}" -> "{mu.text()}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)
