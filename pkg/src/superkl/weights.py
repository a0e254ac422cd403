"""Intervals, types, 01-matrix weights, orders, defect and truncation.

A weight is an l-row 01-matrix whose row i agrees with the baseline value
c_i outside a finite set of columns.  We store only the deviations: for
each row, the sorted tuple of columns where the entry differs from c_i.
This makes window normalization automatic; two weights are equal iff their
deviation data agree.

Columns are indexed by I_+ = I u (I+1).  Row entries are read through
``entry(lam, i, j)``; the raw 01-value at (i, j) never depends on how the
window was chosen.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import (
    DegreeMismatch,
    DeviationOutsideWindow,
    EmptyWeightSet,
    IntervalInfinite,
    TypeMismatch,
)


@dataclass(frozen=True)
class Interval:
    """A nonempty integer interval; lo/hi of None mean unbounded."""

    lo: int | None
    hi: int | None

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def finite(cls, lo: int, hi: int) -> "Interval":
        return cls(lo, hi)

    @classmethod
    def half_up(cls, lo: int) -> "Interval":
        return cls(lo, None)

    @classmethod
    def half_down(cls, hi: int) -> "Interval":
        return cls(None, hi)

    @classmethod
    def all_z(cls) -> "Interval":
        return cls(None, None)

    def is_finite(self) -> bool:
        return self.lo is not None and self.hi is not None

    def __contains__(self, j: int) -> bool:
        if self.lo is not None and j < self.lo:
            return False
        if self.hi is not None and j > self.hi:
            return False
        return True

    def contains_col(self, j: int) -> bool:
        """Membership in I_+ = I u (I+1)."""
        return (j in self) or (j - 1 in self)

    def colors(self) -> range:
        """The colors (simple-root indices) of a finite interval."""
        if not self.is_finite():
            raise IntervalInfinite("infinite interval has infinitely many colors")
        return range(self.lo, self.hi + 1)

    def cols(self) -> range:
        """The columns I_+ of a finite interval."""
        if not self.is_finite():
            raise IntervalInfinite("infinite interval has infinitely many columns")
        return range(self.lo, self.hi + 2)

    def n_cols(self) -> int:
        return len(self.cols())

    def issubset(self, other: "Interval") -> bool:
        lo_ok = other.lo is None or (self.lo is not None and self.lo >= other.lo)
        hi_ok = other.hi is None or (self.hi is not None and self.hi <= other.hi)
        return lo_ok and hi_ok

    def text(self) -> str:
        if self.is_finite():
            return f"{self.lo}:{self.hi}"
        if self.lo is not None:
            return f"geq:{self.lo}"
        if self.hi is not None:
            return f"leq:{self.hi}"
        return "z"

    @classmethod
    def parse(cls, text: str) -> "Interval":
        text = text.strip()
        if text == "z":
            return cls.all_z()
        if text.startswith("geq:"):
            return cls.half_up(int(text[4:]))
        if text.startswith("leq:"):
            return cls.half_down(int(text[4:]))
        lo, hi = text.split(":")
        return cls.finite(int(lo), int(hi))


@dataclass(frozen=True)
class TypeNC:
    """A type: exterior-power degrees n and polarities c, one per tensor factor."""

    n: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.n) != len(self.c):
            raise ValueError("n and c must have equal length")
        if any(ni < 0 for ni in self.n):
            raise ValueError("n entries must be nonnegative")
        if any(ci not in (0, 1) for ci in self.c):
            raise ValueError("c entries must be 0 or 1")

    @property
    def level(self) -> int:
        return len(self.n)

    def max_n(self) -> int:
        return max(self.n, default=0)

    def reversed(self) -> "TypeNC":
        return TypeNC(self.n[::-1], self.c[::-1])

    def drop_last(self) -> "TypeNC":
        return TypeNC(self.n[:-1], self.c[:-1])


@dataclass(frozen=True)
class Matrix01:
    """A 01-matrix weight, stored by its per-row deviation columns."""

    interval: Interval
    tnc: TypeNC
    devs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.devs) != self.tnc.level:
            raise ValueError("one deviation tuple per row required")
        for i, (row, ni) in enumerate(zip(self.devs, self.tnc.n)):
            if tuple(sorted(set(row))) != row:
                raise ValueError(f"row {i} deviations must be sorted and distinct")
            if len(row) != ni:
                raise ValueError(
                    f"row {i} has {len(row)} deviations, expected n_{i+1} = {ni}"
                )
            for j in row:
                if not self.interval.contains_col(j):
                    raise ValueError(f"deviation column {j} outside I_+")

    def entry(self, i: int, j: int) -> int:
        """The 01-entry of row i (0-based) at column j in I_+."""
        ci = self.tnc.c[i]
        return (1 - ci) if j in self.devs[i] else ci

    def flip(self, i: int, j: int) -> "Matrix01":
        """Swap the entries of row i at columns j and j+1."""
        row = set(self.devs[i])
        row ^= {j, j + 1}
        new = list(self.devs)
        new[i] = tuple(sorted(row))
        return Matrix01(self.interval, self.tnc, tuple(new))

    def all_dev_cols(self) -> list[int]:
        return sorted({j for row in self.devs for j in row})

    def window(self) -> tuple[int, int]:
        """Column range rendered in text/JSON output.

        Finite intervals render over all of I_+; infinite ones over the
        minimal window that contains every deviation (a single column
        when there are none).
        """
        if self.interval.is_finite():
            cols = self.interval.cols()
            return cols[0], cols[-1]
        devcols = self.all_dev_cols()
        if not devcols:
            anchor = self.interval.lo if self.interval.lo is not None else 0
            return anchor, anchor
        return devcols[0], devcols[-1]

    def row_strings(self) -> list[str]:
        lo, hi = self.window()
        return [
            "".join(str(self.entry(i, j)) for j in range(lo, hi + 1))
            for i in range(self.tnc.level)
        ]

    def text(self) -> str:
        lo, _ = self.window()
        return f"@{lo}:" + "/".join(self.row_strings())

    def to_json(self) -> dict:
        lo, _ = self.window()
        return {"window_start": lo, "rows": self.row_strings()}

    def __str__(self):
        return self.text()


def parse_matrix(text: str, interval: Interval, tnc: TypeNC) -> Matrix01:
    """Parse the text form ``@start:rows`` (or bare rows for finite I)."""
    text = text.strip()
    if text.startswith("@"):
        head, _, body = text[1:].partition(":")
        start = int(head)
    else:
        if not interval.is_finite():
            raise ValueError("bare row form needs a finite interval")
        start = interval.cols()[0]
        body = text
    rows = body.split("/") if body else []
    if len(rows) != tnc.level:
        raise ValueError(f"expected {tnc.level} rows, got {len(rows)}")
    devs = []
    for i, row in enumerate(rows):
        ci = tnc.c[i]
        devs.append(
            tuple(
                start + k for k, ch in enumerate(row) if int(ch) != ci
            )
        )
    return Matrix01(interval, tnc, tuple(devs))


class WeightPI(dict):
    """A weight in the sl_I lattice: finitely supported map i -> coefficient of w_i."""

    def __init__(self, data=None):
        super().__init__()
        if data:
            for k, v in data.items():
                if v:
                    self[k] = v

    def __hash__(self):  # type: ignore[override]
        return hash(tuple(sorted(self.items())))

    def add_into(self, i: int, c: int) -> None:
        n = self.get(i, 0) + c
        if n:
            self[i] = n
        else:
            self.pop(i, None)

    def minus(self, other: "WeightPI") -> "WeightPI":
        out = WeightPI(self)
        for k, v in other.items():
            out.add_into(k, -v)
        return out

    def to_json(self) -> dict:
        return {str(k): v for k, v in sorted(self.items())}


def alpha(i: int, interval: Interval) -> WeightPI:
    """The simple root a_i = 2 w_i - w_(i-1) - w_(i+1), dropping w outside I."""
    out = WeightPI()
    if i in interval:
        out.add_into(i, 2)
    if i - 1 in interval:
        out.add_into(i - 1, -1)
    if i + 1 in interval:
        out.add_into(i + 1, -1)
    return out


def enumerate_weights(interval: Interval, tnc: TypeNC) -> list[Matrix01]:
    """All weights over a finite interval, ordered by row bitstrings.

    The count is prod_i C(|I_+|, n_i); the set is empty when some
    n_i > |I_+|.
    """
    if not interval.is_finite():
        raise IntervalInfinite("enumeration requires a finite interval")
    cols = list(interval.cols())
    z = len(cols)
    per_row: list[list[tuple[int, ...]]] = []
    for ni, ci in zip(tnc.n, tnc.c):
        if ni > z:
            return []
        choices = [tuple(sorted(s)) for s in itertools.combinations(cols, ni)]
        # order rows by their 01-bitstring over I_+
        def bitkey(dev, ci=ci):
            return tuple((1 - ci) if j in dev else ci for j in cols)

        choices.sort(key=bitkey)
        per_row.append(choices)
    out = []
    for combo in itertools.product(*per_row):
        out.append(Matrix01(interval, tnc, tuple(combo)))
    return out


def weight_count(interval: Interval, tnc: TypeNC) -> int:
    z = interval.n_cols()
    total = 1
    for ni in tnc.n:
        total *= comb(z, ni)
    return total


def kappa(interval: Interval, tnc: TypeNC) -> Matrix01:
    """The order-maximal weight: all 1-entries left-justified in each row."""
    if not interval.is_finite():
        raise IntervalInfinite("kappa requires a finite interval")
    cols = list(interval.cols())
    z = len(cols)
    devs = []
    for ni, ci in zip(tnc.n, tnc.c):
        if ni > z:
            raise EmptyWeightSet(f"n = {ni} exceeds |I_+| = {z}")
        if ci == 0:
            devs.append(tuple(cols[:ni]))  # leading 1s
        else:
            devs.append(tuple(cols[z - ni:]))  # trailing 0s
    return Matrix01(interval, tnc, tuple(devs))


def kappa_for_window(interval: Interval, tnc: TypeNC, window: Interval) -> Matrix01:
    """The weight of Lambda over ``interval`` whose restriction to ``window`` is kappa."""
    kw = kappa(window, tnc)
    return Matrix01(interval, tnc, kw.devs)


def weight_of(lam: Matrix01) -> WeightPI:
    """The sl_I-weight of a monomial, as a w-coefficient map.

    Each 1-entry contributes eps_j = w_j - w_(j-1) with w dropped outside I.
    Rows of baseline 1 are handled through their deviations: the all-ones
    row has weight zero in every interval, so such a row contributes
    -eps_j for each deviation column j.
    """
    out = WeightPI()
    iv = lam.interval
    for i, row in enumerate(lam.devs):
        sign = 1 if lam.tnc.c[i] == 0 else -1
        for j in row:
            if j in iv:
                out.add_into(j, sign)
            if j - 1 in iv:
                out.add_into(j - 1, -sign)
    return out


def dominance_leq(beta_eps: dict[int, int], gamma_eps: dict[int, int],
                  interval: Interval) -> bool:
    """Test gamma <= beta in dominance order via the prefix-sum criterion.

    Both weights are given in eps-coordinates (column -> coefficient) and
    must have equal total degree.  The prefix sums are step functions, so
    each constancy segment that meets I is tested once.
    """
    if sum(beta_eps.values()) != sum(gamma_eps.values()):
        raise DegreeMismatch("total eps-degrees differ")
    hs = sorted(set(beta_eps) | set(gamma_eps))
    b = g = 0
    for idx, h in enumerate(hs):
        b += beta_eps.get(h, 0)
        g += gamma_eps.get(h, 0)
        # the sums are constant on [h, next jump - 1]; test the segment
        # only when it meets I
        end = hs[idx + 1] - 1 if idx + 1 < len(hs) else None  # None = +inf
        if interval.hi is not None and h > interval.hi:
            continue
        if interval.lo is not None and end is not None and end < interval.lo:
            continue
        if b < g:
            return False
    return True


def _signed_prefix(lam: Matrix01, k: int, h: int) -> int:
    """sum_{i<=k} sum_{j<=h, dev} (-1)^{c_i} for 1-based row cutoff k."""
    total = 0
    for i in range(k):
        sign = 1 if lam.tnc.c[i] == 0 else -1
        total += sign * sum(1 for j in lam.devs[i] if j <= h)
    return total


def order_leq(lam: Matrix01, mu: Matrix01) -> bool:
    """The (TP1) order on Lambda, via the signed prefix-sum criterion."""
    if lam.interval != mu.interval or lam.tnc != mu.tnc:
        raise TypeMismatch("weights live over different contexts")
    level = lam.tnc.level
    hs = sorted(set(lam.all_dev_cols()) | set(mu.all_dev_cols()))
    hs = [h for h in hs if h in lam.interval]
    for k in range(1, level + 1):
        for h in hs:
            a = _signed_prefix(lam, k, h)
            b = _signed_prefix(mu, k, h)
            if a < b:
                return False
            if k == level and a != b:
                return False
    return True


def order_lt(lam: Matrix01, mu: Matrix01) -> bool:
    return lam != mu and order_leq(lam, mu)


def defect(lam: Matrix01) -> int:
    """def(lam) = (1/2) sum_j (k_j^2 - l_j^2) over a large-enough window.

    k_j and l_j count the 1-entries in column j of kappa and of lam.  For
    infinite intervals the window must satisfy |J_+| >= 2 max(n) and
    contain every deviation; the result does not depend on the choice.
    """
    iv = lam.interval
    if iv.is_finite():
        window = iv
    else:
        window = minimal_window(iv, lam.tnc, lam.all_dev_cols())
    return defect_in_window(lam, window)


def defect_in_window(lam: Matrix01, window: Interval) -> int:
    kap = kappa(window, lam.tnc)
    cols = window.cols()
    total = 0
    for j in cols:
        kj = sum(kap.entry(i, j) for i in range(lam.tnc.level))
        lj = sum(lam.entry(i, j) for i in range(lam.tnc.level))
        total += kj * kj - lj * lj
    if total % 2:
        raise ValueError("defect is not an integer; window too small?")
    return total // 2


def minimal_window(interval: Interval, tnc: TypeNC,
                   dev_cols: list[int]) -> Interval:
    """A smallest finite window J in I with |J_+| >= 2 max(n) covering dev_cols.

    Deterministic: when padding is needed it is added on the right first,
    falling back to the left at the upper end of a bounded interval.
    """
    width = max(2, 2 * tnc.max_n())  # required |J_+|; J = [a, b] has b - a + 2 columns
    if dev_cols:
        a = dev_cols[0]
        b = max(dev_cols[-1] - 1, a)
    else:
        if interval.lo is not None:
            a = interval.lo
        elif interval.hi is not None:
            a = interval.hi
        else:
            a = 0
        b = a
    if interval.hi is not None and b > interval.hi:
        b = interval.hi  # only possible for empty dev_cols anchored high
    while b - a + 2 < width:
        if interval.hi is None or b < interval.hi:
            b += 1
        elif interval.lo is None or a > interval.lo:
            a -= 1
        else:
            raise ValueError("interval too small for the required window")
    return Interval.finite(a, b)


def in_Lambda_J(lam: Matrix01, window: Interval) -> bool:
    """True when every deviation of lam lies inside J_+."""
    return all(window.contains_col(j) for row in lam.devs for j in row)


def _ineq_values(lam: Matrix01, window: Interval):
    """Evaluate the two truncation inequality families at their jump points.

    Yields (value, family) pairs; every ``low`` value must be >= 0 and every
    ``high`` value <= 0 for membership in Lambda_{<=J}.  The families are
    step functions of h, so evaluating at the deviation-induced jump points
    captures every attained value (the far tails are 0 on both sides).
    """
    level = lam.tnc.level
    devcols = lam.all_dev_cols()
    if not devcols:
        return
    lo_hs = range(devcols[0], window.lo)         # h < min(J)
    hi_hs = range(window.hi + 1, devcols[-1] + 1)  # h > max(J)
    for k in range(1, level + 1):
        for h in lo_hs:
            yield _signed_prefix(lam, k, h), "low"
        for h in hi_hs:
            total = 0
            for i in range(k):
                sign = 1 if lam.tnc.c[i] == 0 else -1
                total += sign * sum(1 for j in lam.devs[i] if j > h)
            yield total, "high"


def in_leq_J(lam: Matrix01, window: Interval) -> bool:
    """Membership in the ideal Lambda_{<=J}."""
    for value, family in _ineq_values(lam, window):
        if family == "low" and value < 0:
            return False
        if family == "high" and value > 0:
            return False
    return True


def in_lt_J(lam: Matrix01, window: Interval) -> bool:
    """Membership in Lambda_{<J}: in Lambda_{<=J} with some strict inequality."""
    strict = False
    for value, family in _ineq_values(lam, window):
        if family == "low":
            if value < 0:
                return False
            if value > 0:
                strict = True
        else:
            if value > 0:
                return False
            if value < 0:
                strict = True
    return strict


def truncate(lam: Matrix01, window: Interval) -> Matrix01:
    """Restrict lam to a finite window J; requires all deviations in J_+."""
    if not window.issubset(lam.interval):
        raise ValueError("window is not a subinterval")
    if not in_Lambda_J(lam, window):
        raise DeviationOutsideWindow(f"{lam.text()} has deviations outside {window.text()}")
    return Matrix01(window, lam.tnc, lam.devs)


def embed(lam: Matrix01, interval: Interval) -> Matrix01:
    """Reinterpret a windowed weight over a larger interval."""
    if not lam.interval.issubset(interval):
        raise ValueError("target interval must contain the window")
    return Matrix01(interval, lam.tnc, lam.devs)


def equivalent_type(tnc: TypeNC, interval: Interval, flips) -> TypeNC:
    """Flip polarity c_i -> 1 - c_i and n_i -> |I_+| - n_i on selected rows.

    The flipped type indexes the same set of 01-matrices.
    """
    flips = set(flips)
    if flips and not interval.is_finite():
        raise IntervalInfinite("type flips require a finite interval")
    z = interval.n_cols() if interval.is_finite() else None
    n = list(tnc.n)
    c = list(tnc.c)
    for i in flips:
        n[i] = z - n[i]
        c[i] = 1 - c[i]
    return TypeNC(tuple(n), tuple(c))


def convert_to_type(lam: Matrix01, tnc: TypeNC) -> Matrix01:
    """Re-express the same 01-matrix relative to an equivalent type."""
    if tnc == lam.tnc:
        return lam
    if not lam.interval.is_finite():
        raise IntervalInfinite("type conversion requires a finite interval")
    cols = lam.interval.cols()
    devs = []
    for i, ci in enumerate(tnc.c):
        devs.append(tuple(j for j in cols if lam.entry(i, j) != ci))
    return Matrix01(lam.interval, tnc, tuple(devs))
