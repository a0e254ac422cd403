"""Bar involution, canonical bases and graded decomposition polynomials.

The bar involution psi on a finite-interval module is pinned down by three
facts: it fixes every monomial at level <= 1, it commutes with the f_j, and
stripping a highest last row peels off one tensor factor,
psi(m (x) v_kappa_last) = psi'(m) (x) v_kappa_last.  When the last row w of
a monomial is not highest, write w = f_j(w') for the smallest admissible
color j and use

    m (x) v_w = f_j(m (x) v_w') - q (f_j m) (x) v_w'

to push the computation toward monomials whose last row is closer to the
highest one.  Everything is memoized per (interval, type) context.

Canonical basis vectors are the unique psi-invariant elements
b = v_lam + (qZ[q]-combination of higher monomials in the block); they are
computed blockwise from the matrix of psi on monomials by solving the
resulting unitriangular congruences.  d- and p-polynomials are the entries
of the transition matrix and of its inverse at q -> -q.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .errors import IntervalInfinite, NonTriangularBar, StabilityViolation
from .laurent import LaurentInt, one, zero
from .qmodule import ModuleVec, act_e, act_f
from .weights import (
    Interval,
    Matrix01,
    TypeNC,
    WeightPI,
    enumerate_weights,
    kappa,
    minimal_window,
    order_leq,
    truncate,
    weight_of,
)

_qinv = LaurentInt.monomial(-1)

_psi_cache: dict[tuple, dict[Matrix01, ModuleVec]] = {}
_block_cache: dict[tuple, "BlockTable"] = {}


def clear_caches():
    _psi_cache.clear()
    _block_cache.clear()
    _single_block_cache.clear()


def _kappa_row_devs(interval: Interval, n: int, c: int) -> tuple[int, ...]:
    cols = list(interval.cols())
    if c == 0:
        return tuple(cols[:n])
    return tuple(cols[len(cols) - n:])


def _last_row_fj_color(lam: Matrix01) -> int:
    """Smallest color j with the last row showing (0, 1) at columns (j, j+1)."""
    for j in lam.interval.colors():
        if lam.entry(lam.tnc.level - 1, j) == 0 and lam.entry(lam.tnc.level - 1, j + 1) == 1:
            return j
    raise NonTriangularBar("last row is not highest yet admits no lowering")


def psi_monomial(lam: Matrix01) -> ModuleVec:
    """psi(v_lam), memoized per context."""
    if not lam.interval.is_finite():
        raise IntervalInfinite("psi requires a finite interval; use the truncation driver")
    key = (lam.interval, lam.tnc)
    cache = _psi_cache.setdefault(key, {})
    hit = cache.get(lam)
    if hit is not None:
        return hit

    level = lam.tnc.level
    if level <= 1:
        res = ModuleVec.monomial(lam)
        cache[lam] = res
        return res

    kap_last = _kappa_row_devs(lam.interval, lam.tnc.n[-1], lam.tnc.c[-1])
    sub_tnc = lam.tnc.drop_last()
    if lam.devs[-1] == kap_last:
        m = Matrix01(lam.interval, sub_tnc, lam.devs[:-1])
        inner = psi_monomial(m)
        res = ModuleVec(lam.interval, lam.tnc)
        res.terms = {
            Matrix01(lam.interval, lam.tnc, mu.devs + (kap_last,)): c
            for mu, c in inner.terms.items()
        }
        cache[lam] = res
        return res

    j = _last_row_fj_color(lam)
    lam_prime = lam.flip(level - 1, j)
    head = act_f(j, psi_monomial(lam_prime))
    m = Matrix01(lam.interval, sub_tnc, lam.devs[:-1])
    fm = act_f(j, ModuleVec.monomial(m))
    tail = ModuleVec(lam.interval, lam.tnc)
    for mu, c in fm.terms.items():
        piece = psi_monomial(
            Matrix01(lam.interval, lam.tnc, mu.devs + (lam_prime.devs[-1],)))
        tail = tail + piece.scale(c.bar())
    res = head - tail.scale(_qinv)
    cache[lam] = res
    return res


def bar_psi(v: ModuleVec) -> ModuleVec:
    """The antilinear bar involution on a finite-interval module."""
    out = ModuleVec(v.interval, v.tnc)
    for lam, c in v.terms.items():
        out = out + psi_monomial(lam).scale(c.bar())
    return out


class BlockData:
    """One block: members sharing an sl_I weight, with psi/D/P matrices."""

    def __init__(self, interval: Interval, tnc: TypeNC, weight: WeightPI,
                 members: tuple[Matrix01, ...]):
        self.interval = interval
        self.tnc = tnc
        self.weight = weight
        self.members = members  # ascending: position grows with the order
        self._rmat = None
        self._dmat = None
        self._pinv = None

    @property
    def size(self) -> int:
        return len(self.members)

    def position(self, lam: Matrix01) -> int:
        return self.members.index(lam)

    def psi_matrix(self) -> list[dict[int, LaurentInt]]:
        """Row a -> sparse map b -> coefficient of member b in psi(v_a)."""
        if self._rmat is not None:
            return self._rmat
        pos = {m: i for i, m in enumerate(self.members)}
        rows = []
        for a, lam in enumerate(self.members):
            vec = psi_monomial(lam)
            row: dict[int, LaurentInt] = {}
            for mu, c in vec.terms.items():
                b = pos.get(mu)
                if b is None or not order_leq(lam, mu):
                    raise NonTriangularBar(
                        f"psi(v[{lam.text()}]) has support at {mu.text()}")
                row[b] = c
            if row.get(a) != one:
                raise NonTriangularBar(
                    f"psi(v[{lam.text()}]) diagonal coefficient is not 1")
            rows.append(row)
        self._rmat = rows
        return rows

    def d_matrix(self) -> list[dict[int, LaurentInt]]:
        """Unitriangular matrix of d-polynomials: row a, column b."""
        if self._dmat is not None:
            return self._dmat
        r = self.psi_matrix()
        size = len(r)
        rows = []
        for a in range(size):
            d: dict[int, LaurentInt] = {a: one}
            for b in range(a + 1, size):
                s = zero
                for c, dc in d.items():
                    rc = r[c].get(b)
                    if rc is not None:
                        s = s + dc.bar() * rc
                if s:
                    if s.bar() != -s:
                        raise NonTriangularBar(
                            "congruence defect is not bar-antisymmetric")
                    d[b] = LaurentInt({e: cf for e, cf in s.coeffs.items() if e > 0})
            rows.append(d)
        self._dmat = rows
        return rows

    def p_matrix(self) -> list[dict[int, LaurentInt]]:
        """Inverse of the d-matrix (entries are p(-q) before substitution)."""
        if self._pinv is not None:
            return self._pinv
        d = self.d_matrix()
        size = len(d)
        inv: list[dict[int, LaurentInt]] = [dict() for _ in range(size)]
        for a in range(size - 1, -1, -1):
            inv[a][a] = one
            for b in range(a + 1, size):
                s = zero
                for k in range(a + 1, b + 1):
                    dk = d[a].get(k)
                    if dk is None:
                        continue
                    ik = inv[k].get(b)
                    if ik is not None:
                        s = s + dk * ik
                if s:
                    inv[a][b] = -s
        self._pinv = inv
        return inv


class BlockTable:
    """All blocks of one finite context."""

    def __init__(self, interval: Interval, tnc: TypeNC):
        self.interval = interval
        self.tnc = tnc
        self.blocks: list[BlockData] = []
        self._by_weight: dict[WeightPI, int] = {}
        groups: dict[WeightPI, list[Matrix01]] = {}
        for lam in enumerate_weights(interval, tnc):
            groups.setdefault(weight_of(lam), []).append(lam)
        for wt in sorted(groups, key=lambda w: sorted(w.items())):
            members = _linear_extension(groups[wt])
            self._by_weight[wt] = len(self.blocks)
            self.blocks.append(BlockData(interval, tnc, wt, tuple(members)))

    def block_of(self, lam: Matrix01) -> BlockData:
        return self.blocks[self._by_weight[weight_of(lam)]]


_single_block_cache: dict[tuple, BlockData] = {}


def _signed_column_counts(lam: Matrix01) -> dict[int, int]:
    out: dict[int, int] = {}
    for row, ci in zip(lam.devs, lam.tnc.c):
        sign = 1 if ci == 0 else -1
        for j in row:
            out[j] = out.get(j, 0) + sign
    return {j: v for j, v in out.items() if v}


def _block_members_direct(lam: Matrix01) -> tuple[Matrix01, ...]:
    """Enumerate just the block of lam: same type, same signed column counts.

    Two weights of one type share the sl_I weight iff their per-column
    signed deviation counts agree, so the block is generated row by row
    with feasibility pruning instead of enumerating the whole module.
    """
    import itertools

    interval = lam.interval
    tnc = lam.tnc
    target = _signed_column_counts(lam)
    allowed = list(interval.cols())
    rem_plus = [0] * (tnc.level + 1)
    rem_minus = [0] * (tnc.level + 1)
    for i in range(tnc.level - 1, -1, -1):
        rem_plus[i] = rem_plus[i + 1] + (tnc.n[i] if tnc.c[i] == 0 else 0)
        rem_minus[i] = rem_minus[i + 1] + (tnc.n[i] if tnc.c[i] == 1 else 0)
    out = []

    def rec(i, counts, rows):
        if i == tnc.level:
            if not counts:
                out.append(Matrix01(interval, tnc, tuple(rows)))
            return
        sign = 1 if tnc.c[i] == 0 else -1
        for pick in itertools.combinations(allowed, tnc.n[i]):
            nxt = dict(counts)
            for j in pick:
                v = nxt.get(j, 0) - sign
                if v:
                    nxt[j] = v
                else:
                    nxt.pop(j, None)
            ok = True
            for j, v in nxt.items():
                if not (-rem_minus[i + 1] <= v <= rem_plus[i + 1]):
                    ok = False
                    break
            if ok:
                rec(i + 1, nxt, rows + [pick])

    rec(0, dict(target), [])
    return tuple(_linear_extension(out))


def block_data(lam: Matrix01) -> BlockData:
    """The block of lam, from the full-context cache or built directly."""
    if not lam.interval.is_finite():
        raise IntervalInfinite("blocks over infinite intervals can be infinite; "
                               "truncate first")
    key = (lam.interval, lam.tnc)
    table = _block_cache.get(key)
    if table is not None:
        return table.block_of(lam)
    wt = weight_of(lam)
    skey = (lam.interval, lam.tnc, tuple(sorted(wt.items())))
    block = _single_block_cache.get(skey)
    if block is None:
        block = BlockData(lam.interval, lam.tnc, wt, _block_members_direct(lam))
        _single_block_cache[skey] = block
    return block


def _linear_extension(members: list[Matrix01]) -> list[Matrix01]:
    """Sort a block so that lam < mu implies lam comes first.

    The sum of all signed prefix counts over the block's column grid is
    strictly decreasing upward in the order, so it provides a linear
    extension directly; ties are broken by the text form for determinism.
    """
    grid = sorted({j for m in members for row in m.devs for j in row})
    level = members[0].tnc.level if members else 0

    def score(lam: Matrix01) -> int:
        total = 0
        for h in grid:
            acc = 0
            for i in range(level):
                sign = 1 if lam.tnc.c[i] == 0 else -1
                acc += sign * sum(1 for j in lam.devs[i] if j <= h)
                total += acc
        return total

    return sorted(members, key=lambda m: (-score(m), m.text()))


def block_table(interval: Interval, tnc: TypeNC) -> BlockTable:
    key = (interval, tnc)
    table = _block_cache.get(key)
    if table is None:
        table = BlockTable(interval, tnc)
        _block_cache[key] = table
    return table


def canonical_basis(lam: Matrix01) -> ModuleVec:
    """b_lam, the psi-invariant unitriangular basis vector."""
    if not lam.interval.is_finite():
        raise IntervalInfinite("canonical basis requires a finite interval")
    block = block_data(lam)
    d = block.d_matrix()
    a = block.position(lam)
    out = ModuleVec(lam.interval, lam.tnc)
    out.terms = {block.members[b]: c for b, c in d[a].items()}
    return out


def kl_d(lam: Matrix01, mu: Matrix01) -> LaurentInt:
    """The graded decomposition polynomial d_{lam,mu}."""
    if not lam.interval.is_finite():
        raise IntervalInfinite("use kl_d_stable for infinite intervals")
    if weight_of(lam) != weight_of(mu):
        return zero
    block = block_data(lam)
    d = block.d_matrix()
    return d[block.position(lam)].get(block.position(mu), zero)


def kl_p(lam: Matrix01, mu: Matrix01) -> LaurentInt:
    """The inverse-family polynomial p_{lam,mu} (in N[q])."""
    if not lam.interval.is_finite():
        raise IntervalInfinite("kl_p requires a finite interval")
    if weight_of(lam) != weight_of(mu):
        return one if lam == mu else zero
    block = block_data(lam)
    inv = block.p_matrix()
    entry = inv[block.position(lam)].get(block.position(mu), zero)
    return entry.subs_neg_q()


def dual_canonical(mu: Matrix01) -> ModuleVec:
    """b*_mu = sum_lam p_{lam,mu}(-q) v_lam."""
    if not mu.interval.is_finite():
        raise IntervalInfinite("dual canonical basis requires a finite interval")
    block = block_data(mu)
    inv = block.p_matrix()
    b = block.position(mu)
    out = ModuleVec(mu.interval, mu.tnc)
    out.terms = {block.members[a]: inv[a][b]
                 for a in range(block.size) if b in inv[a]}
    return out


def _reverse_rows(lam: Matrix01) -> Matrix01:
    return Matrix01(lam.interval, lam.tnc.reversed(), lam.devs[::-1])


def twisted_canonical(lam: Matrix01) -> ModuleVec:
    """The twisted basis vector, from d-polynomials of the row-reversed type."""
    if not lam.interval.is_finite():
        raise IntervalInfinite("twisted basis requires a finite interval")
    rlam = _reverse_rows(lam)
    block = block_data(rlam)
    d = block.d_matrix()
    a = block.position(rlam)
    out = ModuleVec(lam.interval, lam.tnc)
    out.terms = {_reverse_rows(block.members[b]): c.bar()
                 for b, c in d[a].items()}
    return out


def young_word_dim(lam: Matrix01, word) -> LaurentInt:
    """Graded dimension of a word space of the Young module of lam.

    Computed as q^{def(lam)} (v_kappa, e_{i_1} ... e_{i_d} b_lam), the
    rightmost color acting first: the pairing itself is the self-dual
    normalization q^{-def} of the word-space dimension, so the shift
    restores the dimension proper.
    """
    from .weights import defect

    v = canonical_basis(lam)
    for color in reversed(list(word)):
        v = act_e(color, v)
        if not v:
            return zero
    kap = kappa(lam.interval, lam.tnc)
    val = v.coeff(kap)
    if not val:
        return zero
    return val.shift(defect(lam))


def kl_d_stable(lam: Matrix01, mu: Matrix01) -> LaurentInt:
    """d_{lam,mu} over an infinite interval, via a stable finite window.

    Computes in the minimal admissible window and re-checks at every
    one-column enlargement available inside the interval.
    """
    if lam.interval.is_finite():
        return kl_d(lam, mu)
    if lam.interval != mu.interval or lam.tnc != mu.tnc:
        raise StabilityViolation("weights live over different contexts")
    iv = lam.interval
    devcols = sorted(set(lam.all_dev_cols()) | set(mu.all_dev_cols()))
    window = minimal_window(iv, lam.tnc, devcols)
    base = kl_d(truncate(lam, window), truncate(mu, window))
    for dlo, dhi in ((1, 0), (0, 1), (1, 1)):
        lo = window.lo - dlo
        hi = window.hi + dhi
        if iv.lo is not None and lo < iv.lo:
            continue
        if iv.hi is not None and hi > iv.hi:
            continue
        bigger = Interval.finite(lo, hi)
        again = kl_d(truncate(lam, bigger), truncate(mu, bigger))
        if again != base:
            raise StabilityViolation(
                f"kl_d changed from {base} to {again} when enlarging "
                f"{window.text()} to {bigger.text()}")
    return base


def bar_invariant_completion(c: LaurentInt) -> LaurentInt:
    """The unique bar-invariant polynomial congruent to c modulo qZ[q]."""
    out: dict[int, int] = {}
    if c[0]:
        out[0] = c[0]
    for e, cf in c.coeffs.items():
        if e < 0:
            out[e] = cf
            out[-e] = cf
    return LaurentInt(out)


# ---------------------------------------------------------------------------
# Independent oracle: solve psi(x) = x by generic linear algebra.

def canonical_basis_direct(lam: Matrix01) -> ModuleVec:
    """Solve {psi(x) = x, x in v_lam + sum_{mu > lam} qZ[q] v_mu} directly.

    Independent of the triangular algorithm: sets up the integer linear
    system on the polynomial coefficients and solves it by generic sparse
    Gaussian elimination over Q.  Raises if the solution fails to exist or
    to be unique.
    """
    block = block_data(lam)
    r = block.psi_matrix()
    size = block.size
    pos_lam = block.position(lam)
    upset = [b for b in range(size)
             if b != pos_lam and order_leq(lam, block.members[b])]
    spread = 1
    for row in r:
        for c in row.values():
            if c.coeffs:
                spread = max(spread, abs(c.min_exp()), abs(c.max_exp()))
    for degree_bound in (spread + 2, 2 * spread + size + 4):
        sol = _solve_bar_system(r, size, pos_lam, upset, degree_bound, spread)
        if sol is not None:
            out = ModuleVec(lam.interval, lam.tnc)
            out.terms = {block.members[b]: c for b, c in sol.items() if c}
            return out
    raise NonTriangularBar("oracle system infeasible; degree bound too small")


def _solve_bar_system(r, size, pos_lam, upset, degree_bound, spread):
    """Solve the coefficientwise linear system; None when infeasible."""
    unknowns = [(b, k) for b in upset for k in range(1, degree_bound + 1)]
    index = {u: i for i, u in enumerate(unknowns)}
    nvar = len(unknowns)
    # x = v_lam + sum c_{b,k} q^k v_b with b in the upset;  psi(x) - x = 0.
    # psi(x) = psi(v_lam) + sum c_{b,k} q^{-k} psi(v_b), so the coefficient
    # of q^E at member a reads
    #   r[pos_lam][a][E] + sum_{b,k} c_{b,k} r[b][a][E+k] - x_a[E] = 0.
    exps = range(-degree_bound - spread, max(spread, degree_bound) + 1)
    eqs: list[tuple[dict[int, Fraction], Fraction]] = []
    for a in range(size):
        base = r[pos_lam].get(a, zero)
        contributors = [b for b in upset if a in r[b]]
        for E in exps:
            const = base[E] - (1 if (a == pos_lam and E == 0) else 0)
            entries: dict[int, Fraction] = {}
            for b in contributors:
                rba = r[b][a]
                for k in range(1, degree_bound + 1):
                    c = rba[E + k]
                    if c:
                        entries[index[(b, k)]] = Fraction(c)
            if a in upset and 1 <= E <= degree_bound:
                i = index[(a, E)]
                entries[i] = entries.get(i, Fraction(0)) - 1
                if not entries[i]:
                    del entries[i]
            if const or entries:
                eqs.append((entries, Fraction(-const)))
    assignment: dict[int, Fraction] = {}
    pivoted: list[tuple[int, dict[int, Fraction], Fraction]] = []
    for row, b in eqs:
        for pivot_var, prow, pb in pivoted:
            c = row.get(pivot_var)
            if c is not None:
                del row[pivot_var]
                for v, pc in prow.items():
                    n = row.get(v, Fraction(0)) - c * pc
                    if n:
                        row[v] = n
                    else:
                        row.pop(v, None)
                b = b - c * pb
        if not row:
            if b != 0:
                return None  # infeasible at this degree bound
            continue
        pivot_var = min(row)
        c = row.pop(pivot_var)
        row = {v: pc / c for v, pc in row.items()}
        pivoted.append((pivot_var, row, b / c))
    if len(pivoted) < nvar:
        raise NonTriangularBar("oracle system is underdetermined")
    for pivot_var, row, b in reversed(pivoted):
        val = b
        for v, pc in row.items():
            val -= pc * assignment[v]
        assignment[pivot_var] = val
    sol: dict[int, LaurentInt] = {pos_lam: one}
    for (b_mem, k), i in index.items():
        val = assignment.get(i, Fraction(0))
        if val:
            if val.denominator != 1:
                return None
            cur = sol.get(b_mem, zero)
            sol[b_mem] = cur + LaurentInt.monomial(k, int(val))
    return sol


# ---------------------------------------------------------------------------
# Optional on-disk persistence of the psi memo (SUPERKL_CACHE_DIR).

def _cache_path(cache_dir: str, interval: Interval, tnc: TypeNC) -> str:
    tag = (interval.text().replace(":", "_") + "__n" +
           "-".join(map(str, tnc.n)) + "__c" + "-".join(map(str, tnc.c)))
    return os.path.join(cache_dir, f"psi_{tag}.json")


def save_psi_cache(cache_dir: str) -> int:
    """Persist the in-memory psi memo; returns the number of contexts written."""
    os.makedirs(cache_dir, exist_ok=True)
    written = 0
    for (interval, tnc), entries in _psi_cache.items():
        payload = {
            lam.text(): {mu.text(): sorted(c.coeffs.items())
                         for mu, c in vec.terms.items()}
            for lam, vec in entries.items()
        }
        with open(_cache_path(cache_dir, interval, tnc), "w") as fh:
            json.dump(payload, fh)
        written += 1
    return written


def load_psi_cache(cache_dir: str, interval: Interval, tnc: TypeNC) -> int:
    """Load one context's psi memo if present; returns entries loaded."""
    from .weights import parse_matrix

    path = _cache_path(cache_dir, interval, tnc)
    if not os.path.exists(path):
        return 0
    with open(path) as fh:
        payload = json.load(fh)
    cache = _psi_cache.setdefault((interval, tnc), {})
    for lam_text, vec in payload.items():
        lam = parse_matrix(lam_text, interval, tnc)
        out = ModuleVec(interval, tnc)
        out.terms = {
            parse_matrix(mu_text, interval, tnc): LaurentInt(dict(
                (int(e), c) for e, c in pairs))
            for mu_text, pairs in vec.items()
        }
        cache[lam] = out
    return len(payload)
