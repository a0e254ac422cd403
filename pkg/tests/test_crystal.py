import pytest

from superkl.crystal import (
    WindowTower,
    crystal_dot,
    crystal_e,
    crystal_edges,
    crystal_f,
    is_prinjective,
    lambda_circ,
    same_block,
)
from superkl.errors import ContextMismatch, IntervalInfinite
from superkl.qmodule import ModuleVec
from superkl.weights import (
    Interval,
    Matrix01,
    TypeNC,
    alpha,
    enumerate_weights,
    kappa,
    parse_matrix,
    weight_of,
)

I00 = Interval.finite(0, 0)
I01 = Interval.finite(0, 1)


def test_crystal_level1():
    t = TypeNC((1,), (0,))
    lam = parse_matrix("10", I00, t)
    assert crystal_f(lam, 0) == parse_matrix("01", I00, t)
    assert crystal_e(parse_matrix("01", I00, t), 0) == lam
    assert crystal_f(parse_matrix("01", I00, t), 0) is None


def test_signature_cancellation():
    # '+' row above '-' row cancels: no edges
    t = TypeNC((1, 1), (0, 0))
    lam = parse_matrix("01/10", I00, t)
    assert crystal_f(lam, 0) is None
    assert crystal_e(lam, 0) is None
    # unlabeled rows give nothing
    t2 = TypeNC((2,), (0,))
    assert crystal_f(parse_matrix("11", I00, t2), 0) is None


def test_lowest_minus_highest_plus():
    # rows -,- : f flips the lowest; e is absent
    t = TypeNC((1, 1), (0, 0))
    lam = parse_matrix("10/10", I00, t)
    assert crystal_f(lam, 0) == parse_matrix("10/01", I00, t)
    assert crystal_e(lam, 0) is None
    mu = parse_matrix("01/01", I00, t)
    assert crystal_e(mu, 0) == parse_matrix("10/01", I00, t)


def test_inverse_edges_and_degree():
    for tnc in (TypeNC((1, 1), (0, 0)), TypeNC((2, 1), (0, 1)),
                TypeNC((1, 1, 1), (0, 1, 0))):
        ws = enumerate_weights(I01, tnc)
        incoming = {}
        for lam in ws:
            for i in I01.colors():
                mu = crystal_f(lam, i)
                if mu is not None:
                    assert crystal_e(mu, i) == lam
                    key = (mu, i)
                    assert key not in incoming
                    incoming[key] = lam
                nu = crystal_e(lam, i)
                if nu is not None:
                    assert crystal_f(nu, i) == lam


def test_edges_respect_weights():
    tnc = TypeNC((2, 1), (0, 1))
    for lam in enumerate_weights(I01, tnc):
        for i in I01.colors():
            mu = crystal_f(lam, i)
            if mu is not None:
                assert weight_of(mu) == weight_of(lam).minus(alpha(i, I01))


def test_same_block():
    t = TypeNC((1, 1), (0, 0))
    a = parse_matrix("10/01", I00, t)
    b = parse_matrix("01/10", I00, t)
    assert same_block(a, a)
    assert same_block(a, b)
    assert not same_block(a, kappa(I00, t))
    with pytest.raises(ContextMismatch):
        same_block(a, kappa(I01, t))


def test_lambda_circ_level1_connected():
    t = TypeNC((1,), (0,))
    assert lambda_circ(I01, t) == set(enumerate_weights(I01, t))
    t0 = TypeNC((), ())
    assert lambda_circ(I01, t0) == {Matrix01(I01, t0, ())}


def test_lambda_circ_proper_subset():
    t = TypeNC((1, 1), (0, 0))
    circ = lambda_circ(I01, t)
    all_w = set(enumerate_weights(I01, t))
    assert circ < all_w
    # the crystal component misses e.g. the weight with a cancelling pattern
    missing = all_w - circ
    assert missing


def test_tower_windows_and_kappas():
    t = TypeNC((1, 1), (0, 0))
    tower = WindowTower(Interval.all_z(), t)
    w1, w2, w3 = (tower.window(r) for r in (1, 2, 3))
    assert w1.issubset(w2) and w2.issubset(w3)
    assert w2.n_cols() == w1.n_cols() + 1
    # half-infinite towers only grow toward the open side
    up = WindowTower(Interval.half_up(2), t)
    assert up.window(1).lo == 2 and up.window(4).lo == 2
    down = WindowTower(Interval.half_down(0), t)
    assert down.window(1).hi == 0 and down.window(4).hi == 0


def test_tower_component_nesting():
    t = TypeNC((1, 1), (0, 0))
    for schedule in ("alternate_lr", "alternate_rl", "left", "right"):
        tower = WindowTower(Interval.all_z(), t, schedule=schedule)
        c1, c2, c3 = (tower.component_r(r) for r in (1, 2, 3))
        assert c1 <= c2 <= c3


def test_bandon_chain_both_directions():
    # growth to the left moves polarity-0 rows, to the right polarity-1 rows
    for t in (TypeNC((1, 1), (0, 0)), TypeNC((2, 1), (0, 1)),
              TypeNC((1, 2), (1, 1)), TypeNC((2, 2), (0, 1))):
        for schedule in ("alternate_lr", "alternate_rl"):
            tower = WindowTower(Interval.all_z(), t, schedule=schedule)
            for r in (1, 2):
                assert tower.bandon_chain(r) == ModuleVec.monomial(tower.kappa_r(r)), \
                    (t, schedule, r)


def test_kappa_r_prinjective():
    t = TypeNC((1, 1), (0, 0))
    tower = WindowTower(Interval.all_z(), t)
    for r in (1, 2, 3):
        assert is_prinjective(tower.kappa_r(r), tower, r + 1) is not None


def test_prinjective_unknown_at_budget():
    t = TypeNC((1, 1), (0, 0))
    tower = WindowTower(Interval.all_z(), t)
    # deviations far outside the first windows
    lam = Matrix01(Interval.all_z(), t, ((40,), (41,)))
    assert is_prinjective(lam, tower, 3) is None


def test_sigma_bookkeeping():
    from fractions import Fraction

    t = TypeNC((2, 1), (0, 1))
    tower = WindowTower(Interval.all_z(), t, schedule="alternate_lr")
    s1 = tower.shift(1)
    assert s1.grew == "left"
    # polarity-0 rows have n = (2,): p = (1, 1), word (s+2)(s+1)
    assert s1.p == (1, 1)
    assert s1.word == (s1.s + 2, s1.s + 1)
    assert s1.sigma == Fraction(2, 2)
    s2 = tower.shift(2)
    assert s2.grew == "right"
    assert s2.p == (1,)
    assert tower.sigma_total(3) == s1.sigma + s2.sigma


def test_crystal_dot_output():
    t = TypeNC((1,), (0,))
    dot = crystal_dot(I00, t)
    assert dot.startswith("digraph")
    assert '"@0:10" -> "@0:01" [label="0"]' in dot
    with pytest.raises(IntervalInfinite):
        crystal_edges(Interval.all_z(), t)
