import itertools
import random

import pytest

from superkl.errors import (
    DegreeMismatch,
    DeviationOutsideWindow,
    IntervalInfinite,
    TypeMismatch,
)
from superkl.weights import (
    Interval,
    Matrix01,
    TypeNC,
    convert_to_type,
    defect,
    defect_in_window,
    dominance_leq,
    embed,
    enumerate_weights,
    equivalent_type,
    in_Lambda_J,
    in_leq_J,
    in_lt_J,
    kappa,
    minimal_window,
    order_leq,
    parse_matrix,
    truncate,
    weight_of,
)
from conftest import random_infinite_matrix


I00 = Interval.finite(0, 0)
I01 = Interval.finite(0, 1)


def test_enumerate_counts():
    assert len(enumerate_weights(I00, TypeNC((1,), (0,)))) == 2
    assert len(enumerate_weights(I00, TypeNC((1, 1), (0, 1)))) == 4
    ws = enumerate_weights(I01, TypeNC((3,), (0,)))
    assert [w.text() for w in ws] == ["@0:111"]
    with pytest.raises(IntervalInfinite):
        enumerate_weights(Interval.all_z(), TypeNC((1,), (0,)))


def test_enumeration_deterministic_and_sorted():
    ws = enumerate_weights(I01, TypeNC((1,), (0,)))
    assert [w.text() for w in ws] == ["@0:001", "@0:010", "@0:100"]


def test_kappa():
    assert kappa(I01, TypeNC((2,), (0,))).text() == "@0:110"
    assert kappa(I01, TypeNC((1,), (1,))).text() == "@0:110"
    assert kappa(I00, TypeNC((1, 1), (0, 1))).text() == "@0:10/10"


def test_weight_of():
    lam = parse_matrix("110", I01, TypeNC((2,), (0,)))
    assert dict(weight_of(lam)) == {1: 1}
    empty = kappa(I01, TypeNC((0,), (0,)))
    assert dict(weight_of(empty)) == {}
    # single 0 at column j in an all-ones row: -eps_j
    lam = Matrix01(Interval.all_z(), TypeNC((1,), (1,)), ((3,),))
    assert dict(weight_of(lam)) == {2: 1, 3: -1}


def test_weight_of_window_stable():
    # the same deviation data read over growing finite windows stabilizes
    t = TypeNC((1, 2), (1, 0))
    lam_inf = Matrix01(Interval.all_z(), t, ((1,), (0, 2)))
    target = dict(weight_of(lam_inf))
    for pad in range(2, 6):
        window = Interval.finite(-pad, pad)
        fin = truncate(lam_inf, window)
        restricted = {k: v for k, v in weight_of(fin).items()}
        assert restricted == target


def test_dominance():
    assert dominance_leq({0: 1, 1: 1}, {0: 1, 1: 1}, I01)
    assert dominance_leq({0: 1, 1: 1}, {0: 1, 2: 1}, I01)
    assert not dominance_leq({0: 1, 2: 1}, {0: 1, 1: 1}, I01)
    with pytest.raises(DegreeMismatch):
        dominance_leq({0: 1}, {0: 2}, I01)
    # a jump outside I still pins the prefix on the segment inside I
    I05 = Interval.finite(0, 5)
    assert dominance_leq({-5: 1}, {2: 1}, I05)
    assert not dominance_leq({2: 1}, {-5: 1}, I05)


def test_order_basics():
    t = TypeNC((1, 1), (0, 0))
    a = parse_matrix("10/01", I00, t)
    b = parse_matrix("01/10", I00, t)
    assert order_leq(a, a)
    assert order_leq(a, b) and not order_leq(b, a)
    # different sl-weight spaces: incomparable both ways
    t1 = TypeNC((1,), (0,))
    x = parse_matrix("10", I00, t1)
    y = parse_matrix("01", I00, t1)
    assert not order_leq(x, y) and not order_leq(y, x)
    with pytest.raises(TypeMismatch):
        order_leq(x, parse_matrix("10/01", I00, t))


def _poset_axioms(ws):
    import superkl.weights as W
    leq = {(a, b): W.order_leq(a, b) for a in ws for b in ws}
    for a in ws:
        assert leq[(a, a)]
    for a in ws:
        for b in ws:
            if a != b and leq[(a, b)] and leq[(b, a)]:
                return False
    for a in ws:
        for b in ws:
            if not leq[(a, b)]:
                continue
            for c in ws:
                if leq[(b, c)] and not leq[(a, c)]:
                    return False
    return True


def test_order_is_partial_order_small():
    for tnc in (TypeNC((1, 1), (0, 0)), TypeNC((2, 1), (0, 1)),
                TypeNC((1, 1, 1), (0, 1, 0))):
        ws = enumerate_weights(I01, tnc)
        assert _poset_axioms(ws)


def test_kappa_is_unique_maximum_of_its_block():
    for tnc in (TypeNC((1, 1), (0, 0)), TypeNC((2, 2), (0, 0)),
                TypeNC((1, 2), (1, 0))):
        ws = enumerate_weights(I01, tnc)
        kap = kappa(I01, tnc)
        kap_wt = weight_of(kap)
        for w in ws:
            if weight_of(w) == kap_wt:
                assert order_leq(w, kap)
                if order_leq(kap, w):
                    assert w == kap


def test_defect_examples():
    t = TypeNC((1, 1), (0, 0))
    lam = parse_matrix("010/100", I01, t)
    assert defect(lam) == 1
    assert defect(kappa(I01, t)) == 0
    for tnc in (TypeNC((1, 1), (0, 0)), TypeNC((2, 1), (0, 1))):
        for w in enumerate_weights(I01, tnc):
            assert defect(w) >= 0


def test_defect_window_independence(rng):
    t = TypeNC((2, 1), (0, 1))
    for _ in range(25):
        lam = random_infinite_matrix(rng, Interval.all_z(), t)
        base = minimal_window(Interval.all_z(), t, lam.all_dev_cols())
        vals = {defect_in_window(lam, Interval.finite(base.lo - a, base.hi + b))
                for a in range(3) for b in range(3)}
        assert len(vals) == 1
        assert defect(lam) in vals


def test_truncation_sets():
    t = TypeNC((1, 1), (0, 0))
    iv = Interval.finite(-1, 2)
    window = Interval.finite(0, 1)
    ws = enumerate_weights(iv, t)
    for lam in ws:
        inside = in_Lambda_J(lam, window)
        low = in_leq_J(lam, window)
        strict = in_lt_J(lam, window)
        # Lambda_J = Lambda_{<=J} minus Lambda_{<J}
        assert inside == (low and not strict)
    # kappa of the strictly larger window: in <=J but not in Lambda_J
    kap = kappa(iv, t)
    assert in_leq_J(kap, window)
    assert not in_Lambda_J(kap, window)


def test_truncate_and_embed():
    t = TypeNC((1, 1), (0, 0))
    iv = Interval.finite(-1, 2)
    window = Interval.finite(0, 1)
    lam = parse_matrix("@0:10/01", iv, t)
    cut = truncate(lam, window)
    assert cut.interval == window
    assert cut.devs == lam.devs
    assert embed(cut, iv) == lam
    with pytest.raises(DeviationOutsideWindow):
        truncate(kappa(iv, t), window)


def test_truncation_preserves_order(rng):
    t = TypeNC((1, 1), (0, 0))
    iv = Interval.finite(-1, 2)
    window = Interval.finite(-1, 1)
    ws = [w for w in enumerate_weights(iv, t) if in_Lambda_J(w, window)]
    pairs = [(a, b) for a in ws for b in ws]
    rng.shuffle(pairs)
    for a, b in pairs[:40]:
        assert order_leq(a, b) == order_leq(truncate(a, window), truncate(b, window))


def test_equivalent_type():
    t = TypeNC((1,), (0,))
    assert equivalent_type(t, I00, ()) == t
    flipped = equivalent_type(t, I00, {0})
    assert flipped == TypeNC((1,), (1,))
    rows = {w.row_strings()[0] for w in enumerate_weights(I00, t)}
    rows_f = {w.row_strings()[0] for w in enumerate_weights(I00, flipped)}
    assert rows == rows_f == {"10", "01"}
    assert equivalent_type(flipped, I00, {0}) == t
    with pytest.raises(IntervalInfinite):
        equivalent_type(t, Interval.all_z(), {0})


def test_equivalent_type_preserves_order():
    t = TypeNC((1, 2), (0, 0))
    for flips in ({0}, {1}, {0, 1}):
        t2 = equivalent_type(t, I01, flips)
        ws = enumerate_weights(I01, t)
        raw = {tuple(w.row_strings()) for w in ws}
        raw2 = {tuple(w.row_strings()) for w in enumerate_weights(I01, t2)}
        assert raw == raw2
        for a, b in itertools.product(ws, repeat=2):
            a2, b2 = convert_to_type(a, t2), convert_to_type(b, t2)
            assert order_leq(a, b) == order_leq(a2, b2)


def test_interval_parse_roundtrip():
    for text in ("0:3", "z", "geq:-2", "leq:5"):
        assert Interval.parse(text).text() == text


def test_matrix_text_roundtrip():
    t = TypeNC((2, 1), (0, 1))
    for w in enumerate_weights(I01, t):
        assert parse_matrix(w.text(), I01, t) == w
    lam = Matrix01(Interval.all_z(), t, ((0, 3), (1,)))
    assert parse_matrix(lam.text(), Interval.all_z(), t) == lam
