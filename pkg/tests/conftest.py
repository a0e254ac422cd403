import random
import sys

import pytest

from superkl.weights import Interval, Matrix01, TypeNC, weight_count


def iter_intervals(max_cols=5):
    """Finite intervals [0, k] with |I_+| between 2 and max_cols."""
    for hi in range(0, max_cols - 1):
        yield Interval.finite(0, hi)


def iter_types(z, max_level=3, polarities=(0,)):
    """All types of level <= max_level over an interval with z columns."""
    ns = range(0, z + 1)
    for level in range(1, max_level + 1):
        stack = [()]
        for _ in range(level):
            stack = [t + (n,) for t in stack for n in ns]
        for n in stack:
            cs = [()]
            for _ in range(level):
                cs = [c + (p,) for c in cs for p in polarities]
            for c in cs:
                yield TypeNC(tuple(n), tuple(c))


def sweep_contexts(max_dim=500, max_cols=5, max_level=3):
    """The acceptance sweep: every (interval, type) with dim <= max_dim.

    Types of level <= 2 run over all polarity patterns; at level 3 only the
    all-zero pattern is kept, since a polarity flip replaces the type by an
    equivalent one indexing the identical set of 01-matrices with the
    identical action formulas (the identification is itself under test in
    the equivalent-type suite).
    """
    for interval in iter_intervals(max_cols):
        z = interval.n_cols()
        for tnc in iter_types(z, min(2, max_level), polarities=(0, 1)):
            if 0 < weight_count(interval, tnc) <= max_dim:
                yield interval, tnc
        if max_level >= 3:
            for tnc in iter_types(z, 3, polarities=(0,)):
                if tnc.level == 3 and 0 < weight_count(interval, tnc) <= max_dim:
                    yield interval, tnc


def random_infinite_matrix(rng, interval, tnc, span=6):
    """A random weight over an infinite interval, deviations within a span."""
    if interval.lo is not None:
        base = interval.lo
    elif interval.hi is not None:
        base = interval.hi + 1 - span
    else:
        base = rng.randint(-4, 0)
    cols = list(range(base, base + span))
    devs = tuple(tuple(sorted(rng.sample(cols, ni))) for ni in tnc.n)
    return Matrix01(interval, tnc, devs)


@pytest.fixture
def rng():
    return random.Random(20240817)


_ACCEPTANCE_LINES = []


def acceptance_line(number, ok, text):
    """Record one pass/fail line per criterion; printed in the summary."""
    status = "PASS" if ok else "FAIL"
    line = f"[acceptance] criterion {number:2d} {status}: {text}"
    _ACCEPTANCE_LINES.append(line)
    sys.__stdout__.write(line + "\n")
    sys.__stdout__.flush()


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
