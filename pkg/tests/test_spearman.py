import math
import random

import pytest
from hypothesis import given, strategies as st

from lyreval.errors import DomainError
from lyreval.metrics import spearman


def brute_ranks(values):
    """Independent tie-averaged ranks: 1 + #smaller + (#equal - 1)/2."""
    return [
        1.0
        + sum(1 for w in values if w < v)
        + (sum(1 for w in values if w == v) - 1) / 2.0
        for v in values
    ]


def brute_spearman(a, b):
    ra, rb = brute_ranks(a), brute_ranks(b)
    n = len(a)
    ma, mb = math.fsum(ra) / n, math.fsum(rb) / n
    da = [x - ma for x in ra]
    db = [x - mb for x in rb]
    va = math.fsum(x * x for x in da)
    vb = math.fsum(x * x for x in db)
    if va == 0.0 or vb == 0.0:
        return None
    return math.fsum(x * y for x, y in zip(da, db)) / math.sqrt(va * vb)


def test_identity_is_one():
    assert spearman([1.0, 2.0, 3.0], [1.0, 2.0, 3.0]) == pytest.approx(1.0)


def test_reversal_is_minus_one():
    a = [0.1, 0.4, 0.7, 0.9]
    assert spearman(a, list(reversed(a))) == pytest.approx(-1.0)


def test_snowman_pho_columns():
    a = [0.85, 0.92, 0.79, 0.90]
    b = [0.73, 0.80, 0.73, 0.88]
    value = spearman(a, b)
    assert value == pytest.approx(0.7385, abs=1e-3)
    assert value == pytest.approx(brute_spearman(a, b), abs=1e-12)


def test_constant_input_is_undefined():
    assert spearman([1.0, 2.0, 3.0], [5.0, 5.0, 5.0]) is None
    assert spearman([2.0, 2.0], [1.0, 3.0]) is None


def test_length_mismatch_and_short_input():
    with pytest.raises(DomainError, match="equal-length"):
        spearman([1.0, 2.0], [1.0])
    with pytest.raises(DomainError, match="at least two"):
        spearman([1.0], [1.0])


def test_thousand_random_vectors_match_brute_force():
    rng = random.Random(20240701)
    checked = 0
    for _ in range(1000):
        n = rng.randint(2, 20)
        # small value alphabet forces plenty of ties
        a = [rng.choice([0.0, 0.25, 0.5, 0.75, 1.0, rng.random()]) for _ in range(n)]
        b = [rng.choice([0.0, 0.25, 0.5, 0.75, 1.0, rng.random()]) for _ in range(n)]
        expected = brute_spearman(a, b)
        got = spearman(a, b)
        if expected is None:
            assert got is None
        else:
            assert got == pytest.approx(expected, abs=1e-9)
            checked += 1
    assert checked > 500  # most draws have rank variance


def test_against_scipy_when_available():
    scipy_stats = pytest.importorskip("scipy.stats")
    import warnings

    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 15)
        a = [rng.choice([1, 2, 3, 4]) * 1.0 for _ in range(n)]
        b = [rng.random() for _ in range(n)]
        ours = spearman(a, b)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")  # constant inputs are part of the comparison
            theirs = scipy_stats.spearmanr(a, b).statistic
        if ours is None:
            assert math.isnan(theirs)
        else:
            assert ours == pytest.approx(theirs, abs=1e-9)


@given(
    st.lists(st.floats(min_value=-100, max_value=100, allow_nan=False), min_size=2, max_size=20),
    st.data(),
)
def test_symmetry_and_monotone_invariance(a, data):
    a = [round(x, 3) for x in a]  # keep the affine transform collision-free
    b = data.draw(
        st.lists(
            st.floats(min_value=-100, max_value=100, allow_nan=False),
            min_size=len(a), max_size=len(a),
        )
    )
    b = [round(x, 3) for x in b]
    forward = spearman(a, b)
    backward = spearman(b, a)
    if forward is None:
        assert backward is None
        return
    assert forward == pytest.approx(backward, abs=1e-12)
    # strictly increasing transforms preserve ranks exactly
    transformed = spearman([3.0 * x + 11.0 for x in a], b)
    assert transformed == pytest.approx(forward, abs=1e-12)


def test_result_always_in_closed_interval():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(2, 10)
        a = [rng.random() for _ in range(n)]
        b = [rng.random() for _ in range(n)]
        value = spearman(a, b)
        assert value is None or -1.0 - 1e-12 <= value <= 1.0 + 1e-12
