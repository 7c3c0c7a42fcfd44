from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from symsextic.hilbert import (HilbertSamples, InconsistentSamplesError, OddCubic, fit_odd_cubic,
                               hypersurface_hilbert, n_closed, weighted_sections_dim)

W = (1, 1, 1, 1, 2)


def test_weighted_counts():
    assert weighted_sections_dim(W, 2) == 11
    assert weighted_sections_dim(W, 4) == 46
    assert weighted_sections_dim((1, 1, 1, 1), 0) == 1
    assert weighted_sections_dim(W, -1) == 0


def test_unit_weights_match_binomials():
    for v in range(1, 7):
        for d in range(31):
            assert weighted_sections_dim((1,) * v, d) == comb(d + v - 1, v - 1)


@pytest.mark.parametrize("p,h", [(1, 11), (2, 46), (5, 535), (-1, 0)])
def test_hypersurface_examples(p, h):
    assert hypersurface_hilbert(W, 6, 2, p) == h


def test_restriction_sequence_matches_closed_forms():
    for p in range(1, 51):
        h = hypersurface_hilbert(W, 6, 2, p)
        assert h == n_closed(p) + n_closed(p - 1) + n_closed(p - 2) == 4 * p**3 + 7 * p


def test_fit_examples():
    assert fit_odd_cubic(HilbertSamples.of([(1, 11), (2, 46)])) == OddCubic(4, 7)
    assert fit_odd_cubic(HilbertSamples.of([(1, 11), (2, 46), (5, 535)])) == OddCubic(4, 7)
    assert fit_odd_cubic(HilbertSamples.of([(1, 1), (2, 2)])) == OddCubic(0, 1)


def test_fit_rejects_inconsistent_and_even_data():
    with pytest.raises(InconsistentSamplesError):
        fit_odd_cubic(HilbertSamples.of([(1, 11), (2, 46), (3, 130)]))
    with pytest.raises(InconsistentSamplesError):
        fit_odd_cubic(HilbertSamples.of([(p, p * p + 1) for p in range(1, 6)]))
    with pytest.raises(ValueError):
        HilbertSamples.of([(1, 2), (1, 3)])


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50),
       st.lists(st.integers(-30, 30), min_size=2, max_size=6, unique=True).filter(lambda ps: len([p for p in ps if p]) >= 2))
def test_fit_recovers_any_odd_cubic(a, b, ps):
    h = OddCubic(a, b)
    assert fit_odd_cubic(HilbertSamples.of((p, h(p)) for p in ps)) == h
