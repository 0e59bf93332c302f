"""Tests for singular-locus component classification."""

import pytest

from schubsing.components import (
    TYPE_3412_EMPTY,
    TYPE_3412_STAR,
    TYPE_4231,
    ClassificationError,
    classify_component,
    enumerate_components,
    verify_formulas,
)
from schubsing.perms import identity, length, make_permutation
from schubsing.sweep import component_pairs
from schubsing.tangent import tangent_dimension


def test_classify_4231_component():
    c = classify_component(make_permutation([2, 1, 4, 3]), make_permutation([4, 2, 3, 1]))
    assert c.ctype == TYPE_4231
    assert (c.l, c.m, c.codim, c.excess) == (1, 1, 3, 1)


def test_classify_3412_star_component():
    c = classify_component(make_permutation([1, 3, 2, 4]), make_permutation([3, 4, 1, 2]))
    assert c.ctype == TYPE_3412_STAR
    assert (c.l, c.m, c.codim, c.excess) == (0, None, 3, 1)


def test_classify_3412_empty_components():
    """The two aggregate-1 components of S_5, found by exhaustive sweep."""
    first = classify_component(
        make_permutation([1, 3, 2, 5, 4]), make_permutation([3, 5, 1, 4, 2])
    )
    assert first.ctype == TYPE_3412_EMPTY
    assert (first.l, first.m, first.codim, first.excess) == (1, None, 4, 2)
    second = classify_component(
        make_permutation([2, 1, 4, 3, 5]), make_permutation([4, 2, 5, 1, 3])
    )
    assert second.ctype == TYPE_3412_EMPTY
    assert (second.l, second.m, second.codim, second.excess) == (1, None, 4, 2)


def test_smooth_point_pair_is_rejected():
    with pytest.raises(ClassificationError):
        classify_component(identity(4), identity(4))


def test_enumerate_components_smooth():
    assert enumerate_components(make_permutation([1, 2, 3, 4])) == []
    assert enumerate_components(make_permutation([4, 3, 2, 1])) == []


def test_enumerate_components_sorted_by_v():
    for _, comps in _grouped_pairs(5).items():
        values = [c.v.values for c in comps]
        assert values == sorted(values)


def _grouped_pairs(n):
    grouped = {}
    for w, c in component_pairs(n):
        grouped.setdefault(w.values, []).append(c)
    return grouped


@pytest.mark.parametrize("n", [4, 5])
def test_formulas_hold_exhaustively(n):
    for w, c in component_pairs(n):
        assert verify_formulas(c, w), (w.values, c.v.values, c.ctype)


@pytest.mark.parametrize("n", [4, 5])
def test_type_signatures(n):
    for w, c in component_pairs(n):
        d, e = c.codim, c.excess
        if c.ctype == TYPE_4231:
            assert c.l >= 1 and c.m >= 1
            assert d == c.l + c.m + 1
            assert e == c.l * c.m
            assert c.l <= c.m
        elif c.ctype == TYPE_3412_STAR:
            assert c.l >= 0 and c.m is None
            assert d == 2 * c.l + 3
            assert e == 1
        else:
            assert c.ctype == TYPE_3412_EMPTY
            assert c.l >= 1 and c.m is None  # aggregate 0 lands in the star type
            assert d == c.l + 3
            assert e == c.l + 1


@pytest.mark.parametrize("n", [4, 5])
def test_excess_matches_oracle(n):
    for w, c in component_pairs(n):
        rep = tangent_dimension(c.v, w)
        assert rep.dim == length(w) + c.excess
        assert c.codim == length(w) - length(c.v)


def test_s5_component_census():
    """Frozen census from the exhaustive S_5 sweep."""
    counts = {}
    for _, c in component_pairs(5):
        counts[c.ctype] = counts.get(c.ctype, 0) + 1
    assert counts == {TYPE_4231: 20, TYPE_3412_STAR: 19, TYPE_3412_EMPTY: 2}
