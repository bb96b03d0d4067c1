import math

import pytest
from hypothesis import given, settings

from ghborsuk import (borsuk_number, can_partition_smaller, delta_simplex, diameter_graph,
                      generalized_borsuk_via_gh, is_dLS_n, partition_diameter, validate_metric)
from ghborsuk.borsuk import CardinalOutOfRange, LambdaOutOfRange, SinglePoint
from ghborsuk.generators import embedded_simplex
from ghborsuk.oracles import brute_force_borsuk

from conftest import SQUARE, metric_spaces


def two_points():
    return validate_metric([[0, 1], [1, 0]])


def test_diameter_graphs():
    assert len(diameter_graph(delta_simplex(4)).edges) == 6
    assert sorted(diameter_graph(validate_metric(SQUARE)).edges) == [(0, 2), (1, 3)]
    assert list(diameter_graph(two_points()).edges) == [(0, 1)]


@pytest.mark.parametrize("m", range(2, 9))
def test_simplex_number(m):
    res = borsuk_number(delta_simplex(m))
    assert res.number == m and res.epsilon == 1.0


def test_square_and_two_points():
    sq = validate_metric(SQUARE)
    res = borsuk_number(sq)
    assert res.number == 2
    assert res.witness.blocks == ((0, 1), (2, 3))
    assert res.epsilon == pytest.approx(math.sqrt(2) - 1)
    assert res.to_dict()["beta"] == 2
    assert borsuk_number(two_points()).number == 2


def test_single_point_is_rejected():
    with pytest.raises(SinglePoint):
        borsuk_number(delta_simplex(1))


def test_partition_smaller():
    assert can_partition_smaller(delta_simplex(3), 2) == (False, None)
    ok, part = can_partition_smaller(validate_metric(SQUARE), 2)
    assert ok and len(part) == 2
    assert partition_diameter(validate_metric(SQUARE), part) < math.sqrt(2)
    ok, part = can_partition_smaller(delta_simplex(4), 4)
    assert ok and len(part) == 4
    with pytest.raises(CardinalOutOfRange):
        can_partition_smaller(delta_simplex(3), 4)


def test_dls():
    assert is_dLS_n(delta_simplex(3), 2)
    assert not is_dLS_n(delta_simplex(3), 3)
    assert is_dLS_n(two_points(), 1)


def test_dichotomy_examples():
    rep = generalized_borsuk_via_gh(delta_simplex(3), 2, 0.5)
    assert not rep.partition_exists and 2 * rep.gh_value == 1.0 and rep.holds
    rep = generalized_borsuk_via_gh(validate_metric(SQUARE), 2, 0.7)
    assert rep.partition_exists and 2 * rep.gh_value < math.sqrt(2) and rep.holds
    rep = generalized_borsuk_via_gh(validate_metric(SQUARE), 4, 1.0)
    assert rep.partition_exists and rep.strictly_below
    with pytest.raises(LambdaOutOfRange):
        generalized_borsuk_via_gh(delta_simplex(3), 2, 1.0)


@pytest.mark.parametrize("n, k", [(5, 2), (6, 3), (7, 5), (8, 8)])
def test_embedded_simplex_has_the_block_number(n, k):
    assert borsuk_number(embedded_simplex(n, k, seed=n * k)).number == k


@settings(max_examples=100, deadline=None)
@given(metric_spaces(min_n=2, max_n=7))
def test_matches_partition_oracle(X):
    res = borsuk_number(X)
    assert res.number == brute_force_borsuk(X)
    assert len(res.witness) == res.number
    assert partition_diameter(X, res.witness) < res.diam
    assert res.epsilon == res.diam - partition_diameter(X, res.witness)
