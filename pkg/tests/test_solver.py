import json

import numpy as np
import pytest
from hypothesis import given, settings

from ghborsuk import (SolverOptions, TooLarge, delta_simplex, diameter, distortion,
                      enumerate_irreducible, gh_bounds, gh_exact, gh_scaled, gh_shortcut,
                      is_irreducible, one_point, scale, validate_metric)
from ghborsuk.correspondences import block_distortion
from ghborsuk.generators import generate, parse_spec
from ghborsuk.oracles import brute_force_gh

from conftest import PATH3, SQUARE, metric_spaces

SEARCH = SolverOptions(allow_shortcuts=False)


def two_points(d):
    return validate_metric([[0, d], [d, 0]])


def test_bounds():
    X = validate_metric(PATH3)
    assert gh_bounds(X, X) == (0, 1)
    assert gh_bounds(delta_simplex(2, 1), delta_simplex(2, 3)) == (1, 1.5)
    assert gh_bounds(one_point(), X) == (1, 1)


def test_exact_examples():
    X = validate_metric(PATH3)
    res = gh_exact(X, X, SEARCH)
    assert res.value == 0 and res.witness.sorted_pairs() == [(0, 0), (1, 1), (2, 2)]
    assert gh_exact(one_point(), X, SEARCH).value == 1
    assert gh_exact(two_points(1), two_points(2), SEARCH).value == 0.5


def test_shortcut_examples():
    X = validate_metric(SQUARE)
    assert gh_shortcut(one_point(), X).method == "shortcut-Δ1"
    res = gh_shortcut(scale(X, 2), scale(X, 3))
    assert res.method == "shortcut-scaling" and res.value == pytest.approx(diameter(X) / 2)
    res = gh_shortcut(two_points(1), delta_simplex(3), beta_y=3)
    assert res.method == "shortcut-borsuk" and res.value == 0.5
    assert gh_exact(two_points(1), delta_simplex(3), SEARCH).value == 0.5
    assert gh_shortcut(validate_metric(PATH3), X) is None


def test_exact_uses_shortcuts_by_default():
    assert gh_exact(two_points(1), delta_simplex(3)).method == "shortcut-borsuk"
    assert gh_exact(two_points(1), delta_simplex(3), SEARCH).method == "search"


def test_scaled():
    base = gh_exact(two_points(1), two_points(2), SEARCH)
    assert gh_scaled(two_points(1), two_points(2), 1, base) == base
    assert gh_scaled(two_points(1), two_points(2), 2, base).value == 1.0
    assert gh_scaled(two_points(1), two_points(2), 0, base).value == 0


def test_too_large():
    big = generate(parse_spec("synthetic:11"))
    with pytest.raises(TooLarge):
        gh_exact(big, one_point(), SolverOptions(max_points=10, allow_shortcuts=False))


def test_result_json_shape():
    doc = json.loads(gh_exact(two_points(1), two_points(2), SEARCH).to_json())
    assert set(doc) == {"value", "method", "lower", "upper", "witness"}
    assert doc["witness"] == [[0, 0], [1, 1]]


@settings(max_examples=40, deadline=None)
@given(metric_spaces(max_n=4), metric_spaces(max_n=4))
def test_matches_brute_force_and_witness_is_lex_first(X, Y):
    res = gh_exact(X, Y, SEARCH)
    assert res.value == brute_force_gh(X, Y)
    assert is_irreducible(res.witness)
    assert distortion(X, Y, res.witness) == 2 * res.value
    first = next(B.correspondence() for B in enumerate_irreducible(X.n, Y.n)
                 if block_distortion(X, Y, B) == 2 * res.value)
    assert res.witness.sorted_pairs() == first.sorted_pairs()


@settings(max_examples=40, deadline=None)
@given(metric_spaces(min_n=2, max_n=6), metric_spaces(min_n=2, max_n=6))
def test_symmetric_and_within_bounds(X, Y):
    a, b = gh_exact(X, Y, SEARCH), gh_exact(Y, X, SEARCH)
    assert a.value == b.value
    assert a.lower <= a.value <= a.upper


@pytest.mark.parametrize("spec_x, spec_y", [
    ("polygon:10", "polygon:9"),
    ("synthetic:10:1:1", "euclidean:10:2:1:2"),
    ("sphere-sample:9:3:1:3", "synthetic:10:1:4"),
])
def test_worker_count_does_not_change_the_answer(spec_x, spec_y):
    X, Y = generate(parse_spec(spec_x)), generate(parse_spec(spec_y))
    one = gh_exact(X, Y, SEARCH)
    four = gh_exact(X, Y, SolverOptions(allow_shortcuts=False, worker_count=4))
    assert one.to_json() == four.to_json()


def test_frozen_values_at_ten_points():
    X, Y = generate(parse_spec("polygon:10")), generate(parse_spec("polygon:9"))
    assert gh_exact(X, Y, SEARCH).value == 0.5
