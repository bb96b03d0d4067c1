import json

import pytest
from hypothesis import given, settings

from ghborsuk import load_space
from ghborsuk.io import dumps_csv, dumps_json, loads_csv, loads_json
from ghborsuk.metric import TriangleViolation

from conftest import metric_spaces


def test_json_document():
    X = loads_json('{"labels": ["p", "q"], "dist": [[0, 2], [2, 0]]}')
    assert X.labels == ("p", "q") and X.dist[0, 1] == 2
    assert json.loads(dumps_json(X)) == {"labels": ["p", "q"], "dist": [[0.0, 2.0], [2.0, 0.0]]}


def test_csv_with_and_without_header():
    assert loads_csv("0,1\n1,0\n").labels == ("0", "1")
    assert loads_csv("a,b\n0,1\n1,0\n").labels == ("a", "b")


def test_loading_validates(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dist": [[0, 1, 3], [1, 0, 1], [3, 1, 0]]}')
    with pytest.raises(TriangleViolation):
        load_space(bad)


@settings(max_examples=60, deadline=None)
@given(metric_spaces(max_n=6))
def test_round_trips_are_exact(X):
    assert loads_json(dumps_json(X)) == X
    assert loads_csv(dumps_csv(X)) == X
