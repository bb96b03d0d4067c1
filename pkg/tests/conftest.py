import numpy as np
import pytest
from hypothesis import strategies as st

from ghborsuk import validate_metric
from ghborsuk.generators import shortest_path_closure

LINE_013 = [[0, 1, 3], [1, 0, 2], [3, 2, 0]]
PATH3 = [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
SQUARE = [[0, 1, 2 ** 0.5, 1], [1, 0, 1, 2 ** 0.5], [2 ** 0.5, 1, 0, 1], [1, 2 ** 0.5, 1, 0]]


@pytest.fixture
def line013():
    return validate_metric(LINE_013)


@pytest.fixture
def square():
    return validate_metric(SQUARE)


@st.composite
def metric_spaces(draw, min_n=1, max_n=5):
    """Random metrics: symmetric positive weights closed under shortest paths."""
    n = draw(st.integers(min_n, max_n))
    w = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            w[i, j] = w[j, i] = draw(st.sampled_from([0.5, 1.0, 1.25, 1.5, 2.0, 3.0]))
    return validate_metric(shortest_path_closure(w))
