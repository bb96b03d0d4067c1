"""Acceptance gate: every criterion A1..A14 at its stated size and tolerance.

Each test prints one PASS/FAIL line straight to the terminal (also under
``pytest -v`` capture) and then asserts the verdict.
"""
import numpy as np
import pytest

from ghborsuk import SolverOptions, delta_simplex, diameter, gh_exact
from ghborsuk.oracles import brute_force_gh
from ghborsuk.verify import SUITES, random_space

SEED = 20240601

# (suite, instances or suites, tolerance) as stated by the criteria
CRITERIA = [
    ("a1", 200, 1e-12),
    ("a2", 100, 0.0),
    ("a3", 200, 0.0),
    ("a4", 50, 1e-9),
    ("a5", 50, 1e-9),
    ("a6", 30, 1e-9),
    ("a7", 100, 1e-12),
    ("a8", 100, 1e-12),
    ("a9", 50, 0.0),
    ("a10", 7, 0.0),
    ("a11", 30, 1e-12),
    ("a12", 20, 1e-12),
    ("a13", 500, 0.0),
    ("a14", 13, 0.0),
]


def report(capsys, rep):
    with capsys.disabled():
        print()
        print(rep.line())
        for f in rep.failures[:10]:
            print(f"    {f}")
        for note in rep.notes:
            print(f"    note: {note}")


@pytest.mark.parametrize("name, trials, tol", CRITERIA, ids=[c[0].upper() for c in CRITERIA])
def test_criterion(name, trials, tol, capsys):
    rep = SUITES[name](SEED)
    report(capsys, rep)
    assert (rep.trials, rep.tolerance) == (trials, tol)
    assert rep.passed, rep.failures[:10]


def test_a12_small_cases_against_all_correspondences(capsys):
    """The simplex values also hold under the search-free oracle."""
    rng = np.random.default_rng([SEED, 120])
    bad = []
    for t in range(20):
        X = random_space(rng, int(rng.integers(1, 4)))
        for lam in (diameter(X), 2 * diameter(X)):
            if lam == 0:
                continue
            S = delta_simplex(X.n + 1, lam)
            oracle = brute_force_gh(X, S)
            got = gh_exact(X, S, SolverOptions(allow_shortcuts=False)).value
            if abs(oracle - lam / 2) > 1e-12 or got != oracle:
                bad.append((t, lam, oracle, got))
    with capsys.disabled():
        print()
        print(f"{'PASS' if not bad else 'FAIL'} A12 oracle cross-check, n_X <= 3 (20 instances, tol 1e-12)")
    assert not bad
