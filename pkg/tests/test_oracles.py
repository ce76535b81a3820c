from fractions import Fraction

import pytest
from hypothesis import given, settings

from bandwidthkit import (
    ParameterError,
    TooLargeError,
    Tree,
    bandwidth_of_layout,
    complete_binary_tree,
    exact_bandwidth_bruteforce,
    exact_bandwidth_saxe,
    is_layout,
    local_density,
    local_density_enumerate,
    lower_bounds_report,
    path_tree,
    saxe_decide,
    star_tree,
)
from bandwidthkit.oracles import distance_matrix, guards

from conftest import all_trees, naive_bandwidth, trees


def test_bruteforce_values():
    assert exact_bandwidth_bruteforce(path_tree(6))[0] == 1
    assert exact_bandwidth_bruteforce(star_tree(4))[0] == 2
    assert exact_bandwidth_bruteforce(star_tree(6))[0] == 3
    assert exact_bandwidth_bruteforce(Tree(((),))) == (0, [1])


def test_bruteforce_matches_permutations():
    for t in all_trees(7, n_min=2):
        bw, layout = exact_bandwidth_bruteforce(t)
        assert bw == naive_bandwidth(t)
        assert is_layout(t, layout) and bandwidth_of_layout(t, layout) == bw


def test_saxe_values():
    assert saxe_decide(path_tree(8), 1) is not None
    assert saxe_decide(star_tree(4), 1) is None
    layout = saxe_decide(star_tree(4), 2)
    assert bandwidth_of_layout(star_tree(4), layout) == 2
    assert exact_bandwidth_saxe(star_tree(6))[0] == 3
    assert exact_bandwidth_saxe(complete_binary_tree(3))[0] == 3


def test_saxe_agrees_with_bruteforce_on_small_trees():
    for t in all_trees(7):
        bw = exact_bandwidth_bruteforce(t)[0]
        for b in (1, 2, 3):
            layout = saxe_decide(t, b)
            assert (layout is not None) == (bw <= b)
            if layout is not None:
                assert bandwidth_of_layout(t, layout) <= b


def test_local_density_values():
    assert local_density(star_tree(4))[0] == 2
    assert local_density(path_tree(5))[0] == 1
    d, w = local_density(complete_binary_tree(3))
    # frozen from the subset enumeration over all 2^15 vertex sets
    assert d == Fraction(7, 3)
    assert w.count == 15 and w.diameter == 6
    with pytest.raises(ParameterError):
        local_density(Tree(((),)))


def test_density_methods_agree():
    for t in all_trees(8, n_min=2):
        assert local_density(t)[0] == local_density_enumerate(t)


@settings(max_examples=40, deadline=None)
@given(trees(min_n=2, max_n=11))
def test_density_methods_agree_random(t):
    assert local_density(t)[0] == local_density_enumerate(t)


def test_lower_bounds_report():
    assert lower_bounds_report(path_tree(10)) == (1, 1)
    assert lower_bounds_report(star_tree(4)) == (2, 1)
    assert lower_bounds_report(Tree(((),))) == (0, 0)


def test_distance_matrix():
    m = distance_matrix(path_tree(4))
    assert m.tolist() == [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]


def test_guards(monkeypatch):
    monkeypatch.delenv("BANDWIDTHKIT_GUARDS", raising=False)
    assert guards() == {"brute": 10, "saxe": 4}
    with pytest.raises(TooLargeError) as err:
        exact_bandwidth_bruteforce(path_tree(11))
    assert err.value.total == 11
    with pytest.raises(TooLargeError):
        saxe_decide(path_tree(3), 5)
    monkeypatch.setenv("BANDWIDTHKIT_GUARDS", "brute=11, saxe=5")
    assert guards() == {"brute": 11, "saxe": 5}
    assert exact_bandwidth_bruteforce(path_tree(11))[0] == 1
    monkeypatch.setenv("BANDWIDTHKIT_GUARDS", "nope=3")
    with pytest.raises(ParameterError):
        guards()
    monkeypatch.setenv("BANDWIDTHKIT_GUARDS", "brute=x")
    with pytest.raises(ParameterError):
        guards()


def test_saxe_parameter_errors():
    for bad in (0, -2, 1.5, True):
        with pytest.raises(ParameterError):
            saxe_decide(path_tree(3), bad)
    with pytest.raises(TooLargeError):
        exact_bandwidth_saxe(star_tree(9), b_max=3)
