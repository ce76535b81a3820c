import pytest
from hypothesis import given, settings

from bandwidthkit import (
    ParameterError,
    PreconditionError,
    Tree,
    approximate_bandwidth,
    bandwidth_of_layout,
    cat_alg,
    complete_binary_tree,
    exact_bandwidth_bruteforce,
    is_caterpillar,
    is_layout,
    path_tree,
    pathwidth,
    saxe_decide,
    search_smallest_b,
    tree_alg,
)
from bandwidthkit.generators import gen_caterpillar, gen_skewed_comb, gen_tree_bounded_pw

from conftest import all_trees, trees


def test_p1_delegates_to_cat_alg():
    for seed in range(10):
        t = gen_caterpillar(15, 6, seed=seed)
        for b in (1, 2):
            res = tree_alg(t, 1, b)
            cat = cat_alg(t, b)
            assert res.accepted == cat.accepted
            assert res.layout == cat.layout


def test_p1_requires_caterpillar():
    with pytest.raises(PreconditionError):
        tree_alg(complete_binary_tree(3), 1, 2)


def test_complete_binary_tree_height_three():
    t = complete_binary_tree(3)
    res = tree_alg(t, 2, 2)
    assert res.accepted
    assert res.ratio_bound == 37_748_736
    bw = bandwidth_of_layout(t, res.layout)
    assert bw <= res.certified_bound <= res.ratio_bound
    assert res.certified_bound == 768 * 8 * 384
    # the true bandwidth is 3 (windowed search), the layout stays tiny
    assert saxe_decide(t, 2) is None and saxe_decide(t, 3) is not None
    assert bw <= 4 * t.n


def test_never_rejects_when_bandwidth_fits():
    for t in all_trees(9, n_min=2):
        bw = exact_bandwidth_bruteforce(t)[0]
        p = max(1, pathwidth(t))
        for b in (bw, bw + 1):
            assert tree_alg(t, p, b).accepted, t


def test_ten_vertex_non_caterpillar():
    # smallest non-caterpillar: three branch vertices around a centre
    t = Tree.from_edges([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)],
                        n=10)
    assert not is_caterpillar(t) and pathwidth(t) == 2
    bw = exact_bandwidth_bruteforce(t)[0]
    assert bw == 3
    for b in range(bw, bw + 3):
        assert tree_alg(t, 2, b).accepted


def test_driver_on_path_and_spider():
    b, layout = approximate_bandwidth(path_tree(20))
    assert b == 1 and bandwidth_of_layout(path_tree(20), layout) == 1
    spider = Tree.from_edges([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)], n=9)
    exact = exact_bandwidth_bruteforce(spider)[0]
    assert exact == 2
    b, layout = approximate_bandwidth(spider)
    assert b <= exact
    assert bandwidth_of_layout(spider, layout) <= (768 * b ** 3) ** max(1, pathwidth(spider))


def test_driver_on_small_comb():
    comb = gen_skewed_comb(2, 2).tree
    log = []
    b, res = search_smallest_b(comb, log=log)
    exact = exact_bandwidth_bruteforce(comb)[0]
    assert exact >= 2
    # every rejected b is certified below the true bandwidth
    for attempt in log[:-1]:
        assert not attempt.accepted and attempt.b < exact
    assert b <= exact and res.accepted


def test_tighten_p_and_debug():
    for seed in range(4):
        t = gen_tree_bounded_pw(120, 3, seed)
        p = max(1, pathwidth(t))
        loose = tree_alg(t, p, 3, debug=True)
        tight = tree_alg(t, p, 3, tighten_p=True, debug=True)
        for res in (loose, tight):
            if res.accepted:
                assert is_layout(t, res.layout)
                assert bandwidth_of_layout(t, res.layout) <= res.certified_bound


def test_trace_records_levels():
    res = tree_alg(complete_binary_tree(3), 2, 2)
    steps = [e["step"] for e in res.trace]
    assert steps[0] == "decompose" and "caterpillar" in steps
    assert res.trace[0]["accepted"] and res.trace[0]["bandwidth"] == bandwidth_of_layout(
        complete_binary_tree(3), res.layout)


def test_parameter_errors():
    for p, b in ((0, 1), (1, 0), (1.0, 1), (True, 1)):
        with pytest.raises(ParameterError):
            tree_alg(path_tree(3), p, b)
    with pytest.raises(PreconditionError):
        tree_alg(complete_binary_tree(5), 2, 3)


@settings(max_examples=40, deadline=None)
@given(trees(min_n=2, max_n=80))
def test_tree_alg_bounds_random(t):
    p = max(1, pathwidth(t))
    for b in (1, 2):
        res = tree_alg(t, p, b)
        if res.accepted:
            bw = bandwidth_of_layout(t, res.layout)
            assert bw <= res.certified_bound <= (768 * b ** 3) ** p
