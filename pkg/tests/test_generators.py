import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bandwidthkit import ParameterError, caterpillar_view, is_caterpillar, pathwidth
from bandwidthkit.generators import (
    GadgetSpec,
    build_gadget,
    gen_caterpillar,
    gen_skewed_comb,
    gen_tree_bounded_pw,
    validate_skewed_comb,
)
from bandwidthkit.generators.combs import SkewedComb


@pytest.mark.parametrize("b, k, n", [(2, 1, 2), (2, 2, 9), (3, 2, 13), (3, 3, 47)])
def test_comb_sizes(b, k, n):
    # depth 2: two edges, a joining vertex and a stray of 2(b-1)*2 vertices
    comb = gen_skewed_comb(b, k)
    assert comb.tree.n == n
    assert len(comb.levels) == 2 ** (k - 1) - 1


def test_comb_is_a_caterpillar_of_expected_depth():
    comb = gen_skewed_comb(3, 3)
    assert is_caterpillar(comb.tree)
    outer = comb.levels[-1]
    # the inner spines span 4 edges, so the joining vertex is 5 from the far end
    assert outer.depth == 3 and len(outer.stray) == 2 * (3 - 1) * 5


def test_comb_slack():
    assert gen_skewed_comb(2, 2, stray_slack=2).tree.n == 13
    with pytest.raises(ParameterError):
        gen_skewed_comb(2, 2, stray_slack=0.5)
    for b, k in ((1, 1), (2, 3), (3, 0)):
        with pytest.raises(ParameterError):
            gen_skewed_comb(b, k)


def test_validator_catches_short_stray():
    comb = gen_skewed_comb(3, 2)
    lev = comb.levels[0]
    short = type(lev)(lev.depth, lev.x, lev.y, lev.v, lev.stray[:-1])
    bad = SkewedComb(comb.tree, comb.x, comb.y, comb.k, comb.b, (short,))
    with pytest.raises(AssertionError, match="needs 8"):
        validate_skewed_comb(bad)


def test_caterpillar_profiles():
    t = gen_caterpillar(7, [0, 0, 0, (1, 2), 0, 0, 0])
    assert t.n == 10
    view = caterpillar_view(t)
    assert sorted(s.length for s in view.strays) == [1, 2]
    with pytest.raises(ParameterError):
        gen_caterpillar(3, [0, 1])
    with pytest.raises(ParameterError):
        gen_caterpillar(0, 1)
    with pytest.raises(ParameterError):
        gen_caterpillar(2, [0, -1])


def test_random_generators_are_deterministic():
    assert gen_caterpillar(30, 5, seed=3).edges() == gen_caterpillar(30, 5, seed=3).edges()
    assert gen_tree_bounded_pw(80, 2, 9).edges() == gen_tree_bounded_pw(80, 2, 9).edges()
    assert gen_tree_bounded_pw(80, 2, 9).edges() != gen_tree_bounded_pw(80, 2, 10).edges()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 120), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_bounded_pathwidth_generator(n, p, seed):
    t = gen_tree_bounded_pw(n, p, seed)
    assert t.n == n
    assert pathwidth(t) <= p


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 40), st.integers(0, 6), st.integers(0, 10 ** 6))
def test_random_caterpillars_are_caterpillars(spine, max_len, seed):
    assert is_caterpillar(gen_caterpillar(spine, max_len, seed=seed))


@pytest.mark.parametrize("spec, vertices, leaves", [
    (GadgetSpec("wall", 4), 9, {"center": 8}),
    (GadgetSpec("gate", 24, 1), 47, {"center": 46}),
    (GadgetSpec("knot", 24, 2), 36, {"center": 33}),
    (GadgetSpec("hole", 24, 2), 34, {"in_center": 15, "out_center": 15}),
])
def test_gadget_counts(spec, vertices, leaves):
    assert spec.vertex_count == vertices
    assert spec.leaf_counts == leaves
    frag = build_gadget(spec)
    assert frag.tree.n == vertices
    for name, count in leaves.items():
        c = frag.ports[name]
        labelled = set(frag.ports.values())
        assert sum(1 for w in frag.tree.adj[c] if w not in labelled) + (
            sum(1 for w in frag.tree.adj[c] if w in labelled)
            if spec.kind in ("wall", "gate") else 0) == count


def test_gadget_spec_errors():
    with pytest.raises(ParameterError):
        GadgetSpec("bridge", 4)
    with pytest.raises(ParameterError):
        GadgetSpec("gate", 3, 3)
    with pytest.raises(ParameterError):
        GadgetSpec("knot", 22, 2)
    with pytest.raises(ParameterError):
        GadgetSpec("hole", 16, 2)
