from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ascgraph.cohomology import enumerate_basis
from ascgraph.differential import (OrderWord, ReductionError, coboundary, compare_orders,
                                   contracts_properly, graph_order, homotopy, homotopy_identity,
                                   homotopy_sum, order_of, reduce_to_simple, renumber_with_gap,
                                   sorted_order, splittings, symbol, symbol_coefficient,
                                   vertex_class_key, wheel, wheel_product)
from ascgraph.graphs import (ASCENDING, AerialGraph, GraphSum, cycle_graph, disjoint_union,
                             enumerate_graphs, is_admissible, is_symmetric, symmetrize,
                             unrestricted)

POINT = AerialGraph([()])
LOOP = AerialGraph([(1,)])


def generators(nmax, max_out):
    for n in range(1, nmax + 1):
        for g in enumerate_graphs(n, max_out):
            s = symmetrize(g)
            if s and min(s.graphs()) == g:
                yield s


def test_renumber_with_gap():
    assert renumber_with_gap(LOOP, 1) == {0: (0,)}
    g = AerialGraph([(2,), ()])
    assert renumber_with_gap(g, 0) == {1: (2,), 2: ()}
    assert renumber_with_gap(g, 1) == {0: (2,), 2: ()}
    with pytest.raises(ValueError):
        renumber_with_gap(g, 3)


def test_proper_contraction():
    # a (1,1) cycle vertex split into two (1,1) vertices
    assert contracts_properly({0: (1,), 1: (0,)}, 0, 1, "ij")
    # bare vertex split into one arrow
    assert contracts_properly({0: (1,), 1: ()}, 0, 1, "ij")
    assert contracts_properly({0: (), 1: (0,)}, 0, 1, "ji")
    # j keeps only the new arrow while i takes an old out-arrow
    assert not contracts_properly({0: (1, 2), 1: (), 2: (0,)}, 0, 1, "ij")


def test_splittings_of_a_point_are_inadmissible():
    assert splittings(POINT, 0, 1, ASCENDING) == []


def test_splittings_of_a_loop():
    out = splittings(LOOP, 0, 1, ASCENDING, with_descriptors=True)
    assert out
    for h, s, desc in out:
        assert h.n == 2
        assert set(zip(h.in_degrees, h.out_degrees)) == {(1, 1)}


def test_split_sign_spot_check():
    # out-degrees 1, 1 and t = 1: (-1)^(q1 q0) = -1
    for h, s, desc in splittings(LOOP, 0, 1, ASCENDING, with_descriptors=True):
        if desc.orientation == "ji" and desc.r == 0 and desc.pos == 1:
            assert h.out_degrees == (1, 1)
            assert s == -1


def test_splittings_reject_bad_pair():
    with pytest.raises(ValueError):
        splittings(LOOP, 1, 1, ASCENDING)


def test_cocycle_examples():
    assert not coboundary(symmetrize(POINT), ASCENDING)
    for k in (1, 3, 5):
        assert not coboundary(wheel(k), ASCENDING)


def test_d_squared_ascending():
    for mode in ("include", "exclude"):
        for n in range(1, 5):
            sl = enumerate_basis(n, ASCENDING, mode)
            for c in range(len(sl)):
                assert not coboundary(coboundary(sl.vector(c), ASCENDING), ASCENDING)


def test_d_squared_unrestricted_small():
    pol = unrestricted(2)
    for s in generators(2, 2):
        assert not coboundary(coboundary(s, pol), pol)


def test_coboundary_keeps_symmetry_and_degrees():
    pol = unrestricted(2)
    for s in generators(2, 2):
        d = coboundary(s, pol)
        assert is_symmetric(d)
        arrows = {g.arrow_count for g in s.graphs()}
        for h in d.graphs():
            assert h.n == s.n + 1
            assert {h.arrow_count - 1} == arrows
            assert is_admissible(h, pol)


def test_known_unrestricted_coboundary():
    # frozen from the splitting enumeration, cross-checked by the tensor oracle
    d = coboundary(symmetrize(POINT), unrestricted(1))
    assert d == GraphSum(2, [(AerialGraph([(2,), ()]), 1), (AerialGraph([(), (1,)]), 1)])


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 60), st.integers(-3, 3), st.integers(-3, 3))
def test_coboundary_is_linear(k, a, b):
    pol = unrestricted(2)
    gens = list(generators(2, 2))
    x, y = gens[k % len(gens)], gens[(k * 7 + 1) % len(gens)]
    if x.n != y.n:
        return
    lhs = coboundary(x.scale(a) + y.scale(b), pol)
    assert lhs == coboundary(x, pol).scale(a) + coboundary(y, pol).scale(b)


def test_class_order():
    keys = [vertex_class_key(f, l) for f, l in [(0, 3), (1, 2), (1, 1), (0, 1), (0, 0)]]
    assert keys == sorted(keys, reverse=True)
    assert vertex_class_key(0, 3) > vertex_class_key(0, 2)
    # same l: larger f wins; otherwise larger l wins
    assert vertex_class_key(2, 3) > vertex_class_key(1, 3) > vertex_class_key(1, 2)


def test_graph_orders():
    w = graph_order(cycle_graph(3))
    assert w.types == ((1, 1),) * 3
    assert w.boundaries == (1, 1, 4, 4)
    assert sorted_order(AerialGraph([(), (2,)])).types == ((1, 1), (0, 0))
    with pytest.raises(ValueError):
        compare_orders(w, graph_order(LOOP))
    assert compare_orders(w, w) == 0


def test_plus_11_inserts_after_the_11_segment():
    types = ((0, 2), (1, 1), (0, 1), (0, 0))
    w = OrderWord(tuple(vertex_class_key(f, l) for f, l in types), types)
    assert w.plus_11().types == ((0, 2), (1, 1), (1, 1), (0, 1), (0, 0))


def test_order_bound_ascending():
    for n in range(1, 4):
        sl = enumerate_basis(n, ASCENDING, "include")
        for c in range(len(sl)):
            v = sl.vector(c)
            d = coboundary(v, ASCENDING)
            assert not d or order_of(d) <= order_of(v).plus_11()


def test_symbol():
    r3 = wheel(3)
    assert symbol(r3) == r3
    single = GraphSum.single(AerialGraph([(2,), ()]))
    assert symbol(single) == single
    mixed = symmetrize(AerialGraph([(), (2,)])) + symmetrize(AerialGraph([(2,), (1,)])).scale(0)
    # the word is read in label order, so only the loop-first term is maximal
    assert symbol(mixed) == GraphSum.single(AerialGraph([(1,), ()]))
    two = GraphSum(2, [(AerialGraph([(2,), ()]), 1), (AerialGraph([(), ()]), 5)])
    assert symbol(two) == GraphSum.single(AerialGraph([(2,), ()]))
    with pytest.raises(ValueError):
        symbol(GraphSum.zero(1))


def test_homotopy_of_cycles():
    assert homotopy(cycle_graph(2)) == (LOOP, 1)
    for k in (3, 4):
        assert homotopy(cycle_graph(k)) == (cycle_graph(k - 1), 1)
    assert homotopy(AerialGraph([(), (), ()])) is None
    assert homotopy(LOOP) is None
    assert homotopy(AerialGraph([(), (2,)])) == (POINT, 1)


@settings(max_examples=50)
@given(st.integers(2, 5), st.integers(0, 3))
def test_homotopy_lowers_vertex_count(k, extra):
    g = disjoint_union(cycle_graph(k), *[POINT] * extra)
    h, s = homotopy(g)
    assert h.n == g.n - 1 and s in (1, -1)


def test_homotopy_identity_ascending():
    for n in range(1, 4):
        for mode in ("include", "exclude"):
            sl = enumerate_basis(n, ASCENDING, mode)
            for c in range(len(sl)):
                lhs, rhs = homotopy_identity(sl.vector(c), ASCENDING)
                assert lhs == rhs


def test_wheels():
    assert wheel(1) == GraphSum.single(LOOP)
    assert not wheel(2) and not wheel(4)
    assert wheel(3) and wheel(5)
    assert wheel_product([3]) == wheel(3)
    r13 = wheel_product([1, 3])
    assert r13.n == 4 and r13
    with pytest.raises(ValueError):
        wheel_product([1, 1])
    with pytest.raises(ValueError):
        wheel_product([2])
    with pytest.raises(ValueError):
        wheel(0)


def test_symbol_coefficient():
    w = sorted_order(AerialGraph([(2, 3), (), ()]))
    # one class-1 vertex (0,2): a = (-1)^2 * 2
    assert symbol_coefficient(w) == 2
    assert symbol_coefficient(graph_order(cycle_graph(3))) == 0


def test_reduce_leaves_simple_cocycles_alone():
    for delta in (wheel(1), wheel(3), wheel_product([1, 3])):
        red, beta, steps, _ = reduce_to_simple(delta, ASCENDING)
        assert red == delta and steps == 0 and not beta


def test_reduce_rejects_non_cocycles():
    with pytest.raises(ValueError):
        reduce_to_simple(symmetrize(POINT), unrestricted(1))
