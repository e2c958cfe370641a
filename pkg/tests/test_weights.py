from fractions import Fraction

import pytest

import _oracles
from bsq.trigraph import DUMBBELL_GRAPH, THETA_GRAPH, TrivalentGraph, generate_trivalent
from bsq.verlinde import verlinde_dim
from bsq.weights import (
    ShapeMismatch,
    WeightFunction,
    count_admissible,
    enumerate_admissible,
    is_admissible,
    polytope_contains,
)


def test_theta_level1_weights_are_the_four_even_triples():
    got = [w.numerators for w in enumerate_admissible(THETA_GRAPH, 1)]
    assert got == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]


def test_dumbbell_level1_weights_leave_the_bridge_at_zero():
    # edge order: loop at 0, bridge, loop at 1
    got = [w.numerators for w in enumerate_admissible(DUMBBELL_GRAPH, 1)]
    assert got == [(0, 0, 0), (0, 0, 1), (1, 0, 0), (1, 0, 1)]


@pytest.mark.parametrize("k", range(1, 7))
def test_count_identity_genus2(k):
    dim = verlinde_dim(2, k).dim
    assert count_admissible(THETA_GRAPH, k) == dim
    assert count_admissible(DUMBBELL_GRAPH, k) == dim


@pytest.mark.parametrize("k", range(1, 4))
def test_count_identity_genus3_all_graphs(k):
    dim = verlinde_dim(3, k).dim
    for graph in generate_trivalent(3):
        assert count_admissible(graph, k) == dim, graph.edges


@pytest.mark.parametrize("graph", [THETA_GRAPH, DUMBBELL_GRAPH])
@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("open_range", [False, True])
def test_backtracker_matches_exhaustive_filter(graph, k, open_range):
    max_numerator = k - 1 if open_range else None
    expected = _oracles.oracle_count(
        graph.vertex_count, graph.edges, k, max_numerator=max_numerator
    )
    assert count_admissible(graph, k, max_numerator=max_numerator) == expected


def test_open_range_breaks_the_count_on_purpose():
    # with numerators capped at k-1 = 0 only the zero labeling survives
    assert count_admissible(THETA_GRAPH, 1, max_numerator=0) == 1
    assert verlinde_dim(2, 1).dim == 4


@pytest.mark.parametrize("k", range(1, 5))
def test_enumerate_and_count_agree(k):
    for graph in (THETA_GRAPH, DUMBBELL_GRAPH):
        listed = enumerate_admissible(graph, k)
        assert len(listed) == count_admissible(graph, k)
        nums = [w.numerators for w in listed]
        assert nums == sorted(nums)
        assert len(set(nums)) == len(nums)


def test_every_enumerated_weight_passes_the_checker():
    for graph in (THETA_GRAPH, DUMBBELL_GRAPH):
        for w in enumerate_admissible(graph, 3):
            report = is_admissible(graph, 3, w)
            assert report.admissible
            assert report.violations == ()


def test_dumbbell_bridge_numerators_are_always_even():
    for k in range(1, 6):
        for w in enumerate_admissible(DUMBBELL_GRAPH, k):
            assert w.numerators[1] % 2 == 0


def test_odd_bridge_numerator_trips_condition_4():
    report = is_admissible(DUMBBELL_GRAPH, 2, (0, 1, 0))
    assert not report.admissible
    assert any(v.condition == 4 and v.site == "edge 1" for v in report.violations)


def test_odd_sum_and_level_cap_violations():
    report = is_admissible(THETA_GRAPH, 1, (1, 1, 1))
    assert not report.admissible
    conditions = {v.condition for v in report.violations}
    assert conditions == {1, 2}
    # both trinion vertices see the same three ends
    assert {v.site for v in report.violations} == {"vertex 0", "vertex 1"}


def test_triangle_violation():
    report = is_admissible(THETA_GRAPH, 2, (2, 0, 0))
    assert not report.admissible
    assert {v.condition for v in report.violations} == {3}


def test_is_admissible_accepts_weight_function_or_raw_tuple():
    w = WeightFunction(THETA_GRAPH, 2, (1, 1, 2))
    assert is_admissible(THETA_GRAPH, 2, w).admissible
    assert is_admissible(THETA_GRAPH, 2, (1, 1, 2)).admissible
    assert is_admissible(THETA_GRAPH, 2, [1, 1, 2]).admissible


def test_weight_function_labels_are_fractions():
    w = WeightFunction(THETA_GRAPH, 4, (2, 3, 1))
    assert w.labels == (Fraction(1, 2), Fraction(3, 4), Fraction(1, 4))


def test_weight_function_validation():
    with pytest.raises(ShapeMismatch):
        WeightFunction(THETA_GRAPH, 2, (1, 1))
    with pytest.raises(ValueError):
        WeightFunction(THETA_GRAPH, 2, (1, 1, -1))
    with pytest.raises(ValueError):
        WeightFunction(THETA_GRAPH, 0, (0, 0, 0))


def test_is_admissible_rejects_mismatched_weight_function():
    w = WeightFunction(DUMBBELL_GRAPH, 2, (0, 0, 0))
    with pytest.raises(ShapeMismatch):
        is_admissible(THETA_GRAPH, 2, w)
    w2 = WeightFunction(THETA_GRAPH, 3, (0, 0, 0))
    with pytest.raises(ShapeMismatch):
        is_admissible(THETA_GRAPH, 2, w2)
    with pytest.raises(ShapeMismatch):
        is_admissible(THETA_GRAPH, 2, (0, 0))


def test_enumeration_argument_validation():
    with pytest.raises(ValueError):
        enumerate_admissible(THETA_GRAPH, 0)
    with pytest.raises(ValueError):
        enumerate_admissible(THETA_GRAPH, 2, max_numerator=-1)
    with pytest.raises(ValueError):
        count_admissible(THETA_GRAPH, 2.0)  # type: ignore[arg-type]


def test_admissible_labels_lie_in_the_polytope():
    # exact rational coordinates, so boundary weights stay inside
    for graph in (THETA_GRAPH, DUMBBELL_GRAPH):
        for w in enumerate_admissible(graph, 3):
            assert polytope_contains(graph, w.labels)


def test_polytope_rejects_outside_points():
    # vertex sum above 2
    assert not polytope_contains(THETA_GRAPH, (0.9, 0.8, 0.7))
    # broken triangle inequality
    assert not polytope_contains(THETA_GRAPH, (0.9, 0.1, 0.1))
    # negative coordinates are caught by the triangle inequalities
    assert not polytope_contains(THETA_GRAPH, (-0.1, 0.5, 0.5))
    assert polytope_contains(THETA_GRAPH, (0.5, 0.5, 0.5))
    with pytest.raises(ShapeMismatch):
        polytope_contains(THETA_GRAPH, (0.5, 0.5))


def test_genus4_spot_check_against_dimension():
    # one graph is enough at genus 4; the full sweep lives in the
    # acceptance suite at lower genus
    graph = generate_trivalent(4)[0]
    assert count_admissible(graph, 2) == verlinde_dim(4, 2).dim
