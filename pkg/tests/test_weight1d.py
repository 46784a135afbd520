"""Weight sequences: direct counting, steps, symmetry, components, minima."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latcoh import (
    check_gorenstein_symmetry,
    enumerate_plane_branch_semigroups,
    from_generators,
    from_members,
    local_minima,
    min_w0,
    sublevel_components,
    weight_sequence,
)
from oracles import naive_components, naive_weight_values


def test_known_weight_values():
    W = weight_sequence(from_generators([11, 14]))
    assert W.conductor == 130
    assert W[55] == -27
    assert W[58] == -26
    assert min_w0(W) == -28
    assert min_w0(weight_sequence(from_generators([4, 11]))) == -5
    assert min_w0(weight_sequence(from_generators([6, 15, 31]))) == -14
    assert min_w0(weight_sequence(from_generators([6, 10, 31]))) == -8


def test_weight_of_whole_naturals():
    W = weight_sequence(from_generators([1]))
    assert W.values == (0,)
    assert W[0] == 0
    assert W[5] == 5  # pure ascent past the conductor


def test_extension_past_conductor():
    W = weight_sequence(from_generators([4, 11]))
    assert W[W.conductor + 7] == W[W.conductor] + 7


@pytest.mark.parametrize("gens", [(2, 3), (4, 11), (6, 10, 31), (3, 4, 5), (5, 7, 9)])
def test_matches_naive_counting(gens):
    S = from_generators(gens)
    W = weight_sequence(S)
    mem = [x in S for x in range(S.conductor + 1)]
    assert list(W.values) == naive_weight_values(mem, S.conductor)


def test_endpoint_identities():
    for gens in [(2, 3), (4, 11), (6, 15, 31), (11, 14)]:
        S = from_generators(gens)
        W = weight_sequence(S)
        assert W[0] == 0
        assert W[S.conductor] == S.conductor - 2 * S.delta


def test_unit_steps_everywhere():
    for S in enumerate_plane_branch_semigroups(60):
        W = weight_sequence(S)
        for l in range(S.conductor):
            assert abs(W[l + 1] - W[l]) == 1


def test_symmetry_detector():
    assert check_gorenstein_symmetry(weight_sequence(from_generators([4, 11])))
    assert check_gorenstein_symmetry(weight_sequence(from_generators([6, 10, 31])))
    assert not check_gorenstein_symmetry(weight_sequence(from_generators([5, 7, 9])))
    assert not check_gorenstein_symmetry(weight_sequence(from_generators([3, 4, 5])))


def test_members_have_nonpositive_weight():
    for gens in [(2, 3), (4, 11), (6, 10, 31), (11, 14)]:
        S = from_generators(gens)
        W = weight_sequence(S)
        for s in range(S.conductor + 1):
            if s in S:
                assert W[s] <= 0


def test_sublevel_components_match_naive():
    for gens in [(4, 11), (6, 10, 31), (5, 7, 9)]:
        S = from_generators(gens)
        W = weight_sequence(S)
        for n in range(min_w0(W) - 1, max(W.values) + 2):
            got = [(iv.start, iv.end) for iv in sublevel_components(W, n)]
            assert got == naive_components(list(W.values), n)


def test_sublevel_component_flags():
    W = weight_sequence(from_generators([4, 11]))
    comps = sublevel_components(W, 0)
    assert comps, "level 0 contains the origin"
    assert comps[-1].unbounded  # the weight climbs forever past the conductor
    assert all(not iv.unbounded for iv in comps[:-1])
    assert sublevel_components(W, min_w0(W) - 1) == []


def test_sublevel_below_minimum_is_empty_and_top_is_single():
    for gens in [(2, 7), (6, 15, 31)]:
        W = weight_sequence(from_generators(gens))
        assert sublevel_components(W, min_w0(W) - 1) == []
        top = max(W.values)
        assert len(sublevel_components(W, top)) == 1


def test_local_minima_positions():
    W = weight_sequence(from_generators([2, 7]))
    # values walk 0 1 0 1 0 1 0: minima at the interior valleys and ends
    pos = [p for p, _v in local_minima(W)]
    assert pos == [0, 2, 4, 6]
    W1 = weight_sequence(from_generators([1]))
    assert local_minima(W1) == [(0, 0)]


def test_local_minima_are_strict_valleys():
    for gens in [(4, 11), (6, 10, 31), (5, 7, 9)]:
        W = weight_sequence(from_generators(gens))
        minima = set(p for p, _ in local_minima(W))
        for l in range(W.conductor + 1):
            left = W[l - 1] if l > 0 else None
            right = W[l + 1]
            is_min = (left is None or left > W[l]) and right > W[l]
            assert (l in minima) == is_min


@settings(max_examples=50, deadline=None)
@given(st.sets(st.integers(min_value=1, max_value=25), min_size=0, max_size=10))
def test_weight_walk_on_arbitrary_cofinite_sets(extra):
    """The weight recursion holds for any cofinite set, closed or not."""
    conductor = 26
    members = sorted({0} | extra)
    T = from_members(members, conductor, verify_closed=False)
    W = weight_sequence(T)
    mem = [x in T for x in range(T.conductor + 1)]
    assert list(W.values) == naive_weight_values(mem, T.conductor)


def test_window_of_multiplicity_size_sees_the_running_max():
    """On [l, delta] the maximal weight is already attained within the first
    multiplicity-many positions, for every enumerated semigroup."""
    for S in enumerate_plane_branch_semigroups(200):
        vals = weight_sequence(S).values
        m = S.multiplicity
        d = S.delta
        suffix = list(vals[: d + 1])
        for i in range(d - 1, -1, -1):
            suffix[i] = max(suffix[i], suffix[i + 1])
        for l in range(d + 1):
            hi = min(l + m - 1, d)
            assert max(vals[l : hi + 1]) == suffix[l], (S.min_gens, l)


def test_bounded_multi_point_components_reach_the_level_below():
    """A bounded component of a sublevel set spanning more than one point
    contains a position of strictly smaller weight."""
    for S in enumerate_plane_branch_semigroups(120):
        W = weight_sequence(S)
        vals = W.values
        top = max(1, max(vals))
        for n in range(min(vals), top + 1):
            for comp in sublevel_components(W, n):
                if comp.unbounded or comp.end == comp.start:
                    continue
                assert any(
                    vals[p] <= n - 1 for p in range(comp.start, comp.end + 1)
                ), (S.min_gens, n, comp)
