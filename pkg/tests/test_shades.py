import pytest
from hypothesis import given, strategies as st

from hochschild_kit.preposets import transitive_closure_pairs
from hochschild_kit.shades import (
    LightedShade,
    enum_lighted_shades,
    unary_lighted_shades,
)

UNARY_COUNTS = {(1, 3): 12, (0, 4): 8, (2, 2): 18, (3, 0): 6, (1, 0): 1}
FACE_COUNTS = {(1, 3): 39, (0, 3): 9, (2, 2): 57, (2, 0): 3, (1, 6): 1539}


def S(m, n, *entries):
    return LightedShade(m, n, [(vals, set(lights)) for vals, lights in entries])


@pytest.mark.parametrize("mn,count", sorted(UNARY_COUNTS.items()))
def test_unary_counts(mn, count):
    assert len(unary_lighted_shades(*mn)) == count


@pytest.mark.parametrize("mn,count", sorted(FACE_COUNTS.items()))
def test_face_counts(mn, count):
    assert len(enum_lighted_shades(*mn)) == count


def test_rank_examples():
    assert S(0, 3, ((1, 1, 1), ())).rank == 2
    assert S(0, 3, ((2, 1), ())).rank == 1
    assert S(0, 3, ((3,), ())).rank == 0
    assert S(1, 3, ((), (1,)), ((1,), ()), ((1,), ()), ((1,), ())).rank == 0


def test_preposet_single_tuple():
    # one entry of value 3: everything below its preceding sum
    assert sorted(S(0, 3, ((3,), ())).preposet.pairs()) == [(1, 3), (2, 3)]


def test_preposet_complete_for_full_tuple():
    pre = S(0, 3, ((1, 1, 1), ())).preposet
    assert sorted(pre.pairs()) == [
        (1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)
    ]


def test_preposet_two_one():
    assert sorted(S(0, 3, ((2, 1), ())).preposet.pairs()) == [
        (1, 2), (1, 3), (2, 3), (3, 2)
    ]


def _naive_shade_preposet_pairs(ls):
    """Oracle: generate the four clause families directly, close naively."""
    m = ls.m
    pairs = []
    positions = {x: p for x, p in ls.light_position.items()}
    flat = ls.flat_entries
    for i in positions:
        for j in positions:
            if i != j and positions[i] >= positions[j]:
                pairs.append((i, j))
    for (xp, _, xv, xs) in flat:
        for (yp, _, _, ys) in flat:
            if xp >= yp:
                pairs += [(k, ys) for k in range(xs - xv + 1, xs + 1)]
    for i, cp in positions.items():
        for (xp, _, xv, xs) in flat:
            if xp <= cp:
                pairs.append((i, xs))
            if xp >= cp:
                pairs += [(k, i) for k in range(xs - xv + 1, xs + 1)]
    return transitive_closure_pairs(m + ls.n, pairs)


@pytest.mark.parametrize("mn", [(1, 2), (2, 1), (2, 2), (0, 4), (1, 3)])
def test_preposet_matches_untangled_oracle(mn):
    for ls in enum_lighted_shades(*mn):
        assert frozenset(ls.preposet.pairs()) == _naive_shade_preposet_pairs(ls)


def test_hasse_is_forest_everywhere():
    for m, n in [(1, 3), (2, 2), (3, 1), (0, 4)]:
        for ls in enum_lighted_shades(m, n):
            assert ls.preposet.hasse_is_forest


def test_unary_hasse_has_full_edge_count():
    for m, n in [(1, 3), (2, 2), (0, 4), (3, 1)]:
        for ls in unary_lighted_shades(m, n):
            assert len(ls.preposet.hasse_edges) == m + n - 1


def test_mu_restriction_reads_top_down():
    for ls in unary_lighted_shades(2, 2):
        pre = ls.preposet
        upper, lower = (min(p) for p in ls.mu)
        assert pre.le(lower, upper) and not pre.le(upper, lower)


def test_refinement_covers_examples():
    covers = S(0, 3, ((3,), ())).refinement_covers_down()
    assert {c.entries for c in covers} == {
        (((2, 1), frozenset()),),
        (((1, 2), frozenset()),),
    }
    covers = S(0, 3, ((1,), ()), ((2,), ())).refinement_covers_down()
    assert (((1, 2), frozenset()),) in {c.entries for c in covers}


def test_refinement_moves_grow_preposet():
    for m, n in [(1, 2), (2, 2), (0, 4)]:
        for ls in enum_lighted_shades(m, n):
            for cov in ls.refinement_covers_down():
                cov.validate()
                assert cov.rank == ls.rank + 1
                assert cov.preposet.contains(ls.preposet)
                assert cov.preposet != ls.preposet


def test_rotation_successors_of_single_tuple():
    succ = S(0, 3, ((3,), ())).rotation_successors()
    assert {tuple(v[0][0] for v in s.entries) for s in succ} == {(1, 2), (2, 1)}


def test_rotation_graph_is_regular():
    for m, n in [(1, 3), (2, 2), (0, 5), (3, 1), (2, 3)]:
        shades = unary_lighted_shades(m, n)
        degree = {ls: 0 for ls in shades}
        for ls in shades:
            for succ in ls.rotation_successors():
                degree[ls] += 1
                degree[succ] += 1
        assert all(d == m + n - 1 for d in degree.values())


def test_label_swap_needs_small_below():
    # big label above small: swapping passes the small one up (a successor);
    # the reverse configuration admits no label swap
    ls = S(2, 0, ((), (2,)), ((), (1,)))
    swapped = S(2, 0, ((), (1,)), ((), (2,)))
    assert swapped in ls.rotation_successors()
    assert not swapped.rotation_successors()


def test_validation_errors():
    with pytest.raises(ValueError):
        S(0, 3, ((2,), ())).validate()  # sum mismatch
    with pytest.raises(ValueError):
        S(1, 1, ((), ()), ((1,), (1,))).validate()  # naked empty tuple
    with pytest.raises(ValueError):
        S(1, 1, ((1,), ())).validate()  # lights missing


@given(st.sampled_from(list(range(20))))
def test_json_round_trip(seed):
    shades = enum_lighted_shades(2, 2)
    ls = shades[seed % len(shades)]
    assert LightedShade.from_json_obj(ls.to_json_obj()) == ls
