import pytest

from hochschild_kit.painted import (
    PaintedTree,
    binary_painted_trees,
    enum_painted_trees,
    left_comb,
    right_comb,
)

# spot values from the enumeration tables
BINARY_COUNTS = {(1, 3): 21, (0, 4): 14, (2, 2): 24, (1, 0): 1, (2, 0): 2, (3, 0): 6}
FACE_COUNTS = {(1, 3): 67, (0, 3): 11, (2, 2): 75, (1, 1): 3, (3, 0): 13}


@pytest.mark.parametrize("mn,count", sorted(BINARY_COUNTS.items()))
def test_binary_counts(mn, count):
    assert len(binary_painted_trees(*mn)) == count


@pytest.mark.parametrize("mn,count", sorted(FACE_COUNTS.items()))
def test_face_counts(mn, count):
    assert len(enum_painted_trees(*mn)) == count


def test_rank_zero_filter_is_binary():
    assert enum_painted_trees(1, 3, rank=0) == binary_painted_trees(1, 3)


def test_rank_filter_rejects_out_of_range():
    with pytest.raises(ValueError):
        enum_painted_trees(1, 3, rank=4)
    with pytest.raises(ValueError):
        enum_painted_trees(1, 3, rank=-1)


def test_degenerate_parameters_rejected():
    with pytest.raises(ValueError):
        enum_painted_trees(0, 0)


def test_every_enumerated_tree_is_valid():
    for m, n in [(1, 2), (2, 1), (0, 3), (2, 2)]:
        for pt in enum_painted_trees(m, n):
            pt.validate()


def test_left_comb_preposet_is_a_chain():
    pt = PaintedTree(0, 3, left_comb(3), [], [])
    assert sorted(pt.preposet.pairs()) == [(1, 2), (1, 3), (2, 3)]


def test_right_comb_preposet_is_reversed_chain():
    pt = PaintedTree(0, 3, right_comb(3), [], [])
    assert sorted(pt.preposet.pairs()) == [(2, 1), (3, 1), (3, 2)]


def test_single_cut_preposet_on_one_element():
    # m = 1, n = 0: one unary node carrying the only cut
    pt = PaintedTree(1, 0, (None,), [{0}], [{1}])
    pt.validate()
    assert list(pt.preposet.pairs()) == []
    assert pt.preposet.d == 1


def test_binary_1_1_preposets_are_the_two_total_orders():
    pts = binary_painted_trees(1, 1)
    orders = {frozenset(pt.preposet.pairs()) for pt in pts}
    assert orders == {frozenset({(1, 2)}), frozenset({(2, 1)})}


def test_mu_restriction_is_cut_order():
    # labels of lower cuts precede labels of upper cuts
    for pt in binary_painted_trees(2, 1):
        pre = pt.preposet
        lower, upper = min(pt.parts[0]), min(pt.parts[1])
        assert pre.le(lower, upper) and not pre.le(upper, lower)


def test_refinement_moves_grow_preposet_and_rank():
    for m, n in [(1, 2), (2, 1), (0, 4), (2, 2)]:
        for pt in enum_painted_trees(m, n):
            for cov in pt.refinement_covers_down():
                cov.validate()
                assert cov.rank == pt.rank + 1
                assert cov.preposet.contains(pt.preposet)
                assert cov.preposet != pt.preposet


def test_rotation_rejects_non_binary():
    corolla = PaintedTree(0, 2, (None, None, None), [], [])
    with pytest.raises(ValueError):
        corolla.rotation_successors()


def test_rotation_flips_exactly_one_inverted_pair():
    from hochschild_kit.geometry import inverted_pairs

    for m, n in [(1, 2), (2, 1), (0, 4), (2, 2), (1, 3)]:
        for pt in binary_painted_trees(m, n):
            for succ in pt.rotation_successors():
                flips = inverted_pairs(pt.preposet, succ.preposet)
                back = inverted_pairs(succ.preposet, pt.preposet)
                assert len(flips) == 1 and not back


def test_canonical_json_round_trip():
    for pt in binary_painted_trees(2, 2)[:6]:
        again = PaintedTree.from_json_obj(pt.to_json_obj())
        assert again == pt


def test_enumeration_is_canonically_sorted_and_duplicate_free():
    objs = enum_painted_trees(2, 2)
    keys = [o.key for o in objs]
    assert keys == sorted(keys)
    assert len(set(objs)) == len(objs)


def test_validation_rejects_uncovered_unary():
    # unary node without a cut through it
    with pytest.raises(ValueError):
        PaintedTree(0, 1, (((None, None),),), [], []).validate()


def test_validation_rejects_bad_partition():
    pt = PaintedTree(2, 0, ((),), [{0}], [{1}])
    with pytest.raises(ValueError):
        pt.validate()
