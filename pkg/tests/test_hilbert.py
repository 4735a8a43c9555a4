"""Hilbert functions, profiles, separation, Cayley-Bacharach, and spans."""

import random

import pytest

from waringcert import (
    HilbertProfile,
    PointSet,
    check_gkr_inequality,
    evaluation_matrix,
    hilbert_function,
    hilbert_profile,
    is_separated,
    kruskal_rank,
    satisfies_cb,
    separates_point,
    span_dim,
    span_intersection_dim,
    union_profile_drop,
)

from conftest import random_points


def conic_points(count):
    return PointSet.from_rows([(1, t, t * t) for t in range(count)])


LINE5_PLUS_1 = PointSet.from_rows(
    [(1, t, 0) for t in range(5)] + [(0, 0, 1)])
GENERAL6 = PointSet.from_rows(
    [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (1, 4, 5)])
ALIGNED4 = PointSet.from_rows(
    [(1, 0, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1)])
COLLINEAR3 = PointSet.from_rows([(1, 0, 0), (1, 1, 0), (1, 2, 0)])


def test_evaluation_matrix_degree_zero():
    m = evaluation_matrix(conic_points(4), 0)
    assert m.rows == 4 and m.cols == 1
    assert all(m.row(i) == (1,) for i in range(4))
    assert m.rank() == 1


def test_evaluation_matrix_coordinate_pair():
    m = evaluation_matrix(PointSet.from_rows([(1, 0), (0, 1)]), 1)
    assert m.entries == ((1, 0), (0, 1))


def test_evaluation_matrix_binary_vandermonde():
    a = PointSet.from_rows([(1, t) for t in range(3)])
    m = evaluation_matrix(a, 2)
    assert m.entries == ((1, 0, 0), (1, 1, 1), (1, 2, 4))
    assert m.rank() == 3


def test_hilbert_function_conic_profile():
    a = conic_points(6)
    assert [hilbert_function(a, d) for d in range(4)] == [1, 3, 5, 6]
    assert hilbert_profile(a).h_vector == (1, 2, 2, 1)


def test_hilbert_function_line_profile():
    assert hilbert_profile(LINE5_PLUS_1).h_vector == (1, 2, 1, 1, 1)


def test_hilbert_function_general_six():
    assert hilbert_profile(GENERAL6).h_vector == (1, 2, 3)
    assert hilbert_function(GENERAL6, 2) == 6


def test_hilbert_function_aligned_four():
    assert hilbert_profile(ALIGNED4).h_vector == (1, 2, 1)


def test_hilbert_function_singleton_and_negative_degrees():
    single = PointSet.from_rows([(1, 2, 3)])
    assert hilbert_profile(single).h_vector == (1,)
    assert hilbert_function(single, -1) == 0
    assert hilbert_function(conic_points(3), -2) == 0


def test_hilbert_degree_one_is_span_dim_plus_one():
    rng = random.Random(21)
    for _ in range(20):
        a = random_points(rng.choice([1, 2, 3]), rng.randint(1, 7), rng)
        assert hilbert_function(a, 1) == span_dim(a) + 1


def test_profile_from_diffs_and_accessors():
    p = HilbertProfile.from_diffs((1, 2, 2, 1))
    assert p.set_size == 6
    assert p.values == (1, 3, 5, 6, 6, 6)
    assert p.j_max == 5
    assert p.value_at(-1) == 0
    assert p.value_at(100) == 6
    assert p.diff_at(-3) == 0
    assert p.diff_at(100) == 0
    assert p.separation_degree == 3
    assert p.h_vector == (1, 2, 2, 1)


def test_profile_validation_rejects_bad_data():
    with pytest.raises(ValueError):
        HilbertProfile(set_size=2, values=(1, 1), diffs=(1, 1), j_max=1)
    with pytest.raises(ValueError):
        HilbertProfile(set_size=2, values=(2, 2), diffs=(2, 0), j_max=1)
    with pytest.raises(ValueError):
        HilbertProfile(set_size=1, values=(1, 2), diffs=(1, 1), j_max=1)
    with pytest.raises(ValueError):
        HilbertProfile(set_size=3, values=(1, 2), diffs=(1, 1), j_max=2)


def test_profile_extension_beyond_stabilization():
    a = conic_points(4)
    p = hilbert_profile(a, j_max=7)
    assert p.j_max == 7
    assert p.values[3:] == (4, 4, 4, 4, 4)


def test_is_separated_examples():
    rng = random.Random(22)
    for _ in range(10):
        a = random_points(rng.choice([1, 2]), rng.randint(1, 6), rng)
        assert is_separated(a, len(a) - 1)
    assert not is_separated(COLLINEAR3, 1)
    assert is_separated(COLLINEAR3, 2)


def test_separation_from_kruskal_rank_bound():
    rng = random.Random(23)
    for _ in range(10):
        a = random_points(rng.choice([2, 3]), rng.randint(2, 7), rng)
        if len(a) <= 2 * kruskal_rank(a) - 1:
            assert is_separated(a, 2)


def test_separates_point_examples():
    assert separates_point(LINE5_PLUS_1, 5, 1)
    assert not separates_point(LINE5_PLUS_1, 0, 1)
    for i in range(3):
        assert not separates_point(COLLINEAR3, i, 1)
    simplex = PointSet.from_rows([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    for i in range(3):
        assert separates_point(simplex, i, 1)
    single = PointSet.from_rows([(1, 1)])
    assert separates_point(single, 0, 0)
    with pytest.raises(IndexError):
        separates_point(simplex, 3, 1)


def test_satisfies_cb_examples():
    assert not satisfies_cb(ALIGNED4, 1)
    assert satisfies_cb(conic_points(6), 2)
    assert not satisfies_cb(GENERAL6, 2)
    assert not satisfies_cb(PointSet.from_rows([(1, 5)]), 0)
    with pytest.raises(ValueError):
        satisfies_cb(GENERAL6, -1)


def test_cb_is_downward_closed():
    for a in (conic_points(6), LINE5_PLUS_1, GENERAL6):
        top = len(a) - 1
        flags = [satisfies_cb(a, i) for i in range(top)]
        for i in range(1, top):
            if flags[i]:
                assert flags[i - 1]


def test_cb_implies_not_separated_and_gkr():
    for a in (conic_points(6), LINE5_PLUS_1, GENERAL6, ALIGNED4):
        profile = hilbert_profile(a)
        for i in range(len(a) - 1):
            if satisfies_cb(a, i):
                assert hilbert_function(a, i) < len(a)
                assert check_gkr_inequality(profile, i)


def test_gkr_frozen_values():
    conic = HilbertProfile.from_diffs((1, 2, 2, 1))
    assert check_gkr_inequality(conic, 2)
    line = HilbertProfile.from_diffs((1, 2, 1, 1, 1))
    assert check_gkr_inequality(line, 1)
    assert not check_gkr_inequality(line, 2)
    single = HilbertProfile.from_diffs((1,))
    assert not check_gkr_inequality(single, 0)
    general = HilbertProfile.from_diffs((1, 2, 3))
    assert check_gkr_inequality(general, 1)
    assert not check_gkr_inequality(general, 2)


def test_union_profile_drop_examples():
    a = PointSet.from_rows([(1, 0), (0, 1)])
    b = PointSet.from_rows([(1, 1), (1, -1)])
    assert union_profile_drop(a, b, 2)
    general = PointSet.from_rows([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert not union_profile_drop(general, general, 2)
    crowded = PointSet.from_rows([(1, t) for t in range(5)])
    assert union_profile_drop(crowded, crowded, 3)


def test_union_profile_drop_false_for_small_binary_unions():
    rng = random.Random(24)
    for _ in range(15):
        d = rng.randint(2, 8)
        total = rng.randint(2, d + 1)
        la = rng.randint(1, total - 1)
        z = random_points(1, total, rng)
        a, b = z.subset(range(la)), z.subset(range(la, total))
        assert not union_profile_drop(a, b, d)


def test_span_intersection_dim_examples():
    a = PointSet.from_rows([(1, 0), (0, 1)])
    b = PointSet.from_rows([(1, 1), (1, -1)])
    assert span_intersection_dim(a, b, 2) == 0
    c = PointSet.from_rows([(1, 2), (1, 3)])
    d = PointSet.from_rows([(1, 5), (1, 7)])
    assert span_intersection_dim(c, d, 3) == -1
    six = conic_points(6)
    assert span_intersection_dim(six.subset(range(3)), six.subset(range(3, 6)), 2) == 0
    with pytest.raises(ValueError):
        span_intersection_dim(a, PointSet.from_rows([(1, 0), (1, 4)]), 2)
