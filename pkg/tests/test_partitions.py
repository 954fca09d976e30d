from itertools import combinations

import pytest

from gwcalc.partitions import (MarkSet, WeightedPartition,
                               boundary_divisor_count_m0n,
                               count_labeled_configurations,
                               count_pinned_partitions, enumerate_partitions,
                               stratum_dimension)

PINS = (("m1", "m2"), ("p1", "p2"))


def test_markset():
    marks = MarkSet.standard(6)
    assert marks.labels == ("m1", "m2", "p1", "p2", "p3", "p4")
    with pytest.raises(ValueError):
        MarkSet(("a", "a"))
    with pytest.raises(ValueError):
        marks.index("q9")


def test_conic_census():
    parts = enumerate_partitions(MarkSet.standard(6), 2, PINS)
    assert len(parts) == 12
    # factors as (degree splits) x (spare mark distributions) = 3 * 4
    assert count_pinned_partitions(MarkSet.standard(6), 2, PINS) == 12


def test_cubic_census():
    parts = enumerate_partitions(MarkSet.standard(9), 3, PINS)
    assert len(parts) == 128
    assert count_pinned_partitions(MarkSet.standard(9), 3, PINS) == 4 * 32


def test_degree_zero_stability_forces_single_partition():
    parts = enumerate_partitions(MarkSet.standard(4), 0, PINS)
    assert len(parts) == 1
    only = parts[0]
    assert only.a == ("m1", "m2") and only.b == ("p1", "p2")


def test_every_partition_is_stable_and_ordered():
    marks = MarkSet.standard(8)
    parts = enumerate_partitions(marks, 2, PINS)
    order = {m: i for i, m in enumerate(marks)}
    for p in parts:
        if p.total_a == 0:
            assert len(p.a) >= 2
        if p.total_b == 0:
            assert len(p.b) >= 2
        assert list(p.a) == sorted(p.a, key=order.__getitem__)
        assert set(p.a) | set(p.b) == set(marks.labels)
        assert not set(p.a) & set(p.b)
        assert "m1" in p.a and "m2" in p.a
        assert "p1" in p.b and "p2" in p.b
    # deterministic canonical order
    assert parts == enumerate_partitions(marks, 2, PINS)
    keys = [(p.d_a, tuple(order[m] for m in p.a)) for p in parts]
    assert keys == sorted(keys)


def test_partition_count_equals_closed_form():
    for n in (5, 6, 7):
        for d in (1, 2, 3):
            marks = MarkSet.standard(n)
            assert len(enumerate_partitions(marks, d, PINS)) == \
                count_pinned_partitions(marks, d, PINS)


def test_bidegree_enumeration():
    marks = MarkSet.standard(6)
    parts = enumerate_partitions(marks, (1, 1), PINS)
    assert len(parts) == 4 * 4  # four bidegree splits, 2^2 distributions
    record = parts[0].to_json()
    assert set(record) == {"A", "B", "dA", "dB", "eA", "eB"}
    # with e = 0 the bidegree enumeration collapses to the plain count
    assert len(enumerate_partitions(marks, (2, 0), PINS)) == \
        len(enumerate_partitions(marks, 2, PINS))


def test_unstable_partition_rejected():
    with pytest.raises(ValueError):
        WeightedPartition(("m1",), ("m2", "p1", "p2"), 0, 2)


def test_pins_validation():
    marks = MarkSet.standard(6)
    with pytest.raises(ValueError):
        enumerate_partitions(marks, 2, (("m1", "m1"), ("p1", "p2")))
    with pytest.raises(ValueError):
        enumerate_partitions(marks, 2, (("m1", "zz"), ("p1", "p2")))


def test_stratum_dimension():
    assert stratum_dimension(6, 0) == 3
    assert stratum_dimension(6, 3) == 0
    assert stratum_dimension(4, 1) == 0
    with pytest.raises(ValueError):
        stratum_dimension(6, 4)
    with pytest.raises(ValueError):
        stratum_dimension(6, -1)


def brute_force_divisor_count(n):
    labels = range(n)
    seen = set()
    for size in range(2, n - 1):
        for a in combinations(labels, size):
            b = tuple(x for x in labels if x not in a)
            if len(b) < 2:
                continue
            seen.add(frozenset((frozenset(a), frozenset(b))))
    return len(seen)


def test_boundary_divisor_count():
    assert boundary_divisor_count_m0n(4) == 3
    assert boundary_divisor_count_m0n(5) == 10
    assert boundary_divisor_count_m0n(6) == 25
    for n in range(4, 9):
        assert boundary_divisor_count_m0n(n) == brute_force_divisor_count(n)
    with pytest.raises(ValueError):
        boundary_divisor_count_m0n(3)


def test_count_labeled_configurations():
    assert count_labeled_configurations(6, (2, 4)) == 15
    assert count_labeled_configurations(6, (6, 0)) == 1
    assert count_labeled_configurations(5, (2, 3)) == 10
    with pytest.raises(ValueError):
        count_labeled_configurations(6, (2, 5))
