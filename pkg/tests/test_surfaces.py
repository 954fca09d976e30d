import pytest

from gwcalc.surfaces import (bidegree_intersection, genus_nodal_p2,
                             genus_smooth_p1x1, n_d, n_d_raw, n_de, n_de_raw,
                             required_points)
from gwcalc.targets import P1XP1, ProjectiveSpace

ND_TABLE = {
    1: 1,
    2: 1,
    3: 12,
    4: 620,
    5: 87304,
    6: 26312976,
    7: 14616808192,
    8: 13525751027392,
    9: 19385778269260800,
    10: 40739017561997799680,
    11: 120278021410937387514880,
    12: 482113680618029292368686080,
}

NDE_TABLE = {
    (0, 1): 1, (0, 2): 0, (0, 3): 0,
    (1, 0): 1, (1, 1): 1, (1, 2): 1, (1, 3): 1,
    (2, 0): 0, (2, 1): 1, (2, 2): 12, (2, 3): 96,
    (3, 0): 0, (3, 1): 1, (3, 2): 96, (3, 3): 3510,
}


def test_nd_golden_table():
    for d, expected in ND_TABLE.items():
        assert n_d(d) == expected


def test_nd_invalid_degree():
    with pytest.raises(ValueError):
        n_d(0)
    with pytest.raises(ValueError):
        n_d(-2)


def test_nde_golden_table():
    for (d, e), expected in NDE_TABLE.items():
        assert n_de(d, e) == expected


def test_nde_undefined_and_invalid():
    with pytest.raises(ValueError):
        n_de(0, 0)
    with pytest.raises(ValueError):
        n_de(-1, 2)


def test_nde_axes():
    for d in range(2, 9):
        assert n_de(d, 0) == 0
        assert n_de(0, d) == 0
    assert n_de(1, 0) == 1
    assert n_de(0, 1) == 1


def test_nde_column_one():
    for d in range(0, 9):
        assert n_de(d, 1) == 1
        assert n_de(1, d if d else 1) == 1


def test_symmetry_without_normalized_cache():
    # both orientations run the raw recursion with private caches
    for total in range(1, 9):
        for d in range(total + 1):
            e = total - d
            if d + e < 1:
                continue
            assert n_de_raw(d, e, {}) == n_de_raw(e, d, {})


def test_raw_matches_memoized():
    for d in range(1, 6):
        assert n_d_raw(d) == n_d(d)
    for d in range(4):
        for e in range(4):
            if d + e < 1:
                continue
            assert n_de_raw(d, e, {}) == n_de(d, e)


def test_required_points():
    assert required_points(ProjectiveSpace(2), 3) == 8
    assert required_points(ProjectiveSpace(2), 1) == 2
    assert required_points(P1XP1, (1, 1)) == 3
    with pytest.raises(ValueError):
        required_points(ProjectiveSpace(3), 1)
    with pytest.raises(ValueError):
        required_points(P1XP1, (0, 0))


def test_genus_nodal_p2():
    assert genus_nodal_p2(3, 1) == 0
    assert genus_nodal_p2(1, 0) == 0
    assert genus_nodal_p2(4, 0) == 3
    with pytest.raises(ValueError):
        genus_nodal_p2(3, 2)  # more nodes than the degree allows


def test_genus_smooth_p1x1():
    assert genus_smooth_p1x1(1, 1) == 0
    assert genus_smooth_p1x1(2, 3) == 2
    assert genus_smooth_p1x1(3, 3) == 4
    with pytest.raises(ValueError):
        genus_smooth_p1x1(0, 1)


def test_bidegree_intersection():
    for d in range(4):
        for e in range(4):
            assert bidegree_intersection((d, e), (1, 0)) == e
            assert bidegree_intersection((d, e), (0, 1)) == d
            assert bidegree_intersection((d, e), (1, 1)) == d + e
    assert bidegree_intersection((1, 1), (1, 1)) == 2
