"""Counts of rational curves on the plane and on the quadric surface.

``n_d(d)`` is the number of rational degree-d plane curves through 3d-1
general points, computed by Kontsevich's recursion from the single seed
N_1 = 1.  ``n_de(d, e)`` is the analogous count of bidegree-(d, e) rational
curves in P1 x P1 through 2d+2e-1 general points, seeded by the rule counts
N_(1,0) = N_(0,1) = 1 and N_(d,0) = N_(0,d) = 0 for d > 1.

Both recursions arise from a balance equation between two equivalent
boundary divisors of a moduli space of stable maps.  The unknown count
appears exactly once, with coefficient one, in the term where one twig
carries degree zero and both line conditions; the implementation moves
every other term to the right-hand side.

The memo tables are write-once per key and the functions are deterministic,
so concurrent callers always observe identical values.  ``n_de`` normalizes
its cache key to (min, max) since the count is symmetric in the bidegree;
the raw single-orientation recursions are exposed separately so that the
symmetry can be *tested* rather than assumed.
"""

from __future__ import annotations

from typing import Callable

from .exact import binomial
from .targets import P1xP1, ProjectiveSpace, TargetSpace

_ND_CACHE: dict[int, int] = {}
_NDE_CACHE: dict[tuple[int, int], int] = {}


def clear_caches() -> None:
    """Drop all memoized curve counts (cold start for tests and timing)."""
    _ND_CACHE.clear()
    _NDE_CACHE.clear()


def seed_caches(nd: dict[int, int] | None = None,
                nde: dict[tuple[int, int], int] | None = None) -> None:
    """Pre-populate the memo tables, e.g. from a persisted cache file.

    Entries are trusted as-is; the persistent cache is a convenience for
    batch workflows, not a source of verification.
    """
    if nd:
        _ND_CACHE.update(nd)
    if nde:
        for (d, e), value in nde.items():
            _NDE_CACHE[(min(d, e), max(d, e))] = value


def cache_snapshot() -> tuple[dict[int, int], dict[tuple[int, int], int]]:
    """Copies of the current memo tables, for persistence."""
    return dict(_ND_CACHE), dict(_NDE_CACHE)


def _n_d_step(d: int, lookup: Callable[[int], int]) -> int:
    """One unfolding of the plane recursion; lower counts come from lookup.

    The balance equation for degree d reads

        N_d + sum C(3d-4, 3d_A-1) d_A^2 N_A * d_A d_B * N_B
            = sum C(3d-4, 3d_A-2) d_A N_A * d_A d_B * d_B N_B

    with both sums over d_A + d_B = d, d_A, d_B >= 1.
    """
    total = 0
    for da in range(1, d):
        db = d - da
        weight = (binomial(3 * d - 4, 3 * da - 2) * da * da * db * db
                  - binomial(3 * d - 4, 3 * da - 1) * da ** 3 * db)
        if weight:
            total += weight * lookup(da) * lookup(db)
    return total


def _n_de_step(d: int, e: int, lookup: Callable[[int, int], int]) -> int:
    """One unfolding of the bidegree recursion for d, e >= 1.

    Summation is over bidegree splits (d_A, e_A) + (d_B, e_B) = (d, e) with
    both parts nonzero, skipping the undefined (0, 0) count explicitly.  The
    gluing factor is the intersection pairing d_A e_B + e_A d_B.
    """
    m = 2 * d + 2 * e - 4
    total = 0
    for da in range(d + 1):
        for ea in range(e + 1):
            db, eb = d - da, e - ea
            if da + ea == 0 or db + eb == 0:
                continue
            pairing = da * eb + ea * db
            weight = pairing * (binomial(m, 2 * da + 2 * ea - 2) * da * eb
                                - binomial(m, 2 * da + 2 * ea - 1) * da * ea)
            if weight:
                total += weight * lookup(da, ea) * lookup(db, eb)
    return total


def n_d_raw(d: int, cache: dict[int, int] | None = None) -> int:
    """Degree-d plane curve count without the shared memo table.

    With ``cache=None`` this is a genuinely memo-free tree recursion,
    feasible for small d; passing a fresh dict gives a private memo.
    """
    if d < 1:
        raise ValueError(f"plane curve count needs degree >= 1, got {d}")
    if d == 1:
        return 1
    if cache is not None and d in cache:
        return cache[d]
    value = _n_d_step(d, lambda k: n_d_raw(k, cache))
    if cache is not None:
        cache[d] = value
    return value


def n_d(d: int) -> int:
    """Number of rational degree-d plane curves through 3d-1 general points."""
    if d < 1:
        raise ValueError(f"plane curve count needs degree >= 1, got {d}")
    if d == 1:
        return 1
    if d not in _ND_CACHE:
        _ND_CACHE[d] = _n_d_step(d, n_d)
    return _ND_CACHE[d]


def _nde_base(d: int, e: int) -> int | None:
    """Base values on the axes; None when (d, e) needs the recursion."""
    if d < 0 or e < 0:
        raise ValueError(f"bidegree components must be >= 0, got ({d}, {e})")
    if d + e < 1:
        raise ValueError("the bidegree (0, 0) count is not defined")
    if d == 0 or e == 0:
        # A bidegree (0, k) curve is a union of k rules, fixed by k points;
        # 2k - 1 > k general points are incompatible unless k = 1.
        return 1 if d + e == 1 else 0
    return None


def n_de_raw(d: int, e: int, cache: dict[tuple[int, int], int] | None = None) -> int:
    """Bidegree-(d, e) count computed in the given orientation only.

    No (d, e) <-> (e, d) normalization is applied, so evaluating both
    orientations exercises two genuinely distinct computations.
    """
    base = _nde_base(d, e)
    if base is not None:
        return base
    if cache is not None and (d, e) in cache:
        return cache[(d, e)]
    value = _n_de_step(d, e, lambda a, b: n_de_raw(a, b, cache))
    if cache is not None:
        cache[(d, e)] = value
    return value


def n_de(d: int, e: int) -> int:
    """Number of rational bidegree-(d, e) curves in P1 x P1 through
    2d+2e-1 general points.  Cached under the symmetry-normalized key."""
    base = _nde_base(d, e)
    if base is not None:
        return base
    key = (min(d, e), max(d, e))
    if key not in _NDE_CACHE:
        _NDE_CACHE[key] = _n_de_step(key[0], key[1], n_de)
    return _NDE_CACHE[key]


def required_points(target: TargetSpace, degree) -> int:
    """Number of general point conditions that make the count finite:
    3d-1 on the plane, 2d+2e-1 on the quadric."""
    if isinstance(target, ProjectiveSpace) and target.r == 2:
        d = degree
        if d < 1:
            raise ValueError(f"plane curve count needs degree >= 1, got {d}")
        return 3 * d - 1
    if isinstance(target, P1xP1):
        d, e = degree
        if d < 0 or e < 0 or d + e < 1:
            raise ValueError(f"invalid bidegree {degree}")
        return 2 * d + 2 * e - 1
    raise ValueError(f"required_points is defined for P^2 and P1xP1, got {target}")


def genus_nodal_p2(d: int, delta: int) -> int:
    """Genus of a nodal degree-d plane curve with delta nodes:
    (d-1)(d-2)/2 - delta."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if delta < 0:
        raise ValueError(f"node count must be >= 0, got {delta}")
    g = (d - 1) * (d - 2) // 2 - delta
    if g < 0:
        raise ValueError(
            f"inconsistent input: degree {d} admits at most "
            f"{(d - 1) * (d - 2) // 2} nodes")
    return g


def genus_smooth_p1x1(d: int, e: int) -> int:
    """Genus of a smooth bidegree-(d, e) curve in P1 x P1: (d-1)(e-1)."""
    if d < 1 or e < 1:
        raise ValueError(f"genus formula needs d, e >= 1, got ({d}, {e})")
    return (d - 1) * (e - 1)


def bidegree_intersection(a: tuple[int, int], b: tuple[int, int]) -> int:
    """Intersection number of curves of bidegrees a and b in P1 x P1:
    d_A e_B + e_A d_B.

    This is the sum form demanded by every identity that uses it, e.g.
    (d, e) o (1, 1) = d + e.
    """
    (da, ea), (db, eb) = a, b
    return da * eb + ea * db
