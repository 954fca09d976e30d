"""Genus-0 Gromov-Witten invariants of P^r and P1 x P1.

The evaluation strategy layers four reductions in front of a recursion:

1. dimension gate: the invariant vanishes unless the input codimensions
   sum to the dimension of the ambient moduli space of stable maps;
2. degree zero: only three-point invariants survive, with value one;
3. fundamental class: an h^0 (resp. T_0) input kills every positive-degree
   invariant;
4. divisor classes: each codimension-1 input is traded for a factor of the
   matching degree component.

After these steps a P1 x P1 invariant consists of point classes only and
equals the curve count N_(d,e).  For P^r with r >= 2 the remaining
invariants are computed by the reconstruction recursion: the smallest
remaining class h^c is written as h^1 u h^(c-1), those two factors are
placed on two extra marks, and the resulting pair of equivalent boundary
divisors is expanded by the splitting formula.  The unknown invariant
appears in the expansion exactly once with coefficient one.

All values are integers; the public functions return them as ``Fraction``
since the surrounding series machinery works over the rationals.  Memo
tables are keyed by fully reduced keys, are write-once, and hold values
independent of evaluation order, so concurrent use is safe.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import binomial
from .surfaces import n_de
from .targets import (Degree, ExponentVector, InvariantKey, P1xP1,
                      ProjectiveSpace, TargetSpace, total_codim,
                      validate_degree)

_PR_CACHE: dict[tuple[int, int, ExponentVector], int] = {}


def clear_caches() -> None:
    """Drop the memoized reconstruction values."""
    _PR_CACHE.clear()


def dim_moduli(target: TargetSpace, degree: Degree, n: int) -> int:
    """Dimension of the space of n-pointed genus-0 stable maps:
    rd + r + d + n - 3 for P^r, n + 2d + 2e - 1 for P1 x P1.

    Degree zero with fewer than three marks admits no stable map at all,
    which is reported as an error rather than a dimension.
    """
    validate_degree(target, degree)
    if n < 0:
        raise ValueError(f"mark count must be >= 0, got {n}")
    if isinstance(target, ProjectiveSpace):
        total = degree
    else:
        total = degree[0] + degree[1]
    if total == 0 and n < 3:
        raise ValueError(
            "no stable maps: a constant map needs at least three marks")
    if isinstance(target, ProjectiveSpace):
        r, d = target.r, degree
        return r * d + r + d + n - 3
    d, e = degree
    return n + 2 * d + 2 * e - 1


def dimension_admissible(key: InvariantKey) -> bool:
    """True when the input codimensions sum to the moduli dimension."""
    total = key.degree if isinstance(key.target, ProjectiveSpace) \
        else key.degree[0] + key.degree[1]
    if total == 0 and key.n_marks < 3:
        return False
    return key.codim_sum == dim_moduli(key.target, key.degree, key.n_marks)


def reduce_invariant(key: InvariantKey) -> tuple[int, InvariantKey]:
    """Strip fundamental-class and divisor-class inputs.

    Returns (multiplier, reduced key) with the reduced key carrying only
    classes of codimension >= 2.  A fundamental class forces multiplier 0
    in positive degree; a divisor class contributes one factor of the
    matching degree component per occurrence.  Degree-zero keys are
    returned untouched: their three-point evaluation handles low
    codimensions directly.

    A P1 x P1 rule class whose matching degree component is zero (T_1 with
    e = 0, or T_2 with d = 0) yields multiplier 0: a curve missing that
    component of its bidegree is disjoint from a generic rule of the same
    family, so the extra incidence condition admits no map.
    """
    target, degree = key.target, key.degree
    exps = list(key.exponents)
    if isinstance(target, ProjectiveSpace):
        if degree == 0:
            return 1, key
        mult = 1
        if exps[0]:
            mult = 0
            exps[0] = 0
        if target.r >= 2 and exps[1]:
            mult *= degree ** exps[1]
            exps[1] = 0
        return mult, InvariantKey(target, degree, tuple(exps))
    d, e = degree
    if d == 0 and e == 0:
        return 1, key
    mult = 1
    if exps[0]:
        mult = 0
        exps[0] = 0
    if exps[1]:
        mult *= e ** exps[1]
        exps[1] = 0
    if exps[2]:
        mult *= d ** exps[2]
        exps[2] = 0
    return mult, InvariantKey(target, degree, tuple(exps))


def gw_p1(key: InvariantKey) -> Fraction:
    """All genus-0 invariants of P^1.

    The complete list of non-zero values is I_0(h1.h0.h0) = 1 and
    I_1(h1^n) = 1 for n >= 1; everything else vanishes.
    """
    target = key.target
    if not (isinstance(target, ProjectiveSpace) and target.r == 1):
        raise ValueError(f"gw_p1 expects target P^1, got {target}")
    a0, a1 = key.exponents
    if key.degree == 0 and a0 == 2 and a1 == 1:
        return Fraction(1)
    if key.degree == 1 and a0 == 0 and a1 >= 1:
        return Fraction(1)
    return Fraction(0)


def gw_pr(key: InvariantKey) -> Fraction:
    """Genus-0 invariant of P^r, r >= 2, via the reconstruction recursion."""
    target = key.target
    if not (isinstance(target, ProjectiveSpace) and target.r >= 2):
        raise ValueError(f"gw_pr expects target P^r with r >= 2, got {target}")
    return Fraction(_gw_pr_int(target.r, key.degree, key.exponents))


def _gw_pr_int(r: int, d: int, exps: ExponentVector) -> int:
    n = sum(exps)
    codim = sum(i * a for i, a in enumerate(exps))
    if codim != r * d + r + d + n - 3:
        return 0
    if d == 0:
        # Only three-point invariants survive in degree zero; the gate
        # already forces their codimensions to sum to r, so the triple cup
        # product is the point class and the integral is one.
        return 1 if n == 3 else 0
    if exps[0]:
        return 0
    mult = 1
    if exps[1]:
        mult = d ** exps[1]
        exps = (0, 0) + exps[2:]
        n = sum(exps)
    if n < 3:
        # Two marks: the line through two points, I_1(h^r.h^r) = 1.
        if d == 1 and n == 2 and exps[r] == 2:
            return mult
        return 0
    cache_key = (r, d, exps)
    cached = _PR_CACHE.get(cache_key)
    if cached is None:
        cached = _reconstruct(r, d, exps)
        _PR_CACHE[cache_key] = cached
    return mult * cached


def _reconstruct(r: int, d: int, exps: ExponentVector) -> int:
    """Isolate I_d(exps) from the boundary-divisor balance equation.

    All classes here have codimension >= 2, d >= 1, n >= 3.  Write the
    smallest class h^c as h^1 u h^(c-1) and put the two factors on marks
    m1, m2; the two largest classes h^b1, h^b2 sit on the pinned marks
    p1, p2 and the remaining multiset is distributed freely.  Integrating
    over the equivalent divisors D(m1,m2|p1,p2) and D(m1,p1|m2,p2) and
    splitting each component gives

        sum_{dA+dB=d} sum_{S} sum_{i+j=r}
            I_dA(h^1.h^(c-1).S.h^i) I_dB(h^b1.h^b2.S'.h^j)
      = sum_{dA+dB=d} sum_{S} sum_{i+j=r}
            I_dA(h^1.h^b1.S.h^i) I_dB(h^(c-1).h^b2.S'.h^j)

    where S runs over sub-multisets of the free classes (with binomial
    multiplicity) and S' is the complement.  On the left the slot
    dA = 0, S empty forces i = r - c, and its factor I_0(h^1.h^(c-1).h^(r-c))
    equals one, so that term *is* the unknown invariant; every other slot
    only involves invariants of lower degree, lower minimal codimension
    or fewer marks.
    """
    c = min(i for i in range(2, r + 1) if exps[i])
    rest = list(exps)
    rest[c] -= 1
    b1 = max(i for i in range(2, r + 1) if rest[i])
    rest[b1] -= 1
    b2 = max(i for i in range(2, r + 1) if rest[i])
    rest[b2] -= 1
    free = tuple(rest)

    total = 0
    for da in range(d + 1):
        db = d - da
        for sub, ways in _submultisets(free):
            comp = tuple(f - s for f, s in zip(free, sub))
            k = sum(sub)
            sub_codim = sum(i * a for i, a in enumerate(sub))
            # A-side gluing class index forced by the A-side dimension gate;
            # base codimensions: 1 + (c-1) on the left, 1 + b1 on the right.
            dim_a = (r + 1) * da + r + (3 + k) - 3
            lhs = 0
            if not (da == 0 and k == 0):
                i = dim_a - c - sub_codim
                if 0 <= i <= r:
                    fa = _gw_side(r, da, sub, (1, c - 1, i))
                    if fa:
                        fb = _gw_side(r, db, comp, (b1, b2, r - i))
                        lhs = fa * fb
            i = dim_a - 1 - b1 - sub_codim
            rhs = 0
            if 0 <= i <= r:
                fa = _gw_side(r, da, sub, (1, b1, i))
                if fa:
                    fb = _gw_side(r, db, comp, (c - 1, b2, r - i))
                    rhs = fa * fb
            if lhs or rhs:
                total += ways * (rhs - lhs)
    return total


def _gw_side(r: int, d: int, base: ExponentVector, extra: tuple[int, ...]) -> int:
    exps = list(base)
    for idx in extra:
        exps[idx] += 1
    return _gw_pr_int(r, d, tuple(exps))


def _submultisets(exps: ExponentVector):
    """Yield (sub-exponent-vector, number of labeled mark subsets)."""
    out: list[tuple[tuple[int, ...], int]] = [((), 1)]
    for count in exps:
        nxt = []
        for prefix, ways in out:
            for take in range(count + 1):
                nxt.append((prefix + (take,), ways * binomial(count, take)))
        out = nxt
    return out


def gw_p1x1(key: InvariantKey) -> Fraction:
    """Genus-0 invariant of P1 x P1.

    On a surface every basis class is the fundamental class, a divisor or
    the point class, so the reductions are exhaustive: after stripping
    T_0, T_1, T_2 the key holds only point classes and the dimension gate
    pins their number to 2(d+e) - 1, where the value is the curve count
    N_(d,e).  No separate splitting recursion is required.
    """
    target = key.target
    if not isinstance(target, P1xP1):
        raise ValueError(f"gw_p1x1 expects target P1xP1, got {target}")
    d, e = key.degree
    a0, a1, a2, a3 = key.exponents
    n = a0 + a1 + a2 + a3
    if key.codim_sum != n + 2 * d + 2 * e - 1:
        return Fraction(0)
    if d == 0 and e == 0:
        # Three-point integrals over the surface itself; two equal rule
        # classes cup to zero, every other admissible triple gives the
        # point class.
        if n == 3 and a1 <= 1 and a2 <= 1:
            return Fraction(1)
        return Fraction(0)
    if a0:
        return Fraction(0)
    mult = 1
    if a1:
        if e == 0:
            return Fraction(0)
        mult *= e ** a1
    if a2:
        if d == 0:
            return Fraction(0)
        mult *= d ** a2
    # The gate above forces a3 == 2(d+e) - 1 at this point.
    return Fraction(mult * n_de(d, e))


def gw_invariant(key: InvariantKey) -> Fraction:
    """Evaluate any supported invariant, dispatching on the target."""
    target = key.target
    if isinstance(target, P1xP1):
        return gw_p1x1(key)
    if target.r == 1:
        return gw_p1(key)
    return gw_pr(key)


def collected_invariant(target: TargetSpace, exponents: ExponentVector) -> Fraction:
    """Sum of the invariant over all degrees; at most one degree survives.

    The dimension gate solves for the degree: d = (codim - r - n + 3)/(r+1)
    on P^r, and d + e = (codim - n + 1)/2 on P1 x P1, where the sum runs
    over all bidegree splits of that total.
    """
    codim = total_codim(target, exponents)
    n = sum(exponents)
    if isinstance(target, ProjectiveSpace):
        r = target.r
        num = codim - r - n + 3
        if num < 0 or num % (r + 1):
            return Fraction(0)
        d = num // (r + 1)
        if d == 0 and n < 3:
            return Fraction(0)
        return gw_invariant(InvariantKey(target, d, exponents))
    num = codim - n + 1
    if num < 0 or num % 2:
        return Fraction(0)
    total = num // 2
    if total == 0:
        if n < 3:
            return Fraction(0)
        return gw_p1x1(InvariantKey(target, (0, 0), exponents))
    value = Fraction(0)
    for d in range(total + 1):
        value += gw_p1x1(InvariantKey(target, (d, total - d), exponents))
    return value
