"""Generating functions of the invariants and the WDVV identities.

The potential of a target is the exponential generating function

    Phi(x) = sum_a x^a / a! * I(h^a)

over exponent vectors a, where I is the collected invariant.  It splits
into the classical part (degree-zero invariants, a cubic polynomial) and
the quantum part carrying the curve counts.  Third partial derivatives
Phi_ijk are the structure constants of the quantum product, and the
associativity of that product is equivalent to the WDVV equations

    sum_{e+f=r} Phi_ije Phi_fkl = sum_{e+f=r} Phi_jke Phi_ifl.

For the two surfaces the equations collapse to a single identity each:

    P^2:     G222 + G111*G122 = G112*G112       (one variable)
    P1xP1:   G333 + G112*G233 + G122*G133 = G123*G123 + G223*G113

whose coefficient expansions are precisely the curve-count recursions, so
the residual series vanishing identically is a strong end-to-end check of
the whole table.  The residual builders accept an alternative count source
so that deliberately perturbed tables can be shown to break the identity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .exact import factorial
from .gw import collected_invariant, gw_invariant
from .series import TruncatedSeries
from .surfaces import n_d, n_de
from .targets import (ExponentVector, InvariantKey, P1xP1, ProjectiveSpace,
                      TargetSpace)

NdSource = Callable[[int], int]
NdeSource = Callable[[int, int], int]


def _exponent_vectors(nvars: int, max_total: int):
    """All exponent tuples with the given variable count and total <= bound."""
    if nvars == 0:
        yield ()
        return
    for head in range(max_total + 1):
        for tail in _exponent_vectors(nvars - 1, max_total - head):
            yield (head,) + tail


def classical_potential(target: TargetSpace) -> TruncatedSeries:
    """The degree-zero part of the potential, computed from the invariants.

    Phi_cl = sum_{i,j,k} x_i x_j x_k / 3! * I_0(basis triple), a cubic in
    one variable per basis class.  Supported for P^1, P^2, P^3 and P1xP1.
    """
    if isinstance(target, ProjectiveSpace):
        if target.r > 3:
            raise ValueError(
                f"classical potential is provided for P^1..P^3 and P1xP1, "
                f"got {target}")
        zero_degree = 0
    elif isinstance(target, P1xP1):
        zero_degree = (0, 0)
    else:
        raise ValueError(f"unsupported target {target!r}")
    m = target.basis_size
    terms: dict[tuple[int, ...], Fraction] = {}
    for i in range(m):
        for j in range(m):
            for k in range(m):
                value = gw_invariant(
                    InvariantKey.from_classes(target, zero_degree, (i, j, k)))
                if not value:
                    continue
                exps = [0] * m
                for idx in (i, j, k):
                    exps[idx] += 1
                key = tuple(exps)
                terms[key] = terms.get(key, Fraction(0)) + value / 6
    return TruncatedSeries(m, 3, terms)


def gw_potential_p1(order: int) -> TruncatedSeries:
    """Full potential of P^1 in x0, x1: x0^2 x1 / 2 + exp(x1), truncated."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    terms: dict[tuple[int, int], Fraction] = {}
    if order >= 3:
        terms[(2, 1)] = Fraction(1, 2)
    for n in range(order + 1):
        terms[(0, n)] = Fraction(1, factorial(n))
    return TruncatedSeries(2, order, terms)


def gamma_p2_reduced(i: int, j: int, k: int, order: int,
                     nd: NdSource | None = None) -> TruncatedSeries:
    """Reduced quantum structure constant of P^2, one variable.

    With the variables dual to h^0 and h^1 eliminated (the former never
    contributes, the latter only through degree factors), the quantum part
    of Phi_ijk becomes a series in the point variable alone:

        G_ijk(x) = sum_{d>=1} d^(#ones) N_d x^n / n!,  n = 3d + 2 - i - j - k.

    Any index 0 yields the zero series.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    for idx in (i, j, k):
        if idx not in (0, 1, 2):
            raise ValueError(f"basis index {idx} out of range for P^2")
    if 0 in (i, j, k):
        return TruncatedSeries.zero(1, order)
    nd = nd or n_d
    ones = (i, j, k).count(1)
    s = i + j + k
    terms: dict[tuple[int], Fraction] = {}
    d = 1
    while 3 * d + 2 - s <= order:
        n = 3 * d + 2 - s
        if n >= 0:
            terms[(n,)] = Fraction(d ** ones * nd(d), factorial(n))
        d += 1
    return TruncatedSeries(1, order, terms)


def quantum_potential_p2_reduced(order: int, nd: NdSource | None = None
                                 ) -> dict[tuple[int, int, int], TruncatedSeries]:
    """The family of reduced structure constants G_ijk, i <= j <= k in {1, 2}."""
    return {(i, j, k): gamma_p2_reduced(i, j, k, order, nd)
            for i in (1, 2) for j in (1, 2) for k in (1, 2) if i <= j <= k}


def wdvv_residual_p2(order: int, nd: NdSource | None = None) -> TruncatedSeries:
    """G222 + G111*G122 - G112*G112, identically zero for the true counts."""
    g = lambda i, j, k: gamma_p2_reduced(i, j, k, order, nd)
    return g(2, 2, 2) + g(1, 1, 1) * g(1, 2, 2) - g(1, 1, 2) * g(1, 1, 2)


def quantum_potential_p1x1(order: int, nde: NdeSource | None = None
                           ) -> TruncatedSeries:
    """Quantum part of the P1xP1 potential in x1, x2, x3:

        sum_{d+e>=1} N_(d,e) x3^(2(d+e)-1) / (2(d+e)-1)! exp(e x1 + d x2),

    truncated at total degree <= order.  The rule variables enter through
    the exponential because extracting one vertical rule class contributes
    a factor e and one horizontal rule class a factor d.
    """
    return _gamma_p1x1(0, 0, 0, order, nde)


def gamma_p1x1(i: int, j: int, k: int, order: int,
               nde: NdeSource | None = None) -> TruncatedSeries:
    """Third partial of the P1xP1 quantum potential with respect to
    x_i, x_j, x_k (indices in 1..3); an index 0 yields the zero series."""
    for idx in (i, j, k):
        if idx not in (0, 1, 2, 3):
            raise ValueError(f"basis index {idx} out of range for P1xP1")
    if 0 in (i, j, k):
        return TruncatedSeries.zero(3, order)
    ones = (i, j, k).count(1)
    twos = (i, j, k).count(2)
    threes = (i, j, k).count(3)
    return _gamma_p1x1(ones, twos, threes, order, nde)


def _gamma_p1x1(ones: int, twos: int, threes: int, order: int,
                nde: NdeSource | None) -> TruncatedSeries:
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    nde = nde or n_de
    terms: dict[tuple[int, int, int], Fraction] = {}
    s = 1
    while 2 * s - 1 - threes <= order:
        p3 = 2 * s - 1 - threes
        if p3 >= 0:
            for d in range(s + 1):
                e = s - d
                weight = e ** ones * d ** twos * nde(d, e)
                if not weight:
                    continue
                base = Fraction(weight, factorial(p3))
                budget = order - p3
                for u in range(budget + 1):
                    for v in range(budget - u + 1):
                        coeff = base * Fraction(
                            e ** u * d ** v, factorial(u) * factorial(v))
                        if not coeff:
                            continue
                        key = (u, v, p3)
                        terms[key] = terms.get(key, Fraction(0)) + coeff
        s += 1
    return TruncatedSeries(3, order, terms)


def wdvv_residual_p1x1(order: int, nde: NdeSource | None = None
                       ) -> TruncatedSeries:
    """G333 + G112*G233 + G122*G133 - G123*G123 - G223*G113."""
    g = lambda i, j, k: gamma_p1x1(i, j, k, order, nde)
    return (g(3, 3, 3) + g(1, 1, 2) * g(2, 3, 3) + g(1, 2, 2) * g(1, 3, 3)
            - g(1, 2, 3) * g(1, 2, 3) - g(2, 2, 3) * g(1, 1, 3))


_PHI_CACHE: dict[tuple, TruncatedSeries] = {}


def phi_ijk(target: TargetSpace, i: int, j: int, k: int,
            order: int) -> TruncatedSeries:
    """Structure constant Phi_ijk as a multivariate series.

    Assembled coefficient by coefficient: the coefficient of x^a / a! is
    the collected invariant I(h^a . h^i . h^j . h^k), so no derivative-
    induced order loss occurs.
    """
    m = target.basis_size
    for idx in (i, j, k):
        target.codim(idx)
    key = (target, tuple(sorted((i, j, k))), order)
    cached = _PHI_CACHE.get(key)
    if cached is not None:
        return cached
    terms: dict[ExponentVector, Fraction] = {}
    for a in _exponent_vectors(m, order):
        exps = list(a)
        for idx in (i, j, k):
            exps[idx] += 1
        value = collected_invariant(target, tuple(exps))
        if value:
            denom = 1
            for entry in a:
                denom *= factorial(entry)
            terms[a] = value / denom
    result = TruncatedSeries(m, order, terms)
    _PHI_CACHE[key] = result
    return result


def clear_caches() -> None:
    """Drop the memoized structure-constant series."""
    _PHI_CACHE.clear()


def wdvv_general_pr(r: int, i: int, j: int, k: int, l: int,
                    order: int) -> TruncatedSeries:
    """Full multivariate WDVV residual for P^r at one index quadruple:

        sum_{e+f=r} (Phi_ije Phi_fkl - Phi_jke Phi_ifl),

    a series in x0..xr that vanishes identically.  Guarded to r in {2, 3};
    the number of structure constants grows quickly with r and the two
    surfaces of interest are covered by the dedicated residuals.
    """
    if not 2 <= r <= 3:
        raise ValueError(f"supported range is 2 <= r <= 3, got r={r}")
    target = ProjectiveSpace(r)
    for idx in (i, j, k, l):
        target.codim(idx)
    total = TruncatedSeries.zero(r + 1, order)
    for e in range(r + 1):
        f = r - e
        total = total + (phi_ijk(target, i, j, e, order)
                         * phi_ijk(target, f, k, l, order)
                         - phi_ijk(target, j, k, e, order)
                         * phi_ijk(target, i, f, l, order))
    return total
