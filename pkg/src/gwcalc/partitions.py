"""Weighted partitions indexing boundary divisors of the moduli spaces.

A boundary divisor of a space of stable maps is labeled by a split of the
mark set into two twigs together with a split of the (bi)degree.  A side
carrying degree zero must hold at least two marks: together with the node
that gives the three special points a degree-zero twig needs, so the full
Kontsevich three-point condition is met without counting the node here.

``enumerate_partitions`` lists the divisors appearing in one pinned
boundary relation D(ij|kl): the pinned pair (i, j) always sits on the A
side, which fixes the orientation and prevents double counting across
complements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .exact import multinomial


@dataclass(frozen=True)
class MarkSet:
    """An ordered set of distinct mark labels."""
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("mark labels must be distinct")

    @classmethod
    def standard(cls, n: int) -> "MarkSet":
        """m1, m2, p1, ..., p(n-2): the naming used by the curve counts."""
        if n < 2:
            raise ValueError(f"a standard mark set needs n >= 2, got {n}")
        return cls(("m1", "m2") + tuple(f"p{i}" for i in range(1, n - 1)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"mark {label!r} is not in the mark set") from None

    def __iter__(self):
        return iter(self.labels)


@dataclass(frozen=True)
class WeightedPartition:
    """A two-twig boundary label: mark split (A, B) plus degree split.

    ``e_a``/``e_b`` are None for a plain degree and integers for a
    bidegree.  Stability demands at least two marks on a side whose total
    degree vanishes.
    """
    a: tuple[str, ...]
    b: tuple[str, ...]
    d_a: int
    d_b: int
    e_a: int | None = None
    e_b: int | None = None

    def __post_init__(self) -> None:
        if (self.e_a is None) != (self.e_b is None):
            raise ValueError("either both or neither bidegree side is set")
        for side, total in (("A", self.total_a), ("B", self.total_b)):
            if total < 0:
                raise ValueError(f"negative degree on side {side}")
        if self.total_a == 0 and len(self.a) < 2:
            raise ValueError("unstable: degree-zero side A has < 2 marks")
        if self.total_b == 0 and len(self.b) < 2:
            raise ValueError("unstable: degree-zero side B has < 2 marks")

    @property
    def total_a(self) -> int:
        return self.d_a + (self.e_a or 0)

    @property
    def total_b(self) -> int:
        return self.d_b + (self.e_b or 0)

    def to_json(self) -> dict:
        record = {"A": list(self.a), "B": list(self.b),
                  "dA": self.d_a, "dB": self.d_b}
        if self.e_a is not None:
            record["eA"] = self.e_a
            record["eB"] = self.e_b
        return record


def _degree_splits(degree) -> Iterator[tuple[int, int, int | None, int | None]]:
    if isinstance(degree, int):
        if degree < 0:
            raise ValueError(f"degree must be >= 0, got {degree}")
        for da in range(degree + 1):
            yield da, degree - da, None, None
        return
    d, e = degree
    if d < 0 or e < 0:
        raise ValueError(f"bidegree components must be >= 0, got {degree}")
    for da in range(d + 1):
        for ea in range(e + 1):
            yield da, d - da, ea, e - ea


def enumerate_partitions(marks: MarkSet, degree,
                         pins: tuple[Sequence[str], Sequence[str]]
                         ) -> list[WeightedPartition]:
    """All stable weighted partitions with the pins (i, j | k, l) honored.

    The four pinned marks must be distinct members of the mark set; i and j
    go to side A, k and l to side B, the remaining marks are distributed
    freely.  The result is in canonical order: degree split ascending, then
    the A side in mark-set order.
    """
    (i, j), (k, l) = pins
    pinned = [i, j, k, l]
    positions = [marks.index(p) for p in pinned]
    if len(set(positions)) != 4:
        raise ValueError("the four pinned marks must be distinct")
    spare = [m for m in marks if m not in pinned]
    out: list[WeightedPartition] = []
    order = {label: pos for pos, label in enumerate(marks)}
    for da, db, ea, eb in _degree_splits(degree):
        total_a = da + (ea or 0)
        total_b = db + (eb or 0)
        for mask in range(1 << len(spare)):
            side_a = [spare[t] for t in range(len(spare)) if mask >> t & 1]
            side_b = [spare[t] for t in range(len(spare)) if not mask >> t & 1]
            a = sorted([i, j] + side_a, key=order.__getitem__)
            b = sorted([k, l] + side_b, key=order.__getitem__)
            if total_a == 0 and len(a) < 2:
                continue
            if total_b == 0 and len(b) < 2:
                continue
            out.append(WeightedPartition(tuple(a), tuple(b), da, db, ea, eb))
    out.sort(key=lambda p: (p.d_a, p.e_a or 0,
                            tuple(order[m] for m in p.a)))
    return out


def count_pinned_partitions(marks: MarkSet, degree,
                            pins: tuple[Sequence[str], Sequence[str]]) -> int:
    """Closed-form count of the pinned enumeration: with both pinned pairs
    present, stability never bites, so the count factors as
    (number of degree splits) x 2^(number of spare marks)."""
    (i, j), (k, l) = pins
    if len({marks.index(p) for p in (i, j, k, l)}) != 4:
        raise ValueError("the four pinned marks must be distinct")
    splits = sum(1 for _ in _degree_splits(degree))
    return splits * 2 ** (marks.size - 4)


def stratum_dimension(n: int, delta: int) -> int:
    """Dimension of the locus of stable n-pointed rational curves with
    delta nodes: n - 3 - delta."""
    if n < 3:
        raise ValueError(f"need n >= 3 marks, got {n}")
    if not 0 <= delta <= n - 3:
        raise ValueError(
            f"node count must satisfy 0 <= delta <= n - 3, got {delta}")
    return n - 3 - delta


def boundary_divisor_count_m0n(n: int) -> int:
    """Number of boundary divisors of the n-pointed curve space:
    unordered splits A | B with both sides of size >= 2, i.e.
    2^(n-1) - 1 - n."""
    if n < 4:
        raise ValueError(f"boundary divisors need n >= 4, got {n}")
    return 2 ** (n - 1) - 1 - n


def count_labeled_configurations(n: int, shape: Sequence[int]) -> int:
    """Number of ways to distribute n labeled marks over twigs of the
    given sizes: the multinomial n! / prod(size!)."""
    sizes = list(shape)
    if any(s < 0 for s in sizes):
        raise ValueError(f"twig sizes must be >= 0, got {shape}")
    if sum(sizes) != n:
        raise ValueError(f"twig sizes {shape} must sum to n={n}")
    return multinomial(sizes)
