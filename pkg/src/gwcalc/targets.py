"""Target spaces, cohomology bases and invariant keys.

Two targets are supported: projective space P^r with basis h^0, ..., h^r
(h^i the class of a generic codimension-i linear subspace) and the quadric
P1 x P1 with basis T_0 (fundamental class), T_1 (vertical rule), T_2
(horizontal rule), T_3 (point class).  For P^r the basis index equals the
codimension; for P1 x P1 the codimensions are 0, 1, 1, 2.

An invariant key records a target, a degree (an integer, or a bidegree
pair for P1 x P1) and the multiset of basis classes fed into the invariant,
stored as an exponent vector of occurrence counts.  Because only the counts
are stored, keys are invariant under permutation of the input classes by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

ExponentVector = tuple[int, ...]


@dataclass(frozen=True)
class ProjectiveSpace:
    """P^r for r >= 1."""
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"projective space needs r >= 1, got r={self.r}")

    @property
    def basis_size(self) -> int:
        return self.r + 1

    @property
    def dimension(self) -> int:
        return self.r

    def codim(self, index: int) -> int:
        if not 0 <= index <= self.r:
            raise ValueError(f"basis index {index} out of range for P^{self.r}")
        return index

    def basis_name(self, index: int) -> str:
        return f"h{index}"

    def __str__(self) -> str:
        return f"P^{self.r}"


@dataclass(frozen=True)
class P1xP1:
    """The quadric surface P1 x P1."""

    _CODIMS = (0, 1, 1, 2)

    @property
    def basis_size(self) -> int:
        return 4

    @property
    def dimension(self) -> int:
        return 2

    def codim(self, index: int) -> int:
        if not 0 <= index <= 3:
            raise ValueError(f"basis index {index} out of range for P1xP1")
        return self._CODIMS[index]

    def basis_name(self, index: int) -> str:
        return f"T{index}"

    def __str__(self) -> str:
        return "P1xP1"


TargetSpace = Union[ProjectiveSpace, P1xP1]

P1XP1 = P1xP1()

Degree = Union[int, tuple[int, int]]


def validate_degree(target: TargetSpace, degree: Degree) -> Degree:
    """Check the degree shape and non-negativity for the given target."""
    if isinstance(target, ProjectiveSpace):
        if not isinstance(degree, int):
            raise ValueError(f"P^r expects an integer degree, got {degree!r}")
        if degree < 0:
            raise ValueError(f"degree must be >= 0, got {degree}")
        return degree
    d, e = degree
    if d < 0 or e < 0:
        raise ValueError(f"bidegree components must be >= 0, got ({d}, {e})")
    return (d, e)


def exponents_from_classes(target: TargetSpace, classes: Iterable[int]) -> ExponentVector:
    """Occurrence counts of each basis index among ``classes``."""
    counts = [0] * target.basis_size
    for idx in classes:
        target.codim(idx)  # range check
        counts[idx] += 1
    return tuple(counts)


def total_codim(target: TargetSpace, exponents: ExponentVector) -> int:
    """Sum of input codimensions recorded by an exponent vector."""
    if len(exponents) != target.basis_size:
        raise ValueError(
            f"exponent vector length {len(exponents)} does not match "
            f"basis size {target.basis_size} of {target}")
    return sum(target.codim(i) * a for i, a in enumerate(exponents) if a)


@dataclass(frozen=True)
class InvariantKey:
    """One Gromov-Witten invariant: target, degree, input class counts."""
    target: TargetSpace
    degree: Degree
    exponents: ExponentVector

    def __post_init__(self) -> None:
        validate_degree(self.target, self.degree)
        if len(self.exponents) != self.target.basis_size:
            raise ValueError(
                f"exponent vector length {len(self.exponents)} does not "
                f"match basis size {self.target.basis_size} of {self.target}")
        if any(a < 0 for a in self.exponents):
            raise ValueError(f"exponents must be >= 0, got {self.exponents}")

    @classmethod
    def from_classes(cls, target: TargetSpace, degree: Degree,
                     classes: Iterable[int]) -> "InvariantKey":
        return cls(target, degree, exponents_from_classes(target, classes))

    @property
    def n_marks(self) -> int:
        return sum(self.exponents)

    @property
    def codim_sum(self) -> int:
        return total_codim(self.target, self.exponents)

    def __str__(self) -> str:
        names = [self.target.basis_name(i) + (f"^{a}" if a > 1 else "")
                 for i, a in enumerate(self.exponents) if a]
        body = "*".join(names) if names else "1"
        return f"I_{self.degree}({body}) on {self.target}"


def parse_basis_class(target: TargetSpace, name: str) -> int:
    """Parse a basis class name such as ``h2`` or ``T3`` into its index."""
    text = name.strip()
    if isinstance(target, ProjectiveSpace):
        if text and text[0] in "hH" and text[1:].isdigit():
            idx = int(text[1:])
            if 0 <= idx <= target.r:
                return idx
        raise ValueError(f"unknown basis class {name!r} for {target}")
    if text and text[0] in "tT" and text[1:].isdigit():
        idx = int(text[1:])
        if 0 <= idx <= 3:
            return idx
    raise ValueError(f"unknown basis class {name!r} for P1xP1")
