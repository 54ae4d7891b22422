"""Integral cohomology ring of a weighted projective space.

``H^{2k}`` is free of rank one for ``0 <= k <= N`` with a distinguished
generator ``xi_k`` whose pullback along the covering map
``phi: P^N -> P(q)`` is ``l_k`` times the ``k``-th power of the hyperplane class.
Products are therefore ``xi_k * xi_j = (l_k * l_j / l_{k+j}) xi_{k+j}``.
Classes are stored as a single integer coordinate in that basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .arith import LevelInvariants, Weights, l_profile, pairwise_coprime
from .errors import InvariantViolation, PreconditionError, WeightsError

__all__ = [
    "WeightedProjectiveSpace",
    "CohomologyClass",
    "cup",
    "cohomology_rank",
    "exact_quotient",
]


def exact_quotient(num: int, den: int, what: str = "quotient") -> int:
    """Divide, raising :class:`InvariantViolation` if the result is not an integer."""
    q, rem = divmod(num, den)
    if rem:
        raise InvariantViolation(f"{what} {num}/{den} is not an integer")
    return q


@dataclass(frozen=True)
class WeightedProjectiveSpace:
    weights: Weights

    def __post_init__(self):
        if not isinstance(self.weights, Weights):
            object.__setattr__(self, "weights", Weights(self.weights))

    @classmethod
    def of(cls, *weights: int) -> "WeightedProjectiveSpace":
        return cls(Weights(weights))

    @property
    def dim(self) -> int:
        return self.weights.dim

    @cached_property
    def levels(self) -> LevelInvariants:
        return l_profile(self.weights)

    def __str__(self) -> str:
        return f"P({self.weights})"

    def _check_index(self, k: int, name: str = "k") -> None:
        if not 0 <= k <= self.dim:
            raise WeightsError(f"{name}={k} out of range 0..{self.dim}")

    def cohomology_rank(self, i: int) -> int:
        """Rank of ``H^i(P(q), Z)``; the groups are torsion free."""
        if i < 0:
            raise WeightsError(f"cohomological degree must be >= 0, got {i}")
        return 1 if i % 2 == 0 and i <= 2 * self.dim else 0

    def phi_pullback_multiplier(self, k: int) -> int:
        self._check_index(k)
        return self.levels[k]

    def cup_structure_constant(self, k: int, j: int) -> int:
        """Integer ``c`` with ``xi_k * xi_j = c * xi_{k+j}``."""
        if k < 0 or j < 0:
            raise WeightsError(f"degree indices must be >= 0, got {k}, {j}")
        if k + j > self.dim:
            raise WeightsError(f"xi_{k} * xi_{j} lands in H^{2 * (k + j)} = 0 (dim {self.dim})")
        l = self.levels
        return exact_quotient(l[k] * l[j], l[k + j], f"structure constant c({k},{j})")

    def structure_table(self) -> list[list[int | None]]:
        """Square table of structure constants, ``None`` where ``k + j > N``."""
        n = self.dim
        return [
            [self.cup_structure_constant(k, j) if k + j <= n else None for j in range(n + 1)]
            for k in range(n + 1)
        ]

    def phi_degree(self) -> int:
        """Degree of the covering map, ``prod(q) / gcd(q) = l_N``."""
        return self.levels[self.dim]

    def has_isolated_singularities(self) -> bool:
        return pairwise_coprime(self.weights)

    def singular_coordinate_points(self) -> list[int]:
        """Indices ``i`` whose coordinate point ``P_i`` is singular."""
        if not self.has_isolated_singularities():
            raise PreconditionError(
                f"weights {self.weights} are not pairwise coprime; singular locus is not zero-dimensional"
            )
        return [i for i, q in enumerate(self.weights) if q > 1]

    def xi(self, k: int, coefficient: int = 1) -> "CohomologyClass":
        self._check_index(k)
        return CohomologyClass(self, k, coefficient)


@dataclass(frozen=True)
class CohomologyClass:
    """``coefficient * xi_degree_index`` in ``H^{2 * degree_index}``."""

    space: WeightedProjectiveSpace = field(repr=False)
    degree_index: int
    coefficient: int = 1

    def __post_init__(self):
        if not 0 <= self.degree_index <= self.space.dim:
            raise WeightsError(f"degree index {self.degree_index} out of range 0..{self.space.dim}")

    def __mul__(self, other: "CohomologyClass") -> "CohomologyClass":
        return cup(self, other)

    def __str__(self) -> str:
        return f"{self.coefficient}*xi_{self.degree_index}"


def cup(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    if a.space.weights != b.space.weights:
        raise WeightsError(f"cannot multiply classes on {a.space} and {b.space}")
    k, j = a.degree_index, b.degree_index
    c = a.space.cup_structure_constant(k, j)
    return CohomologyClass(a.space, k + j, a.coefficient * b.coefficient * c)


def cohomology_rank(space: WeightedProjectiveSpace | Sequence[int], i: int) -> int:
    return _space(space).cohomology_rank(i)


def _space(space) -> WeightedProjectiveSpace:
    return space if isinstance(space, WeightedProjectiveSpace) else WeightedProjectiveSpace(Weights(space))
