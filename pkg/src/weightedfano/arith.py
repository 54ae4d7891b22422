"""Exact subset invariants of a weight tuple.

For a subset ``I`` of coordinate indices, ``l_I`` is the product of the selected
weights divided by their gcd; ``l_r`` is the lcm of ``l_I`` over all subsets of
size ``r + 1``.  Python integers are arbitrary precision, so nothing here can
overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import WeightsError

__all__ = [
    "Weights",
    "LevelInvariants",
    "l_subset",
    "l_level",
    "l_level_reference",
    "l_profile",
    "pairwise_coprime",
    "parse_weights",
]


@dataclass(frozen=True)
class Weights:
    """Ordered tuple ``(q_0, ..., q_N)`` of positive integers.

    The tuple is kept exactly as given: no sorting, no division by common factors.
    """

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        entries = tuple(entries)
        if len(entries) < 2:
            raise WeightsError(f"need at least two weights, got {len(entries)}")
        for q in entries:
            if isinstance(q, bool) or not isinstance(q, int):
                raise WeightsError(f"weights must be integers, got {q!r}")
            if q < 1:
                raise WeightsError(f"weights must be positive, got {q}")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        """Complex dimension ``N`` of the ambient weighted projective space."""
        return len(self.entries) - 1

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))

    def sorted(self) -> "Weights":
        return Weights(sorted(self.entries))

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def product(self) -> int:
        return math.prod(self.entries)


@dataclass(frozen=True)
class LevelInvariants:
    """The vector ``(l_0, ..., l_N)``."""

    values: tuple[int, ...]

    def __getitem__(self, r: int) -> int:
        return self.values[r]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


def parse_weights(text: str) -> Weights:
    """Parse ``"1,1,1,2,3"`` into :class:`Weights`."""
    parts = [p.strip() for p in text.split(",")]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise WeightsError(f"cannot parse weights {text!r}: expected comma-separated integers") from None
    return Weights(values)


def _as_weights(weights: Weights | Sequence[int]) -> Weights:
    return weights if isinstance(weights, Weights) else Weights(weights)


def l_subset(weights: Weights | Sequence[int], index_set: Iterable[int]) -> int:
    """Return ``prod(q_i) / gcd(q_i)`` over the selected indices."""
    weights = _as_weights(weights)
    idx = set(index_set)
    if not idx:
        raise WeightsError("index set must be nonempty")
    for i in idx:
        if not 0 <= i < len(weights):
            raise WeightsError(f"index {i} out of range for {len(weights)} weights")
    selected = [weights[i] for i in idx]
    return math.prod(selected) // math.gcd(*selected)


def _check_level(weights: Weights, r: int) -> None:
    if not 0 <= r <= weights.dim:
        raise WeightsError(f"level r={r} out of range 0..{weights.dim}")


def _lcm_of_subset_invariants(entries: tuple[int, ...], size: int) -> int:
    out = 1
    for c in combinations(entries, size):
        out = math.lcm(out, math.prod(c) // math.gcd(*c))
    return out


def l_level_reference(weights: Weights | Sequence[int], r: int) -> int:
    """``l_r`` by enumerating every ``(r+1)``-subset of indices."""
    weights = _as_weights(weights)
    _check_level(weights, r)
    return _lcm_of_subset_invariants(weights.entries, r + 1)


def pairwise_coprime(weights: Weights | Sequence[int]) -> bool:
    entries = tuple(weights)
    return all(math.gcd(a, b) == 1 for a, b in combinations(entries, 2))


def l_level(weights: Weights | Sequence[int], r: int) -> int:
    """``l_r`` with a shortcut for pairwise coprime weights.

    For pairwise coprime weights every subset of size >= 2 has gcd 1 and every
    weight occurs in some subset, so ``l_r`` is the full product for ``r >= 1``.
    Other tuples fall back to subset enumeration.
    """
    weights = _as_weights(weights)
    _check_level(weights, r)
    if r == 0:
        return 1
    entries = weights.entries
    prod = math.prod(entries)
    # pairwise coprime iff the lcm already equals the product
    if math.lcm(*entries) == prod:
        return prod
    return _lcm_of_subset_invariants(entries, r + 1)


def l_profile(weights: Weights | Sequence[int]) -> LevelInvariants:
    weights = _as_weights(weights)
    return LevelInvariants(tuple(l_level(weights, r) for r in range(weights.dim + 1)))
