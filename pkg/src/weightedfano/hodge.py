"""Hodge diamonds of smooth weighted hypersurfaces.

The primitive middle Hodge numbers of a generic degree-``d`` hypersurface in
``P(q_0, ..., q_{n+1})`` are graded pieces of its Jacobian ring, whose
Poincare series is ``prod_i (1 - t^{d - q_i}) / (1 - t^{q_i})``:
``h^{n-q,q}_prim`` is the coefficient of ``t^{(q+1)d - sum(q)}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .arith import Weights
from .errors import PreconditionError, WeightsError
from .hypersurface import WeightedHypersurface, check_generic_smooth, is_trivial_cone
from .series import TruncatedSeries

__all__ = [
    "HodgeDiamond",
    "jacobian_series",
    "middle_primitive_hodge",
    "hodge_diamond",
]


@dataclass(frozen=True)
class HodgeDiamond:
    n: int
    entries: tuple[tuple[int, ...], ...]  # entries[p][q] = h^{p,q}

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        return self.entries[p][q]

    @classmethod
    def projective_space(cls, n: int) -> "HodgeDiamond":
        return cls(n, tuple(tuple(int(p == q) for q in range(n + 1)) for p in range(n + 1)))

    def betti(self, k: int) -> int:
        return sum(self.entries[p][k - p] for p in range(self.n + 1) if 0 <= k - p <= self.n)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * self.betti(k) for k in range(2 * self.n + 1))

    def middle_row(self) -> tuple[int, ...]:
        """``(h^{n,0}, h^{n-1,1}, ..., h^{0,n})``."""
        return tuple(self.entries[self.n - q][q] for q in range(self.n + 1))

    def is_symmetric(self) -> bool:
        e, n = self.entries, self.n
        return all(e[p][q] == e[q][p] for p in range(n + 1) for q in range(n + 1))

    def is_dual(self) -> bool:
        e, n = self.entries, self.n
        return all(e[p][q] == e[n - p][n - q] for p in range(n + 1) for q in range(n + 1))

    def off_middle_trivial(self) -> bool:
        e, n = self.entries, self.n
        return all(
            e[p][q] == int(p == q) for p in range(n + 1) for q in range(n + 1) if p + q != n
        )

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "h": [list(r) for r in self.entries]})

    @classmethod
    def from_json(cls, text: str) -> "HodgeDiamond":
        data = json.loads(text)
        return cls(data["n"], tuple(tuple(r) for r in data["h"]))

    def render(self) -> str:
        """Text triangle, ``h^{0,0}`` on top, row ``k`` lists ``h^{k,0} ... h^{0,k}``."""
        n = self.n
        width = max(len(str(x)) for r in self.entries for x in r)
        cell = " " * width
        lines = []
        for k in range(2 * n + 1):
            ps = range(min(k, n), max(0, k - n) - 1, -1)
            cells = [str(self.entries[p][k - p]).center(width) for p in ps]
            pad = abs(n - k)
            lines.append((cell + " ") * pad + (cell + " ").join(cells))
        return "\n".join(line.rstrip() for line in lines)

    def __str__(self) -> str:
        return self.render()


def jacobian_series(weights: Weights | Sequence[int], d: int, truncation: int | None = None) -> TruncatedSeries:
    """Poincare series of the Jacobian ring of a generic degree-``d`` polynomial.

    ``truncation`` defaults to ``(n + 1) * d`` with ``n = len(weights) - 2`` and
    may not be smaller.
    """
    weights = weights if isinstance(weights, Weights) else Weights(weights)
    if any(d <= q for q in weights):
        raise PreconditionError(f"degree {d} must exceed every weight of {weights}")
    n = len(weights) - 2
    minimum = (n + 1) * d
    if truncation is None:
        truncation = minimum
    elif truncation < minimum:
        raise WeightsError(f"truncation {truncation} below (n+1)*d = {minimum}")
    num = TruncatedSeries.one(truncation)
    den = TruncatedSeries.one(truncation)
    for q in weights:
        num = num * TruncatedSeries.binomial(-1, d - q, truncation)
        den = den * TruncatedSeries.binomial(-1, q, truncation)
    return num / den


def _series_for(h: WeightedHypersurface) -> TruncatedSeries:
    # margin of one full degree beyond the largest exponent read off
    return jacobian_series(h.weights, h.degree, (h.x_dim + 2) * h.degree)


def _require_smooth(h: WeightedHypersurface) -> None:
    report = check_generic_smooth(h)
    if not report.passed:
        raise PreconditionError(f"{h}: generic member is not smooth: " + "; ".join(report.reasons()))


def middle_primitive_hodge(h: WeightedHypersurface, q: int) -> int:
    _require_smooth(h)
    n = h.x_dim
    if not 0 <= q <= n:
        raise WeightsError(f"q={q} outside 0..{n}")
    exponent = (q + 1) * h.degree - h.weights.total
    if exponent < 0:
        return 0
    return _series_for(h)[exponent]


def hodge_diamond(h: WeightedHypersurface) -> HodgeDiamond:
    _require_smooth(h)
    n = h.x_dim
    if is_trivial_cone(h):
        # smooth and d = q_j forces every other weight to be 1, so X is P^n
        return HodgeDiamond.projective_space(n)
    series = _series_for(h)
    total = h.weights.total
    rows = [[int(p == q and 2 * p != n) for q in range(n + 1)] for p in range(n + 1)]
    for q in range(n + 1):
        exponent = (q + 1) * h.degree - total
        prim = series[exponent] if exponent >= 0 else 0
        rows[n - q][q] = prim + int(2 * q == n)
    return HodgeDiamond(n, tuple(tuple(r) for r in rows))
