"""Toric fan of a weighted projective space and cone multiplicities.

The rays ``v_0 = -(1/q_0) sum e_i`` and ``v_i = e_i / q_i`` generate a lattice
``N_Q`` and a complete simplicial fan whose toric variety is ``P(q)``.  We
multiply every ray by ``L = lcm(q)`` so that all linear algebra is over the
integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

from .arith import Weights
from .errors import InvariantViolation, PreconditionError

Matrix = list[list[int]]

__all__ = [
    "RayMatrix",
    "LatticeBasis",
    "build_rays",
    "lattice_basis",
    "cone_multiplicity",
    "singular_locus_dimension",
    "hermite_normal_form",
    "determinant",
]


@dataclass(frozen=True)
class RayMatrix:
    rows: tuple[tuple[int, ...], ...]
    scale: int
    weights: Weights

    @property
    def dim(self) -> int:
        return len(self.rows[0])


@dataclass(frozen=True)
class LatticeBasis:
    basis: tuple[tuple[int, ...], ...]
    determinant: int


def build_rays(weights: Weights | Sequence[int]) -> RayMatrix:
    weights = weights if isinstance(weights, Weights) else Weights(weights)
    n = weights.dim
    scale = math.lcm(*weights)
    rows = [tuple([-(scale // weights[0])] * n)]
    for i in range(1, n + 1):
        row = [0] * n
        row[i - 1] = scale // weights[i]
        rows.append(tuple(row))
    return RayMatrix(tuple(rows), scale, weights)


def hermite_normal_form(rows: Iterable[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of an integer matrix.

    Returns the nonzero rows only: upper echelon, positive pivots, entries above
    each pivot reduced into ``[0, pivot)``.  The rows span the same lattice as
    the input rows.
    """
    a = [list(r) for r in rows]
    if not a:
        return []
    ncols = len(a[0])
    out: Matrix = []
    for col in range(ncols):
        # Euclid on the column among the rows not yet used as pivots.
        while True:
            nz = [r for r in a if r[col] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda r: abs(r[col]))
            for r in nz:
                if r is not piv:
                    f = r[col] // piv[col]
                    for c in range(col, ncols):
                        r[c] -= f * piv[c]
        nz = [r for r in a if r[col] != 0]
        if not nz:
            continue
        piv = nz[0]
        a.remove(piv)
        if piv[col] < 0:
            piv = [-x for x in piv]
        for r in out:
            f = r[col] // piv[col]
            if f:
                for c in range(col, ncols):
                    r[c] -= f * piv[c]
        out.append(piv)
    return out


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def lattice_basis(rays: RayMatrix) -> LatticeBasis:
    hnf = hermite_normal_form(rays.rows)
    if len(hnf) != rays.dim:
        raise InvariantViolation(f"rays of {rays.weights} have rank {len(hnf)} < {rays.dim}")
    basis = tuple(tuple(r) for r in hnf)
    return LatticeBasis(basis, determinant(basis))


def coordinates(lattice: LatticeBasis, vector: Sequence[int]) -> tuple[int, ...]:
    """Integer coordinates of ``vector`` in the lattice basis.

    Raises :class:`InvariantViolation` if the vector is not a lattice point.
    """
    b = lattice.basis
    n = len(b)
    rest = list(vector)
    x = [0] * n
    # basis is upper echelon with pivots on the diagonal
    for i in range(n):
        c, rem = divmod(rest[i], b[i][i])
        if rem:
            raise InvariantViolation(f"{tuple(vector)} is not in the lattice")
        x[i] = c
        for j in range(i, n):
            rest[j] -= c * b[i][j]
    return tuple(x)


def contains_all_rays(rays: RayMatrix, lattice: LatticeBasis) -> bool:
    try:
        for r in rays.rows:
            coordinates(lattice, r)
    except InvariantViolation:
        return False
    return True


def _minor_gcd(rows: Sequence[Sequence[int]]) -> int:
    k = len(rows)
    ncols = len(rows[0])
    return reduce(
        math.gcd,
        (abs(determinant([[r[c] for c in cols] for r in rows])) for cols in combinations(range(ncols), k)),
        0,
    )


def cone_multiplicity(
    rays: RayMatrix,
    lattice: LatticeBasis,
    cone: Iterable[int],
    *,
    primitive: bool = False,
) -> int:
    """Index of the sublattice spanned by the cone's generators in its saturation.

    By default the generators are the rays ``v_i`` exactly as the fan is built.
    For well-formed weights these are primitive in ``N_Q``; otherwise
    ``primitive=True`` first divides each generator by its content, giving the
    multiplicity of the underlying (reduced) toric variety.
    """
    idx = sorted(set(cone))
    if not idx:
        return 1
    if len(idx) > rays.dim:
        raise PreconditionError(f"cone {idx} has more than {rays.dim} generators")
    gens = [coordinates(lattice, rays.rows[i]) for i in idx]
    if primitive:
        gens = [tuple(x // math.gcd(*g) for x in g) for g in gens]
    m = _minor_gcd(gens)
    if m == 0:
        raise PreconditionError(f"rays {idx} are linearly dependent")
    return m


def singular_locus_dimension(weights: Weights | Sequence[int], *, primitive: bool = False) -> int:
    """Largest dimension of a torus orbit closure through a non-smooth cone, or -1."""
    rays = build_rays(weights)
    lattice = lattice_basis(rays)
    n = rays.dim
    for size in range(1, n + 1):
        for cone in combinations(range(n + 1), size):
            if cone_multiplicity(rays, lattice, cone, primitive=primitive) > 1:
                return n - size
    return -1
