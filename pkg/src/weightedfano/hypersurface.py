"""Invariants of a generic degree-``d`` hypersurface ``X`` in ``P(q_0, ..., q_N)``.

``X`` has complex dimension ``n = N - 1``.  All ``l``-indices below run over
the ambient tuple.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .arith import Weights
from .cohomology import WeightedProjectiveSpace, exact_quotient
from .errors import InvariantViolation, OutsideTheoremRange, PreconditionError, WeightsError

__all__ = [
    "WeightedHypersurface",
    "SmoothnessReport",
    "DiagramMultipliers",
    "Undetermined",
    "UNDETERMINED",
    "check_generic_smooth",
    "is_fano",
    "is_trivial_cone",
    "cohomology_rank_x",
    "pullback_multiplier",
    "pullback_in_theorem_range",
    "intersection_form_multiple",
    "fano_index",
    "diagram_solve",
]


class Undetermined(enum.Enum):
    """Marker for cohomology the pullback theorem and duality leave open."""

    UNDETERMINED = "undetermined"

    def __repr__(self) -> str:
        return "UNDETERMINED"

    def __str__(self) -> str:
        return "?"


UNDETERMINED = Undetermined.UNDETERMINED


@dataclass(frozen=True)
class WeightedHypersurface:
    ambient: WeightedProjectiveSpace
    degree: int

    def __post_init__(self):
        if not isinstance(self.ambient, WeightedProjectiveSpace):
            object.__setattr__(self, "ambient", WeightedProjectiveSpace(Weights(self.ambient)))
        if isinstance(self.degree, bool) or not isinstance(self.degree, int) or self.degree < 1:
            raise WeightsError(f"degree must be a positive integer, got {self.degree!r}")
        if self.ambient.dim < 2:
            raise WeightsError("a hypersurface needs an ambient space of dimension >= 2")

    @classmethod
    def of(cls, weights: Sequence[int], degree: int) -> "WeightedHypersurface":
        return cls(WeightedProjectiveSpace(Weights(weights)), degree)

    @property
    def weights(self) -> Weights:
        return self.ambient.weights

    @property
    def x_dim(self) -> int:
        return self.ambient.dim - 1

    @property
    def levels(self):
        return self.ambient.levels

    def __str__(self) -> str:
        return f"X_{self.degree} in {self.ambient}"


@dataclass(frozen=True)
class SmoothnessReport:
    pairwise_coprime: bool
    degree_divisible: bool
    offending_weights: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.pairwise_coprime and self.degree_divisible and not self.offending_weights

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def reasons(self) -> list[str]:
        out = []
        if not self.pairwise_coprime:
            out.append("weights are not pairwise coprime (positive-dimensional singular locus)")
        if self.offending_weights:
            ws = ", ".join(map(str, self.offending_weights))
            out.append(f"degree is not divisible by weight(s) {ws}; X passes through a singular point")
        return out


def check_generic_smooth(h: WeightedHypersurface) -> SmoothnessReport:
    offending = tuple(q for q in h.weights if h.degree % q)
    return SmoothnessReport(
        pairwise_coprime=h.ambient.has_isolated_singularities(),
        degree_divisible=not offending,
        offending_weights=offending,
    )


def _require_smooth(h: WeightedHypersurface) -> None:
    report = check_generic_smooth(h)
    if not report.passed:
        raise PreconditionError(f"{h}: generic member is not smooth: " + "; ".join(report.reasons()))


def is_fano(h: WeightedHypersurface) -> bool:
    """``d < sum(q)``.  Only meaningful when the generic member is smooth."""
    return h.degree < h.weights.total


def is_trivial_cone(h: WeightedHypersurface) -> bool:
    """True when ``d`` equals a weight, so ``X`` is the weighted space on the other weights."""
    return h.degree in h.weights.entries


def pullback_in_theorem_range(h: WeightedHypersurface, r: int) -> bool:
    return 0 <= r and 2 * r < h.ambient.dim - 1


def _pullback_value(h: WeightedHypersurface, r: int) -> int:
    l = h.levels
    big_n = h.ambient.dim
    return exact_quotient(l[r] * l[big_n - r], l[big_n], f"pullback multiplier at r={r}")


def pullback_multiplier(h: WeightedHypersurface, r: int) -> int:
    """Multiplier of ``i^*: H^{2r}(P(q)) -> H^{2r}(X)``, i.e. ``l_r l_{N-r} / l_N``.

    Only defined for ``2r < N - 1``; outside that range the formula is not
    established and :class:`OutsideTheoremRange` is raised.
    """
    _require_smooth(h)
    if not pullback_in_theorem_range(h, r):
        raise OutsideTheoremRange(
            f"r={r} outside the proved range 0 <= 2r < {h.ambient.dim - 1} for {h}"
        )
    return _pullback_value(h, r)


def intersection_form_multiple(h: WeightedHypersurface) -> int:
    """Integer ``k`` with ``a_1 ... a_n = k * prod(a_i)`` on ``H^2(X)``.

    ``k = l_{n+1}^{n-1} * d / l_n^n`` over the ambient tuple.
    """
    _require_smooth(h)
    n = h.x_dim
    l = h.levels
    return exact_quotient(l[n + 1] ** (n - 1) * h.degree, l[n] ** n, f"form multiple of {h}")


def fano_index(h: WeightedHypersurface) -> int:
    if not is_fano(h):
        raise PreconditionError(f"{h} is not Fano: degree {h.degree} >= {h.weights.total}")
    return h.weights.total - h.degree


def cohomology_rank_x(h: WeightedHypersurface, k: int) -> int | Undetermined:
    """Rank of ``H^k(X, Z)`` where it is determined.

    Below the middle degree ``n`` the groups are ``Z`` in even and ``0`` in odd
    degrees; above ``n + 1`` Poincare duality mirrors them.  The middle degree
    comes from the Hodge diamond.  Degree ``n + 1`` is reported as
    :data:`UNDETERMINED` because its torsion is tied to the middle cohomology.
    """
    _require_smooth(h)
    n = h.x_dim
    if not 0 <= k <= 2 * n:
        raise WeightsError(f"degree {k} outside 0..{2 * n}")
    if k < n:
        return 1 - k % 2
    if k == n:
        from .hodge import hodge_diamond

        return hodge_diamond(h).betti(n)
    if k == n + 1:
        return UNDETERMINED
    return 1 - (2 * n - k) % 2


@dataclass(frozen=True)
class DiagramMultipliers:
    """Edge multipliers of the comparison diagram between ``X`` and its cover ``X'``.

    ``X' = phi^{-1}(X)`` is an ordinary degree-``d`` hypersurface in ``P^{n+1}``.
    The edges are:

    ============================  ========================================
    ``phi_star_h2``                ``H^2(P(q)) -> H^2(P^{n+1})``, ``l_1``
    ``phi_star_h2n``               ``H^{2n}(P(q)) -> H^{2n}(P^{n+1})``, ``l_n``
    ``lefschetz_iso``              ``H^2(P^{n+1}) -> H^2(X')``, ``1``
    ``pn_form``                    ``H^{2n}(P^{n+1}) -> H^{2n}(X')``, ``d``
    ``i_star``                     ``H^2(P(q)) -> H^2(X)``
    ``x_to_xprime_h2n``            ``H^{2n}(X) -> H^{2n}(X')``, ``l_{n+1}``
    ``x_form``                     solved: the form multiple on ``X``
    ``x_to_xprime_h2``             solved: ``H^2(X) -> H^2(X')``
    ``ambient_to_x_h2n``           solved: ``H^{2n}(P(q)) -> H^{2n}(X)``
    ============================  ========================================
    """

    phi_star_h2: int
    phi_star_h2n: int
    lefschetz_iso: int
    pn_form: int
    i_star: Fraction
    x_to_xprime_h2n: int
    x_form: Fraction
    x_to_xprime_h2: Fraction
    ambient_to_x_h2n: Fraction
    ambient_form: Fraction
    i_star_in_theorem_range: bool = True
    checks: dict[str, tuple[Fraction, Fraction]] = field(default_factory=dict, compare=False)

    def commutes(self) -> bool:
        return all(a == b for a, b in self.checks.values())


def diagram_solve(h: WeightedHypersurface) -> DiagramMultipliers:
    """Fill the known edges of the comparison diagram and solve for the rest.

    The unknowns come from two squares: the ``H^2`` triangle
    (``i_star * x_to_xprime_h2 = lefschetz_iso * phi_star_h2``) and the
    ``n``-form square (``x_form * x_to_xprime_h2n = pn_form * x_to_xprime_h2^n``).
    The remaining faces are then checked, including the outer one that goes
    through the cup product on the ambient space.
    """
    _require_smooth(h)
    n = h.x_dim
    l = h.levels
    d = h.degree

    phi_h2 = l[1]
    phi_h2n = l[n]
    lef = 1
    pn_form = d
    i_star = Fraction(l[1] * l[n], l[n + 1])
    x_h2n = l[n + 1]

    x_h2 = Fraction(lef * phi_h2) / i_star
    x_form = Fraction(pn_form) * x_h2**n / x_h2n
    # H^{2n}(P(q)) -> H^{2n}(X) -> H^{2n}(X') must equal phi^* followed by the degree-d map
    amb_h2n = Fraction(phi_h2n * pn_form, x_h2n)
    # xi_1^n = (l_1^n / l_n) xi_n on the ambient space
    amb_form = Fraction(l[1] ** n, l[n])

    checks = {
        "h2 triangle": (i_star * x_h2, Fraction(lef * phi_h2)),
        "form square": (x_form * x_h2n, pn_form * x_h2**n),
        "h2n triangle": (amb_h2n * x_h2n, Fraction(phi_h2n * pn_form)),
        "cup on ambient vs X": (i_star**n * x_form, amb_form * amb_h2n),
        "form vs closed formula": (x_form, Fraction(l[n + 1] ** (n - 1) * d, l[n] ** n)),
        "ambient form vs structure constants": (amb_form, _ambient_power_constant(h.ambient, n)),
    }
    result = DiagramMultipliers(
        phi_star_h2=phi_h2,
        phi_star_h2n=phi_h2n,
        lefschetz_iso=lef,
        pn_form=pn_form,
        i_star=i_star,
        x_to_xprime_h2n=x_h2n,
        x_form=x_form,
        x_to_xprime_h2=x_h2,
        ambient_to_x_h2n=amb_h2n,
        ambient_form=amb_form,
        i_star_in_theorem_range=pullback_in_theorem_range(h, 1),
        checks=checks,
    )
    bad = [name for name, (a, b) in checks.items() if a != b]
    if bad:
        raise InvariantViolation(f"diagram for {h} does not commute: {', '.join(bad)}")
    if x_form.denominator != 1 or x_form <= 0:
        raise InvariantViolation(f"solved form multiple {x_form} for {h} is not a positive integer")
    return result


def _ambient_power_constant(space: WeightedProjectiveSpace, n: int) -> Fraction:
    """Coefficient of ``xi_n`` in ``xi_1^n``, by repeated cup products."""
    cls = space.xi(1)
    for _ in range(n - 1):
        cls = cls * space.xi(1)
    return Fraction(cls.coefficient)
