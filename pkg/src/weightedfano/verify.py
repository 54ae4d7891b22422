"""Bounded exhaustive cross-checks, each pairing an implementation with an independent route."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Callable, Iterable, Iterator

from .arith import Weights, l_level, l_level_reference, l_profile, pairwise_coprime
from .enumerate import enumerate_smooth_fano
from .errors import InvariantViolation
from .hodge import jacobian_series
from .hypersurface import (
    WeightedHypersurface,
    diagram_solve,
    intersection_form_multiple,
    pullback_in_theorem_range,
    _pullback_value,
)
from .toric import build_rays, contains_all_rays, lattice_basis, singular_locus_dimension

__all__ = [
    "CheckResult",
    "SCOPES",
    "run_scope",
    "weight_multisets",
    "weight_tuples",
    "smooth_inputs",
    "fermat_monomial_count",
    "check_arith",
    "check_integrality",
    "check_toric",
    "check_diagram",
    "check_hodge",
]


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def summary(self, limit: int = 5) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"[{status}] {self.name}: {self.checked} checked, {len(self.failures)} failed"]
        lines += [f"    {m}" for m in self.failures[:limit]]
        if len(self.failures) > limit:
            lines.append(f"    ... {len(self.failures) - limit} more")
        lines += [f"    note: {m}" for m in self.notes]
        return "\n".join(lines)


def weight_tuples(max_entry: int, max_len: int, min_len: int = 2) -> Iterator[tuple[int, ...]]:
    """Every ordered tuple."""
    for k in range(min_len, max_len + 1):
        yield from product(range(1, max_entry + 1), repeat=k)


def weight_multisets(max_entry: int, max_len: int, min_len: int = 2) -> Iterator[tuple[int, ...]]:
    """Every tuple up to reordering, as ascending tuples."""
    for k in range(min_len, max_len + 1):
        yield from combinations_with_replacement(range(1, max_entry + 1), k)


def smooth_inputs(max_entry: int, max_len: int, max_degree: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """``(weights, d)`` with pairwise coprime weights dividing ``d``, ambient dim >= 2."""
    for q in weight_multisets(max_entry, max_len, min_len=3):
        if not pairwise_coprime(q):
            continue
        step = math.lcm(*q)
        for d in range(step, max_degree + 1, step):
            yield q, d


# --- arith -------------------------------------------------------------------


def check_arith(max_entry: int = 8, max_len: int = 7) -> CheckResult:
    """``l_0 = 1``, ``l_1 = lcm``, ``l_N = prod/gcd``; divisibility; both ``l_r`` routes agree."""
    res = CheckResult(f"arith: level identities, entries <= {max_entry}, length <= {max_len}")
    for q in weight_multisets(max_entry, max_len):
        w = Weights(q)
        n = w.dim
        res.checked += 1
        if l_level(w, 0) != 1:
            res.fail(f"{q}: l_0 != 1")
        if l_level(w, 1) != math.lcm(*q):
            res.fail(f"{q}: l_1 != lcm")
        if l_level(w, n) != math.prod(q) // math.gcd(*q):
            res.fail(f"{q}: l_N != prod/gcd")
        levels = l_profile(w)
        for r in range(n + 1):
            if levels[r] != l_level_reference(w, r):
                res.fail(f"{q}: optimized l_{r} disagrees with subset enumeration")
        for k in range(n + 1):
            for j in range(n + 1 - k):
                if (levels[k] * levels[j]) % levels[k + j]:
                    res.fail(f"{q}: l_{k + j} does not divide l_{k} l_{j}")
    return res


def check_integrality(max_entry: int = 8, max_len: int = 8, max_degree: int = 30) -> CheckResult:
    """Structure constants, pullback multipliers and form multiples are integers."""
    res = CheckResult(
        f"integrality: entries <= {max_entry}, length <= {max_len}, d <= {max_degree}"
    )
    for q, d in smooth_inputs(max_entry, max_len, max_degree):
        h = WeightedHypersurface.of(q, d)
        space = h.ambient
        res.checked += 1
        try:
            for k in range(space.dim + 1):
                for j in range(space.dim + 1 - k):
                    space.cup_structure_constant(k, j)
            for r in range(space.dim):
                if pullback_in_theorem_range(h, r):
                    _pullback_value(h, r)
            if h.x_dim >= 2 and intersection_form_multiple(h) <= 0:
                res.fail(f"{q} d={d}: nonpositive form multiple")
        except InvariantViolation as exc:
            res.fail(f"{q} d={d}: {exc}")
    return res


# --- toric -------------------------------------------------------------------


def check_toric(max_entry: int = 6, max_len: int = 5) -> CheckResult:
    """Toric singular locus of dimension <= 0 exactly when the weights are pairwise coprime."""
    res = CheckResult(f"toric: singular locus vs pairwise coprime, entries <= {max_entry}, length <= {max_len}")
    scale_invariant = 0
    for q in weight_tuples(max_entry, max_len):
        res.checked += 1
        rays = build_rays(q)
        if not contains_all_rays(rays, lattice_basis(rays)):
            res.fail(f"{q}: lattice basis misses a ray")
        toric = singular_locus_dimension(q) <= 0
        combinatorial = pairwise_coprime(q)
        if toric != combinatorial:
            res.fail(f"{q}: toric says {'isolated' if toric else 'positive-dim'}, pairwise coprime = {combinatorial}")
            if math.gcd(*q) > 1:
                scale_invariant += 1
    if res.failures:
        res.notes.append(
            f"{scale_invariant} of {len(res.failures)} counterexamples have gcd(q) > 1; "
            "the fan of q and of q/gcd(q) coincide up to scaling"
        )
    return res


# --- diagram -----------------------------------------------------------------


def check_diagram(dims: Iterable[int] = range(3, 7)) -> CheckResult:
    res = CheckResult(f"diagram: commutativity on enumerated rows, dims {min(dims)}-{max(dims)}")
    for n in dims:
        for row in enumerate_smooth_fano(n):
            res.checked += 1
            h = row.hypersurface()
            try:
                dm = diagram_solve(h)
            except InvariantViolation as exc:
                res.fail(str(exc))
                continue
            if dm.x_form != Fraction(intersection_form_multiple(h)):
                res.fail(f"{h}: diagram gives {dm.x_form}, closed form {intersection_form_multiple(h)}")
    return res


# --- hodge -------------------------------------------------------------------


def fermat_monomial_count(weights: Iterable[int], d: int, m: int) -> int:
    """Monomials ``x^a`` of weighted degree ``m`` with ``a_i <= d/q_i - 2``.

    For the Fermat member ``sum x_i^{d/q_i}`` these form a basis of the degree-``m``
    piece of the Jacobian ring.  Counted by dynamic programming over variables.
    """
    weights = list(weights)
    if any(d % q for q in weights):
        raise ValueError("Fermat member needs every weight to divide d")
    ways = {0: 1}
    for q in weights:
        top = d // q - 2
        nxt: dict[int, int] = {}
        for s, c in ways.items():
            for a in range(top + 1):
                t = s + a * q
                if t > m:
                    break
                nxt[t] = nxt.get(t, 0) + c
        ways = nxt
    return ways.get(m, 0)


def check_hodge(max_degree: int = 14) -> CheckResult:
    res = CheckResult(f"hodge: Jacobian series vs Fermat monomial count, d <= {max_degree}")
    cases = [(q, d) for q, d in smooth_inputs(7, 8, max_degree) if d > max(q)]
    for q, d in cases:
        top = sum(d - 2 * x for x in q)
        series = jacobian_series(q, d, max(top, (len(q) - 1) * d))
        for m in range(top + 1):
            res.checked += 1
            want = fermat_monomial_count(q, d, m)
            if series[m] != want:
                res.fail(f"{q} d={d}: t^{m} series {series[m]} vs monomials {want}")
    return res


SCOPES: dict[str, Callable[[], list[CheckResult]]] = {
    "arith": lambda: [check_arith(), check_integrality()],
    "toric": lambda: [check_toric()],
    "diagram": lambda: [check_diagram()],
    "hodge": lambda: [check_hodge()],
}


def run_scope(scope: str) -> list[CheckResult]:
    if scope == "all":
        return [r for name in SCOPES for r in SCOPES[name]()]
    return SCOPES[scope]()
