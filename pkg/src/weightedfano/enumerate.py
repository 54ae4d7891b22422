"""Exhaustive search for smooth weighted Fano hypersurfaces and the table audit.

A row ``(q, d)`` qualifies when the weights are pairwise coprime, every weight
divides ``d``, ``d < sum(q)``, ``d`` is not itself a weight (otherwise ``X`` is
just projective space) and at least one weight exceeds 1.

Pruning: the nontrivial weights ``W`` are pairwise coprime, hence distinct and
``>= 2``, and their product ``P`` divides ``d``.  So ``P <= d < ones + sum(W)``.
Adding a weight ``w`` changes ``P - (ones + sum(W))`` by ``(P - 1)(w - 1) >= 0``,
so once a set of two or more weights violates the bound every superset does too.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Iterator, Sequence

from .arith import Weights
from .errors import WeightsError
from .hypersurface import (
    WeightedHypersurface,
    check_generic_smooth,
    fano_index,
    intersection_form_multiple,
    is_fano,
    is_trivial_cone,
    pullback_in_theorem_range,
)

__all__ = [
    "EnumerationRow",
    "TableRecord",
    "AuditEntry",
    "enumerate_smooth_fano",
    "load_table",
    "parse_table",
    "audit_against_table",
    "audit_counts",
]


@dataclass(frozen=True)
class TableRecord:
    dim_as_printed: int
    weights: tuple[int, ...]
    degree: int
    multiple_as_printed: int
    index_as_printed: int
    annotations: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.weights) - 2

    @property
    def key(self) -> tuple[tuple[int, ...], int]:
        return tuple(sorted(self.weights)), self.degree


@dataclass(frozen=True)
class EnumerationRow:
    x_dim: int
    weights: tuple[int, ...]
    degree: int
    form_multiple: int
    index: int
    in_paper_table: bool = False
    discrepancy_note: str | None = None

    @property
    def key(self) -> tuple[tuple[int, ...], int]:
        return self.weights, self.degree

    def hypersurface(self) -> WeightedHypersurface:
        return WeightedHypersurface.of(self.weights, self.degree)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["weights"] = list(self.weights)
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "EnumerationRow":
        return cls(
            x_dim=int(data["x_dim"]),
            weights=tuple(int(q) for q in data["weights"]),
            degree=int(data["degree"]),
            form_multiple=int(data["form_multiple"]),
            index=int(data["index"]),
            in_paper_table=bool(data["in_paper_table"]),
            discrepancy_note=data.get("discrepancy_note"),
        )


# --- fixture -----------------------------------------------------------------


def parse_table(lines: Iterable[str]) -> list[TableRecord]:
    records = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 6:
            raise WeightsError(f"table line {lineno}: expected 6 '|'-separated fields, got {len(fields)}")
        try:
            dim, weights, degree, multiple, index = (
                int(fields[0]),
                tuple(int(q) for q in fields[1].split(",")),
                int(fields[2]),
                int(fields[3]),
                int(fields[4]),
            )
        except ValueError as exc:
            raise WeightsError(f"table line {lineno}: {exc}") from None
        Weights(weights)
        notes = tuple(a.strip() for a in fields[5].split(",") if a.strip())
        records.append(TableRecord(dim, weights, degree, multiple, index, notes))
    return records


@lru_cache(maxsize=1)
def load_table() -> tuple[TableRecord, ...]:
    """The shipped transcription of the published table."""
    text = resources.files("weightedfano").joinpath("data/table1.txt").read_text()
    return tuple(parse_table(text.splitlines()))


# --- search ------------------------------------------------------------------


def _weight_sets(n: int) -> Iterator[tuple[int, ...]]:
    """Ascending tuples of pairwise coprime weights >= 2 that can carry a row."""
    slots = n + 2

    def extend(ws: tuple[int, ...], prod: int, total: int) -> Iterator[tuple[int, ...]]:
        yield ws
        if len(ws) == slots:
            return
        ones_after = slots - len(ws) - 1
        w = ws[-1] + 1 if ws else 2
        while True:
            if ws:
                # P*w < ones + sum(W) + w, monotone in w
                if prod * w >= ones_after + total + w:
                    return
            elif w > n:
                # a single weight needs 2w < n + 1 + w; pairs need (w-1)w < n + 1
                return
            if math.gcd(w, prod) == 1:
                yield from extend(ws + (w,), prod * w, total + w)
            w += 1

    yield from extend((), 1, 0)


def _table_index() -> dict[tuple[tuple[int, ...], int], TableRecord]:
    return {rec.key: rec for rec in load_table()}


def _note_for(row_key, n: int, form: int, index: int, table) -> tuple[bool, str | None]:
    notes = []
    rec = table.get(row_key)
    if rec is not None:
        if rec.dim_as_printed != n:
            notes.append(f"table prints dim {rec.dim_as_printed}")
        if rec.multiple_as_printed != form:
            notes.append(f"table prints multiple {rec.multiple_as_printed}")
        if rec.index_as_printed != index:
            notes.append(f"table prints index {rec.index_as_printed}")
    if not pullback_in_theorem_range(WeightedHypersurface.of(row_key[0], row_key[1]), 1):
        notes.append("r=1 lies outside the proved pullback range")
    return rec is not None, "; ".join(notes) or None


def enumerate_smooth_fano(
    n: int,
    *,
    include_straight_projective: bool = False,
    include_trivial: bool = False,
) -> list[EnumerationRow]:
    """All smooth Fano hypersurfaces ``X_d`` in ``P(q)`` with ``dim X = n``.

    ``include_trivial`` also emits ``d`` equal to a weight, but only for weight
    tuples that carry at least one nontrivial row (the trivial ones are all
    ``P^n`` and otherwise unbounded in number).
    """
    if n < 2:
        raise WeightsError(f"dimension must be >= 2, got {n}")
    table = _table_index()
    rows = []
    for ws in _weight_sets(n):
        if not ws and not include_straight_projective:
            continue
        ones = n + 2 - len(ws)
        weights = (1,) * ones + ws
        prod = math.prod(ws)
        bound = ones + sum(ws)
        degrees = range(prod, bound, prod)
        nontrivial = [d for d in degrees if d not in weights]
        if not nontrivial:
            continue
        chosen = list(degrees) if include_trivial else nontrivial
        for d in chosen:
            h = WeightedHypersurface.of(weights, d)
            assert check_generic_smooth(h).passed and is_fano(h)
            form = intersection_form_multiple(h)
            index = fano_index(h)
            in_table, note = _note_for((weights, d), n, form, index, table)
            if is_trivial_cone(h):
                note = "; ".join(filter(None, ["trivial: X is P^%d" % n, note]))
            rows.append(EnumerationRow(n, weights, d, form, index, in_table, note))
    rows.sort(key=lambda r: (r.weights, r.degree))
    return rows


# --- audit -------------------------------------------------------------------


@dataclass(frozen=True)
class AuditEntry:
    status: str  # match | value-mismatch | missing-from-table | missing-from-enumeration
    weights: tuple[int, ...]
    degree: int
    computed: tuple[int, int] | None = None  # (multiple, index)
    printed: tuple[int, int] | None = None
    dim_as_printed: int | None = None

    @property
    def dim(self) -> int:
        return len(self.weights) - 2

    @property
    def dim_label_misprint(self) -> bool:
        return self.dim_as_printed is not None and self.dim_as_printed != self.dim

    def describe(self) -> str:
        head = f"P({','.join(map(str, self.weights))}) d={self.degree}"
        extra = ""
        if self.status == "value-mismatch":
            extra = f" computed (multiple, index)={self.computed} table={self.printed}"
        elif self.status == "missing-from-enumeration":
            extra = f" table={self.printed}"
        elif self.computed is not None:
            extra = f" (multiple, index)={self.computed}"
        if self.dim_label_misprint:
            extra += f" [table prints dim {self.dim_as_printed}]"
        return f"{self.status:<24} {head}{extra}"


def audit_against_table(
    rows: Sequence[EnumerationRow],
    table: Sequence[TableRecord] | None = None,
    dims: Iterable[int] | None = None,
) -> list[AuditEntry]:
    """Compare enumerated rows with the table for the dimensions covered.

    Table rows are grouped by their true dimension (``len(weights) - 2``), so
    misprinted dimension labels still pair up; they are reported on the entry.
    """
    table = load_table() if table is None else table
    dims = {r.x_dim for r in rows} if dims is None else set(dims)
    by_key = {rec.key: rec for rec in table if rec.dim in dims}
    seen = set()
    out = []
    for row in rows:
        rec = by_key.get(row.key)
        computed = (row.form_multiple, row.index)
        if rec is None:
            out.append(AuditEntry("missing-from-table", row.weights, row.degree, computed))
            continue
        seen.add(row.key)
        printed = (rec.multiple_as_printed, rec.index_as_printed)
        status = "match" if printed == computed else "value-mismatch"
        out.append(AuditEntry(status, row.weights, row.degree, computed, printed, rec.dim_as_printed))
    for key, rec in by_key.items():
        if key not in seen:
            printed = (rec.multiple_as_printed, rec.index_as_printed)
            out.append(AuditEntry("missing-from-enumeration", key[0], key[1], None, printed, rec.dim_as_printed))
    out.sort(key=lambda e: (len(e.weights), e.weights, e.degree))
    return out


def audit_counts(entries: Iterable[AuditEntry]) -> dict[str, int]:
    counts = {"match": 0, "value-mismatch": 0, "missing-from-table": 0, "missing-from-enumeration": 0}
    for e in entries:
        counts[e.status] += 1
    return counts
