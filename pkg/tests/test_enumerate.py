import math
from itertools import combinations_with_replacement

import pytest

from weightedfano.arith import pairwise_coprime
from weightedfano.enumerate import (
    EnumerationRow,
    audit_against_table,
    audit_counts,
    enumerate_smooth_fano,
    load_table,
    parse_table,
)
from weightedfano.errors import WeightsError


def brute_rows(n, include_trivial=False):
    """Every qualifying (weights, d) in a box large enough to be exhaustive.

    Two coprime weights a < b need (a-1)(b-1) < n + 1 and a single weight w needs
    2w < n + 1 + w, so no weight exceeds n + 1.
    """
    out = set()
    for q in combinations_with_replacement(range(1, n + 2), n + 2):
        if max(q) == 1 or not pairwise_coprime(q):
            continue
        step = math.lcm(*q)
        for d in range(step, sum(q), step):
            if d not in q:
                out.add((q, d))
    return out


class TestEnumeration:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_matches_brute_force(self, n):
        rows = enumerate_smooth_fano(n)
        assert {r.key for r in rows} == brute_rows(n)

    def test_counts(self):
        assert [len(enumerate_smooth_fano(n)) for n in range(2, 7)] == [2, 3, 6, 7, 12]

    def test_dim3_values(self):
        got = [(r.weights, r.degree, r.form_multiple, r.index) for r in enumerate_smooth_fano(3)]
        assert got == [
            ((1, 1, 1, 1, 2), 4, 2, 2),
            ((1, 1, 1, 1, 3), 6, 2, 1),
            ((1, 1, 1, 2, 3), 6, 1, 2),
        ]

    def test_deterministic(self):
        assert enumerate_smooth_fano(5) == enumerate_smooth_fano(5)

    def test_straight_projective(self):
        rows = enumerate_smooth_fano(3, include_straight_projective=True)
        extra = [r for r in rows if set(r.weights) == {1}]
        assert [(r.degree, r.form_multiple, r.index) for r in extra] == [(2, 2, 3), (3, 3, 2), (4, 4, 1)]

    def test_include_trivial(self):
        rows = enumerate_smooth_fano(3, include_trivial=True)
        assert len(rows) == 5
        trivial = [r for r in rows if r.degree in r.weights]
        assert {(r.weights, r.degree) for r in trivial} == {((1, 1, 1, 1, 2), 2), ((1, 1, 1, 1, 3), 3)}
        assert all(r.discrepancy_note.startswith("trivial") for r in trivial)

    def test_bad_dim(self):
        with pytest.raises(WeightsError):
            enumerate_smooth_fano(1)

    def test_notes(self):
        rows = {r.key: r for r in enumerate_smooth_fano(5)}
        assert "table prints multiple 4" in rows[((1,) * 6 + (4,), 8)].discrepancy_note
        extra = rows[((1,) * 6 + (5,), 10)]
        assert not extra.in_paper_table
        assert any("outside the proved pullback range" in (r.discrepancy_note or "") for r in enumerate_smooth_fano(2))

    def test_row_round_trip(self):
        for r in enumerate_smooth_fano(6):
            assert EnumerationRow.from_dict(r.to_dict()) == r


class TestTable:
    def test_shipped_fixture(self):
        table = load_table()
        assert len(table) == 25
        misprints = [t for t in table if "dim-label-misprint" in t.annotations]
        assert len(misprints) == 2 and all(t.dim_as_printed != t.dim for t in misprints)

    @pytest.mark.parametrize(
        "line",
        [
            "3 | 1,1,1,1,2 | 4 | 2",
            "3 | 1,1,x,1,2 | 4 | 2 | 2 |",
            "3 | 1,1,0,1,2 | 4 | 2 | 2 |",
            "three | 1,1,1,1,2 | 4 | 2 | 2 |",
        ],
    )
    def test_malformed(self, line):
        with pytest.raises(WeightsError):
            parse_table([line])

    def test_comments_and_blanks(self):
        recs = parse_table(["# header", "", "3 | 1,1,1,1,2 | 4 | 2 | 2 | tag-a, tag-b"])
        assert len(recs) == 1 and recs[0].annotations == ("tag-a", "tag-b")


class TestAudit:
    @pytest.mark.parametrize(
        "n, want",
        [
            (3, {"match": 3}),
            (4, {"match": 6}),
            (5, {"match": 5, "value-mismatch": 1, "missing-from-table": 1}),
            (6, {"match": 10, "missing-from-table": 2}),
        ],
    )
    def test_counts(self, n, want):
        counts = audit_counts(audit_against_table(enumerate_smooth_fano(n), dims=[n]))
        assert {k: v for k, v in counts.items() if v} == want

    def test_every_printed_row_is_found(self):
        rows = [r for n in range(3, 7) for r in enumerate_smooth_fano(n)]
        audit = audit_against_table(rows, dims=range(3, 7))
        assert audit_counts(audit)["missing-from-enumeration"] == 0

    def test_dim_misprints_pair_up(self):
        audit = audit_against_table(enumerate_smooth_fano(4), dims=[4])
        assert sum(e.dim_label_misprint for e in audit) >= 1

    def test_missing_row_reported(self):
        table = parse_table(["3 | 1,1,1,1,7 | 7 | 1 | 1 |"])
        audit = audit_against_table(enumerate_smooth_fano(3), table=table, dims=[3])
        assert audit_counts(audit)["missing-from-enumeration"] == 1
        assert "missing-from-enumeration" in [e.describe().split()[0] for e in audit]

    def test_mismatch_description(self):
        audit = audit_against_table(enumerate_smooth_fano(5), dims=[5])
        (bad,) = [e for e in audit if e.status == "value-mismatch"]
        assert bad.weights == (1,) * 6 + (4,) and bad.computed == (2, 2) and bad.printed == (4, 2)
