"""Command line interface.

Exit codes: 0 success, 1 a domain precondition failed, 2 usage error,
3 internal invariant violation (including failed cross-checks in ``verify``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .arith import parse_weights
from .cohomology import WeightedProjectiveSpace
from .enumerate import audit_against_table, audit_counts, enumerate_smooth_fano
from .errors import InvariantViolation, PreconditionError, WeightsError
from .hodge import hodge_diamond
from .hypersurface import (
    UNDETERMINED,
    WeightedHypersurface,
    check_generic_smooth,
    cohomology_rank_x,
    diagram_solve,
    fano_index,
    intersection_form_multiple,
    is_fano,
    is_trivial_cone,
    pullback_in_theorem_range,
    pullback_multiplier,
)
from .toric import singular_locus_dimension
from .verify import run_scope

EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

CSV_COLUMNS = ["dim", "weights", "degree", "multiple", "index", "in_paper_table", "note"]


class UsageError(Exception):
    pass


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if value is UNDETERMINED:
        return None
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _dump_json(data: Any) -> str:
    return json.dumps(_jsonable(data), indent=2, sort_keys=False)


# --- info --------------------------------------------------------------------


def space_report(space: WeightedProjectiveSpace) -> dict:
    isolated = space.has_isolated_singularities()
    toric_dim = singular_locus_dimension(space.weights)
    return {
        "weights": list(space.weights),
        "dim": space.dim,
        "l_profile": list(space.levels),
        "cohomology_ranks": [space.cohomology_rank(i) for i in range(2 * space.dim + 1)],
        "structure_constants": space.structure_table(),
        "phi_degree": space.phi_degree(),
        "isolated_singularities": isolated,
        "toric_singular_locus_dim": toric_dim,
        "toric_agrees": (toric_dim <= 0) == isolated,
        "singular_points": space.singular_coordinate_points() if isolated else None,
    }


def hypersurface_report(h: WeightedHypersurface) -> tuple[dict, str | None]:
    """The report and, if the generic member is not smooth, the failure message."""
    smooth = check_generic_smooth(h)
    rep: dict[str, Any] = {
        "degree": h.degree,
        "x_dim": h.x_dim,
        "smoothness": {
            "verdict": smooth.verdict,
            "pairwise_coprime": smooth.pairwise_coprime,
            "degree_divisible": smooth.degree_divisible,
            "offending_weights": list(smooth.offending_weights),
        },
        "fano": is_fano(h),
        "trivial": is_trivial_cone(h),
    }
    if not smooth.passed:
        return rep, f"{h}: smoothness fails: " + "; ".join(smooth.reasons())
    n = h.x_dim
    rep["cohomology_ranks_x"] = [cohomology_rank_x(h, k) for k in range(2 * n + 1)]
    rep["pullback_multipliers"] = {
        str(r): pullback_multiplier(h, r) for r in range(h.ambient.dim) if pullback_in_theorem_range(h, r)
    }
    rep["form_multiple"] = intersection_form_multiple(h) if n >= 2 else None
    rep["index"] = fano_index(h) if is_fano(h) else None
    dm = diagram_solve(h)
    rep["diagram"] = {
        "phi_star_h2": dm.phi_star_h2,
        "phi_star_h2n": dm.phi_star_h2n,
        "lefschetz_iso": dm.lefschetz_iso,
        "pn_form": dm.pn_form,
        "i_star": dm.i_star,
        "x_to_xprime_h2n": dm.x_to_xprime_h2n,
        "x_form": dm.x_form,
        "x_to_xprime_h2": dm.x_to_xprime_h2,
        "ambient_to_x_h2n": dm.ambient_to_x_h2n,
        "i_star_in_theorem_range": dm.i_star_in_theorem_range,
        "commutes": dm.commutes(),
    }
    rep["hodge"] = [list(r) for r in hodge_diamond(h).entries]
    return rep, None


def _fmt(v: Any) -> str:
    if v is None:
        return "-"
    if v is UNDETERMINED:
        return "?"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return " ".join(_fmt(x) for x in v)
    return str(v)


def render_info_text(space_rep: dict, hyp_rep: dict | None) -> str:
    out = io.StringIO()
    w = ",".join(map(str, space_rep["weights"]))
    p = lambda *a: print(*a, file=out)  # noqa: E731
    p(f"P({w})  dim {space_rep['dim']}")
    p(f"  l profile            {_fmt(space_rep['l_profile'])}")
    p(f"  cohomology ranks     {_fmt(space_rep['cohomology_ranks'])}")
    p(f"  phi degree           {space_rep['phi_degree']}")
    p(f"  isolated singularities {_fmt(space_rep['isolated_singularities'])}"
      f" (toric singular locus dim {space_rep['toric_singular_locus_dim']},"
      f" {'agrees' if space_rep['toric_agrees'] else 'DISAGREES'})")
    if space_rep["singular_points"] is not None:
        p(f"  singular points      {_fmt(['P_%d' % i for i in space_rep['singular_points']]) or '-'}")
    p("  structure constants c(k,j):")
    for k, row in enumerate(space_rep["structure_constants"]):
        p("    " + " ".join(f"{_fmt(c):>4}" for c in row))
    if hyp_rep is None:
        return out.getvalue()
    s = hyp_rep["smoothness"]
    p(f"X_{hyp_rep['degree']}  dim {hyp_rep['x_dim']}")
    p(f"  smoothness           {s['verdict']}"
      + (f" (degree not divisible by {_fmt(s['offending_weights'])})" if s["offending_weights"] else "")
      + ("" if s["pairwise_coprime"] else " (weights not pairwise coprime)"))
    p(f"  fano                 {_fmt(hyp_rep['fano'])}")
    p(f"  trivial              {_fmt(hyp_rep['trivial'])}")
    if "form_multiple" not in hyp_rep:
        return out.getvalue()
    p(f"  cohomology ranks     {_fmt(hyp_rep['cohomology_ranks_x'])}")
    mults = ", ".join(f"r={r}: {m}" for r, m in hyp_rep["pullback_multipliers"].items()) or "-"
    p(f"  pullback multipliers {mults}")
    p(f"  form multiple        {_fmt(hyp_rep['form_multiple'])}")
    p(f"  index                {_fmt(hyp_rep['index'])}")
    d = hyp_rep["diagram"]
    note = "" if d["i_star_in_theorem_range"] else " (i* outside the proved range)"
    p(f"  diagram              i*={d['i_star']} X->X' on H2={d['x_to_xprime_h2']}"
      f" on H2n={d['x_to_xprime_h2n']} form={d['x_form']} commutes={_fmt(d['commutes'])}{note}")
    from .hodge import HodgeDiamond

    p("  hodge diamond:")
    diamond = HodgeDiamond(hyp_rep["x_dim"], tuple(tuple(r) for r in hyp_rep["hodge"]))
    for line in diamond.render().splitlines():
        p("    " + line)
    return out.getvalue()


def _flat_items(prefix: str, value: Any):
    if isinstance(value, dict):
        for k, v in value.items():
            yield from _flat_items(f"{prefix}.{k}" if prefix else k, v)
    else:
        yield prefix, value


def cmd_info(args) -> int:
    space = WeightedProjectiveSpace(parse_weights(args.weights))
    srep = space_report(space)
    hrep, failure = (None, None)
    if args.degree is not None:
        hrep, failure = hypersurface_report(WeightedHypersurface(space, args.degree))
    if args.format == "json":
        print(_dump_json({"space": srep, "hypersurface": hrep}))
    elif args.format == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["key", "value"])
        for k, v in _flat_items("", _jsonable({"space": srep, "hypersurface": hrep})):
            wr.writerow([k, json.dumps(v) if isinstance(v, list) else v])
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(render_info_text(srep, hrep))
    if failure:
        print(f"error: {failure}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


# --- enumerate ---------------------------------------------------------------


def cmd_enumerate(args) -> int:
    if args.dim < 2:
        raise UsageError(f"dimension must be >= 2, got {args.dim}")
    rows = enumerate_smooth_fano(
        args.dim,
        include_straight_projective=args.include_straight_projective,
        include_trivial=args.include_trivial,
    )
    audit = audit_against_table(rows, dims=[args.dim]) if args.audit else None
    if args.format == "json":
        data: dict[str, Any] = {"dim": args.dim, "rows": [r.to_dict() for r in rows]}
        if audit is not None:
            data["audit"] = {
                "counts": audit_counts(audit),
                "entries": [
                    {
                        "status": e.status,
                        "weights": list(e.weights),
                        "degree": e.degree,
                        "computed": list(e.computed) if e.computed else None,
                        "printed": list(e.printed) if e.printed else None,
                        "dim_as_printed": e.dim_as_printed,
                    }
                    for e in audit
                ],
            }
        print(_dump_json(data))
    elif args.format == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(CSV_COLUMNS)
        for r in rows:
            wr.writerow([
                r.x_dim, ",".join(map(str, r.weights)), r.degree, r.form_multiple, r.index,
                str(r.in_paper_table).lower(), r.discrepancy_note or "",
            ])
        sys.stdout.write(buf.getvalue())
        if audit is not None:
            sys.stderr.write(_audit_text(audit))
    else:
        header = f"{'dim':>3}  {'weights':<22} {'degree':>6} {'multiple':>8} {'index':>5}  table  note"
        print(header)
        for r in rows:
            w = "P(" + ",".join(map(str, r.weights)) + ")"
            print(f"{r.x_dim:>3}  {w:<22} {r.degree:>6} {r.form_multiple:>8} {r.index:>5}  "
                  f"{'yes' if r.in_paper_table else 'no ':<5}  {r.discrepancy_note or ''}".rstrip())
        print(f"{len(rows)} rows")
        if audit is not None:
            sys.stdout.write(_audit_text(audit))
    return EXIT_OK


def _audit_text(audit) -> str:
    counts = audit_counts(audit)
    lines = ["audit against the published table:"]
    lines += [f"  {e.describe()}" for e in audit]
    lines.append("  " + ", ".join(f"{k}: {v}" for k, v in counts.items()))
    return "\n".join(lines) + "\n"


# --- hodge / verify ----------------------------------------------------------


def cmd_hodge(args) -> int:
    h = WeightedHypersurface(WeightedProjectiveSpace(parse_weights(args.weights)), args.degree)
    diamond = hodge_diamond(h)
    if args.format == "json":
        print(diamond.to_json())
    elif args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(diamond.entries)
        sys.stdout.write(buf.getvalue())
    else:
        print(diamond.render())
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_scope(args.scope)
    for r in results:
        print(r.summary())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed")
    return EXIT_INTERNAL if failed else EXIT_OK


# --- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weightedfano",
        description="Cohomology invariants of weighted projective spaces and their smooth Fano hypersurfaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "csv", "json"], default="text")

    p = sub.add_parser("info", parents=[fmt], help="invariants of P(q) and optionally of X_d")
    p.add_argument("weights", help="comma-separated positive integers, e.g. 1,1,1,2,3")
    p.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("enumerate", parents=[fmt], help="all smooth weighted Fano hypersurfaces of a dimension")
    p.add_argument("dim", type=int)
    p.add_argument("--audit", action="store_true", help="compare with the shipped table transcription")
    p.add_argument("--include-straight-projective", action="store_true")
    p.add_argument("--include-trivial", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hodge", parents=[fmt], help="Hodge diamond of a smooth weighted hypersurface")
    p.add_argument("weights")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("verify", help="run bounded exhaustive cross-checks")
    p.add_argument("scope", choices=["arith", "toric", "diagram", "hodge", "all"])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WeightsError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
