"""Command-line front end.  Every subcommand prints one JSON report on stdout.

Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .algebra import (
    LeibnizAlgebra,
    NotAnIdealError,
    ann_ideal,
    centers,
    check_leibniz,
    is_subalgebra,
    is_two_sided,
    liezation,
    ordinary_nilpotency_class,
)
from .catalog import AdmissibilityError, entries, verify_entry
from .covers import classify_extension, is_lie_capable, stem_cover
from .free import UnsupportedInputError
from .io import ParseError, digest, dumps_report, load_algebra, parse_vector, subspace_report, vector_text
from .lie import lie_central_series, lie_normalizer
from .linalg import LinalgError, parse_rational
from .multiplier import TruncationError, four_term_sequence, schur_lie_multiplier

SEED_ENV = "LEIBAL_SEED"


class CommandError(Exception):
    pass


def _space(g: LeibnizAlgebra, s):
    return subspace_report(g.labels, s)


def _vectors(g: LeibnizAlgebra, text: str):
    return [parse_vector(g, part) for part in text.split(",") if part.strip()]


def _require_leibniz(g: LeibnizAlgebra):
    chk = check_leibniz(g)
    if not chk.ok:
        x, y, z = (g.labels[t] for t in chk.triple)
        raise CommandError(f"not a Leibniz algebra: identity fails on ({x}, {y}, {z})")


def _matrix(field, rows):
    return [[field.to_text(c) for c in row] for row in rows]


def cmd_check(args, g):
    chk = check_leibniz(g)
    res = {"leibniz": chk.ok}
    if not chk.ok:
        f = g.field
        res["witness"] = {
            "triple": [g.labels[t] for t in chk.triple],
            "lhs": [f.to_text(c) for c in chk.lhs],
            "rhs": [f.to_text(c) for c in chk.rhs],
        }
    return res, chk.ok


def cmd_invariants(args, g):
    _require_leibniz(g)
    cs = centers(g)
    ann = ann_ideal(g).space
    return {
        "dim": g.dim,
        "is_lie": ann.is_zero(),
        "center": _space(g, cs.center.space),
        "right_center": _space(g, cs.right_center.space),
        "lie_center": _space(g, cs.lie_center.space),
        "ann": _space(g, ann),
        "liezation_dim": liezation(g).dim,
    }, True


def cmd_series(args, g):
    _require_leibniz(g)
    lower, upper = lie_central_series(g)
    agree = lower.class_value == upper.class_value
    return {
        "lower": [_space(g, t) for t in lower.terms],
        "upper": [_space(g, t) for t in upper.terms],
        "lie_nilpotent": lower.lie_nilpotent,
        "lie_class": lower.class_value,
        "upper_class": upper.class_value,
        "ordinary_class": ordinary_nilpotency_class(g),
    }, lower.lie_nilpotent and agree


def cmd_multiplier(args, g):
    _require_leibniz(g)
    res = schur_lie_multiplier(g, level=args.level, stabilize=args.stabilize)
    return {
        "dim": res.dim,
        "level": res.level_used,
        "stabilized": res.stabilized,
        "representatives": res.describe(),
    }, True


def cmd_seq(args, g):
    _require_leibniz(g)
    n = g.span(_vectors(g, args.ideal)) if args.ideal.strip() else g.zero_space()
    ok, _ = is_two_sided(g, n)
    if not ok:
        raise CommandError("the given subspace is not a two-sided ideal")
    rep = four_term_sequence(g, n)
    f = g.field
    return {
        "ideal": _space(g, n),
        "level": rep.level,
        "dims": list(rep.dims),
        "exact": rep.exact,
        "checks": dict(sorted(rep.checks.items())),
        "dimension_identity": rep.dimension_identity,
        "maps": {k: _matrix(f, rep.maps[k]) for k in ("pi", "sigma", "tau")},
    }, rep.exact and rep.dimension_identity


def cmd_cover(args, g):
    _require_leibniz(g)
    sc = stem_cover(g, seed=args.seed)
    res = {"multiplier_dim": sc.multiplier_dim, "complement_found": sc.complement_found}
    if not sc.complement_found:
        return res, False
    flags = classify_extension(sc.extension)
    res.update(
        {
            "cover": {
                "dim": sc.cover.dim,
                "basis": list(sc.cover.labels),
                "brackets": sc.cover.describe(),
            },
            "kernel": _space(sc.cover, sc.extension.kernel.space),
            "flags": {"lie_central": flags.lie_central, "stem": flags.stem, "cover": flags.cover},
        }
    )
    return res, flags.cover


def cmd_capable(args, g):
    _require_leibniz(g)
    rep = is_lie_capable(g)
    return {
        "capable": rep.capable,
        "precise_lie_center": _space(g, rep.precise_center),
        "sigma_injective": list(rep.sigma_injective),
        "consistent": rep.consistent,
    }, rep.capable


def _params(text: str | None) -> dict[str, Fraction]:
    out = {}
    for part in (text or "").split(","):
        if not part.strip():
            continue
        if "=" not in part:
            raise CommandError(f"parameter {part!r} is not of the form name=value")
        k, v = part.split("=", 1)
        out[k.strip()] = parse_rational(v)
    return out


def cmd_catalog(args):
    params = _params(args.params)
    selected = entries(args.dim)
    known = {p.name for e in selected for p in e.parameters}
    unknown = sorted(set(params) - known)
    if unknown:
        raise CommandError(f"no selected entry has parameter(s) {', '.join(unknown)}")
    rows = []
    for e in selected:
        values = {k: v for k, v in params.items() if k in {p.name for p in e.parameters}}
        r = verify_entry(e, values)
        rows.append(
            {
                "id": r.id,
                "ok": r.ok,
                "leibniz": r.leibniz_ok,
                "printed_convention_ok": r.printed_convention_ok,
                "non_lie": r.non_lie_ok,
                "class_ok": r.class_ok,
                "expected_class": e.expected_class,
                "lie_class": r.computed_class,
                "convention": e.convention,
                "parameters": {p.name: str(values.get(p.name, p.default)) for p in e.parameters},
            }
        )
    ok = all(r["ok"] for r in rows)
    return {"entries": rows, "count": len(rows), "all_ok": ok}, ok


def cmd_normalizer(args, g):
    _require_leibniz(g)
    m = g.span(_vectors(g, args.subspace))
    N = lie_normalizer(g, m)
    sub, pair = is_subalgebra(g, N)
    res = {"subspace": _space(g, m), "normalizer": _space(g, N), "is_subalgebra": sub}
    if pair is not None:
        a, b = pair
        u, v = N.rows[a], N.rows[b]
        res["witness"] = {
            "left": vector_text(g.labels, g.field, u),
            "right": vector_text(g.labels, g.field, v),
            "bracket": vector_text(g.labels, g.field, g.bracket_sparse(u, v)),
        }
    return res, True


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leibal", description="Exact invariants of finite-dimensional Leibniz algebras.")
    p.add_argument("--version", action="version", version=f"leibal {__version__}")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing (breaks byte-identical reports)")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file")
        return sp

    with_file("check", "verify the right Leibniz identity")
    with_file("invariants", "centers, annihilator ideal and Liezation")
    with_file("series", "lower and upper Lie-central series")
    sp = with_file("multiplier", "Schur Lie-multiplier")
    sp.add_argument("--level", type=int, default=None)
    sp.add_argument("--stabilize", action=argparse.BooleanOptionalAction, default=True, help="recheck one level higher (default on)")
    sp = with_file("seq", "four-term exact sequence for an ideal")
    sp.add_argument("--ideal", required=True, help="comma-separated vectors, e.g. a1,a2-a3")
    sp = with_file("cover", "Lie-stem cover")
    sp.add_argument("--seed", type=int, default=None)
    with_file("capable", "precise Lie-center and capability")
    sp = with_file("normalizer", "Lie-normalizer of a subspace")
    sp.add_argument("--subspace", required=True, help="comma-separated vectors")
    cat = sub.add_parser("catalog", help="built-in table of algebras")
    catsub = cat.add_subparsers(dest="action", required=True)
    ver = catsub.add_parser("verify")
    ver.add_argument("--dim", type=int, default=None)
    ver.add_argument("--params", default=None, help="k=v,... applied to entries with those parameters")
    return p


_HANDLERS = {
    "check": cmd_check,
    "invariants": cmd_invariants,
    "series": cmd_series,
    "multiplier": cmd_multiplier,
    "seq": cmd_seq,
    "cover": cmd_cover,
    "capable": cmd_capable,
    "normalizer": cmd_normalizer,
}


def run(argv=None) -> tuple[int, dict | None]:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    if args.command == "cover" and os.environ.get(SEED_ENV):
        try:
            args.seed = int(os.environ[SEED_ENV])
        except ValueError:
            raise CommandError(f"{SEED_ENV} must be an integer") from None
    start = time.perf_counter()
    report: dict = {"command": argv, "version": __version__}
    if args.command == "catalog":
        results, verdict = cmd_catalog(args)
    else:
        g, raw = load_algebra(args.file)
        report["input_digest"] = digest(raw)
        report["field"] = g.field.name
        results, verdict = _HANDLERS[args.command](args, g)
    if args.command == "cover":
        report["seed"] = args.seed
    if "level" in results:
        report["level"] = results["level"]
    report["results"] = results
    report["verdict"] = verdict
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 3)
    return (0 if verdict else 1), report


def main(argv=None) -> int:
    try:
        code, report = run(argv)
    except SystemExit as e:
        return int(e.code or 0) if e.code in (0, None) else 2
    except (
        CommandError,
        ParseError,
        OSError,
        UnicodeDecodeError,
        UnsupportedInputError,
        NotAnIdealError,
        TruncationError,
        AdmissibilityError,
        LinalgError,
        ValueError,
    ) as e:
        print(f"leibal: error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(dumps_report(report))
    return code


__all__ = ["main", "run", "build_parser"]
