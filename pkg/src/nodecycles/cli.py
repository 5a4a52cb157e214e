"""Command-line front end: ``analyze``, ``scan``, ``verify`` and ``orbit``.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or parameters.
JSON goes to stdout with every float written to 17 significant digits; row
streams go out as CSV.
"""

from __future__ import annotations

import argparse
import csv
import enum
import json
import math
import sys
import time
from fractions import Fraction

import numpy as np

from . import halfmaps as hm
from . import oracle
from . import successor as sc
from .errors import NodeCyclesError, NonNodeParams, OutOfDomain
from .model import SystemParams, validate_for_cycles

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SCAN_HEADER = ["b", "count", "y0_1", "mult_1", "stab_1", "y0_2", "mult_2", "stab_2"]
ORBIT_HEADER = ["t", "x", "y"]


class UsageError(Exception):
    """Bad flags or parameters; maps to exit code 2."""


# ---------------------------------------------------------------- serialisation


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def _plain(obj):
    """Reduce to JSON-ready builtins; floats stay floats for the writer below."""
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (bool, str)) or obj is None:
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "as_dict"):
        return _plain(obj.as_dict())
    return str(obj)


def dumps(obj, indent: int = 2) -> str:
    """JSON text with floats at 17 significant digits; non-finite floats become strings."""

    def emit(o, level):
        pad, inner = " " * (indent * level), " " * (indent * (level + 1))
        if isinstance(o, bool) or o is None or isinstance(o, (int, str)):
            return json.dumps(o, ensure_ascii=False)
        if isinstance(o, float):
            text = fmt_float(o)
            return text if math.isfinite(o) else json.dumps(text)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{inner}{json.dumps(k, ensure_ascii=False)}: {emit(v, level + 1)}" for k, v in o.items()]
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if not o:
            return "[]"
        return "[\n" + ",\n".join(inner + emit(v, level + 1) for v in o) + "\n" + pad + "]"

    return emit(_plain(obj), 0)


def _print_json(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _open_out(path: str | None):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", newline="", encoding="utf-8"), True


# ---------------------------------------------------------------- shared bits


def _params(args, b: float | None = None) -> SystemParams:
    try:
        p = SystemParams(args.gl, args.gr, args.al, args.ar, args.b if b is None else b)
    except NonNodeParams as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    check = validate_for_cycles(p)
    if not check.ok:
        raise UsageError(f"no crossing cycles possible: {check.reason}")
    return p


def _family_flags(sp, with_b: bool = True) -> None:
    sp.add_argument("--gl", type=float, required=True, help="gamma_L (|gamma_L| > 1)")
    sp.add_argument("--gr", type=float, required=True, help="gamma_R (|gamma_R| > 1)")
    sp.add_argument("--al", type=float, required=True, help="alpha_L (> 0)")
    sp.add_argument("--ar", type=float, required=True, help="alpha_R (< 0)")
    if with_b:
        sp.add_argument("--b", type=float, required=True, help="switching-line offset")


def _root_cells(roots) -> list[str]:
    cells = []
    for k in range(2):
        if roots is not None and k < len(roots):
            r = roots[k]
            cells += [fmt_float(r.y0_star), str(r.multiplicity), r.stability.value]
        else:
            cells += ["", "", ""]
    return cells


# ---------------------------------------------------------------- analyze


def analysis_report(p: SystemParams, roots=None) -> dict:
    dom = hm.domain(p)
    disc = sc.discriminants(p)
    pred = sc.classify_regime(p)
    if roots is None:
        roots = [] if dom.empty else sc.find_cycles(p)
    b_m, b_bar, b_M = sc.thresholds(p)
    return {
        "params": p.as_dict(),
        "domain": {
            "y0_min": dom.y0_min,
            "y0_max": dom.y0_max,
            "upper_branch": dom.active_upper_branch,
            "empty": dom.empty,
        },
        "discriminants": {"delta1": disc.delta1, "delta2": disc.delta2, "delta3": disc.delta3},
        "thresholds": {"b_m": b_m, "b_bar": b_bar, "b_M": b_M},
        "cycles": [r.as_dict() for r in roots],
        "count": sum(r.multiplicity for r in roots),
        "regime": {
            "tag": pred.tag,
            "predicted_count": pred.count,
            "exact": pred.exact,
            "predicted_stability": pred.stability,
        },
    }


def cmd_analyze(args) -> int:
    p = _params(args)
    t0 = time.perf_counter()
    roots = sc.find_cycles(p)
    rep = analysis_report(p, roots)
    if args.timing:
        rep["seconds"] = time.perf_counter() - t0
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(SCAN_HEADER)
        w.writerow([fmt_float(p.b), rep["count"]] + _root_cells(roots))
    else:
        _print_json(rep)
    return EXIT_OK


# ---------------------------------------------------------------- scan


def cmd_scan(args) -> int:
    if args.steps < 2 or not args.b_from < args.b_to:
        raise UsageError("scan needs --steps >= 2 and --b-from < --b-to")
    if not (math.isfinite(args.b_from) and math.isfinite(args.b_to)):
        raise UsageError("b-range must be finite")
    family = _params(args, b=0.0)
    grid = np.linspace(args.b_from, args.b_to, args.steps)
    t0 = time.perf_counter()
    rep = sc.scan_b(family, grid)
    rows = []
    errors = []
    for b, roots, err in rep.rows:
        if err is not None:
            errors.append({"b": b, "error": err})
            rows.append([fmt_float(b), "error"] + [""] * 6)
        else:
            rows.append([fmt_float(b), str(sum(r.multiplicity for r in roots))] + _root_cells(roots))
    summary = {
        "family": {k: v for k, v in family.as_dict().items() if k != "b"},
        "grid": {"b_from": args.b_from, "b_to": args.b_to, "steps": args.steps},
        "b_m": rep.b_m,
        "b_bar": rep.b_bar,
        "b_M": rep.b_M,
        "b_tilde": rep.b_tilde,
        "b_tilde_y0": rep.b_tilde_y0,
        "b_tilde_residuals": list(rep.b_tilde_residuals) if rep.b_tilde_residuals else None,
        "collisions": rep.collisions,
        "regimes": [
            {"b_from": r.b_from, "b_to": r.b_to, "count": r.count, "stability": list(r.signature)}
            for r in rep.regimes
        ],
        "errors": errors,
    }
    if args.timing:
        summary["seconds"] = time.perf_counter() - t0
    if args.out:
        fh, close = _open_out(args.out)
        try:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(SCAN_HEADER)
            w.writerows(rows)
        finally:
            if close:
                fh.close()
        if args.out != "-":
            _print_json(summary)
    else:
        summary["rows"] = [dict(zip(SCAN_HEADER, r)) for r in rows]
        _print_json(summary)
    return EXIT_OK


# ---------------------------------------------------------------- verify

VERIFY_TARGETS = ("r1", "r2", "h3", "signs", "resultants", "appendix", "all")


def _verify_sections(args) -> list[tuple[str, bool, dict]]:
    from .algebra import appendix, identities, lemmas, signs

    targets = ("appendix", "r1", "r2", "h3", "resultants", "signs") if args.target == "all" else (args.target,)
    out = []
    for target in targets:
        t0 = time.perf_counter()
        if target in ("r1", "r2", "h3"):
            rep = lemmas.verify_lemma(target, common_root=not args.no_common_root, box_max=args.box_max)
            passed, body = rep.passed, rep.as_dict()
        elif target == "resultants":
            reps = identities.verify_resultant_identities(seed=args.seed, lines=args.lines)
            passed, body = all(r.passed for r in reps), {"seed": args.seed, "identities": [r.as_dict() for r in reps]}
        elif target == "signs":
            rep = signs.verify_sign_claims(signs.GridSpec(n=args.grid))
            passed, body = rep.passed, rep.as_dict()
        else:
            res = appendix.check_specializations()
            passed, body = all(res.values()), {"specializations": res}
        if args.polys and target in ("r1", "r2", "h3", "appendix"):
            keys = [k for k in appendix.SPECIALIZATIONS if target == "appendix" or k.upper().startswith(target.upper())]
            body["polynomials"] = {k: appendix.specialized(k).to_text().splitlines() for k in keys}
        if not args.timing:
            body = _strip_timing(body)
        else:
            body["seconds"] = time.perf_counter() - t0
        out.append((target, passed, body))
    return out


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k != "seconds"}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def cmd_verify(args) -> int:
    if args.box_max <= 1:
        raise UsageError("--box-max must exceed 1")
    if args.grid < 2:
        raise UsageError("--grid must be at least 2")
    sections = _verify_sections(args)
    passed = all(ok for _, ok, _ in sections)
    _print_json({
        "target": args.target,
        "passed": passed,
        "sections": [{"name": name, "passed": ok, "report": body} for name, ok, body in sections],
    })
    for name, ok, _ in sections:
        print(f"{name}: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
    return EXIT_OK if passed else EXIT_FAIL


# ---------------------------------------------------------------- orbit


def cmd_orbit(args) -> int:
    p = _params(args)
    if args.turns < 1:
        raise UsageError("--turns must be at least 1")
    dom = hm.domain(p)
    if dom.empty or not dom.contains(args.y0):
        raise UsageError(f"y0 = {args.y0!r} outside the open domain ({dom.y0_min!r}, {dom.y0_max!r})")
    rows = oracle.orbit_samples(p, args.y0, args.turns, per_leg=args.per_leg)
    fh, close = _open_out(args.out)
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(ORBIT_HEADER)
        for t, x, y in rows:
            w.writerow([fmt_float(t), fmt_float(x), fmt_float(y)])
    finally:
        if close:
            fh.close()
    return EXIT_OK


# ---------------------------------------------------------------- entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nodecycles", description=__doc__.splitlines()[0])
    parser.add_argument("--timing", action="store_true", help="add wall-clock seconds to JSON reports")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="cycles, domain and regime of one system")
    _family_flags(a)
    fmt = a.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--csv", action="store_true", help="one CSV row in the scan layout")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("scan", help="cycle counts over a grid of b")
    _family_flags(s, with_b=False)
    s.add_argument("--b-from", type=float, required=True)
    s.add_argument("--b-to", type=float, required=True)
    s.add_argument("--steps", type=int, required=True, help="number of grid points, endpoints included")
    s.add_argument("--out", help="CSV path for the per-b rows ('-' for stdout)")
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify", help="exact re-verification of the polynomial lemmas")
    v.add_argument("target", choices=VERIFY_TARGETS)
    v.add_argument("--box-max", type=int, default=200, help="upper u bound for common-root exclusion")
    v.add_argument("--seed", type=int, default=0, help="seed for the random identity lines")
    v.add_argument("--lines", type=int, default=20, help="random lines per direction for identities")
    v.add_argument("--grid", type=int, default=200, help="points per axis for the sign grid")
    v.add_argument("--no-common-root", action="store_true", help="skip the common-root exclusion")
    v.add_argument("--polys", action="store_true", help="include canonical text of the specializations")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("orbit", help="sampled trajectory as CSV")
    _family_flags(o)
    o.add_argument("--y0", type=float, required=True)
    o.add_argument("--turns", type=int, default=1)
    o.add_argument("--per-leg", type=int, default=64, help="samples per half-plane transit")
    o.add_argument("--out", help="CSV path (default stdout)")
    o.set_defaults(func=cmd_orbit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"nodecycles {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OutOfDomain as exc:
        print(f"nodecycles {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NodeCyclesError as exc:
        if isinstance(exc, AssertionError):
            print(f"nodecycles {args.command}: {exc}", file=sys.stderr)
            return EXIT_FAIL
        raise


if __name__ == "__main__":
    raise SystemExit(main())
