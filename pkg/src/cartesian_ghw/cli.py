"""Command-line front end.

Subcommands::

    code    build a code and print n, k and a dimension check
    ghw     d_r (or the whole hierarchy) by one method or all of them
    verify  run the seeded verification suites
    table   sweep a (q, m, d, r) grid and emit one row per instance

Exit codes: 0 success, 2 validation error, 3 budget or time limit
exceeded, 4 disagreement between methods or a failing suite.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import signal
import sys
from contextlib import contextmanager
from math import comb

from .cartesian import EvaluationCode, build_code, evaluation_code, parse_factors, preset
from .combinatorics import gaussian_binomial
from .errors import BadArgs, BadRange, BudgetError, CodeError, ConditionFails
from .field import field_make
from .ghw import METHODS, GHWRecord, default_jobs, exact_hierarchy, generator_of, support_hierarchy
from .linalg import DEFAULT_SUBSPACE_CAP, rank
from .methods import ghw_value
from .projective import build_projective_code
from .suites import GRIDDED, RANDOMIZED, SUITES

SCHEMA_VERSION = 1
PRESET_CHOICES = ("affine", "affine-punctured", "torus", "projective")
TABLE_HEADER = ["q", "m", "d", "r", "n", "k", "exact", "footprint", "formula", "agree"]
PROJECTIVE_COLUMN = "(q-1)*projective==affine"

# --method all skips the duality route when the dual code is larger than this;
# its flat enumeration grows too fast beyond it
DUALITY_MAX_DIM = 12

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_DISAGREE = 0, 2, 3, 4


class TimeLimitExceeded(BudgetError):
    pass


class Disagreement(Exception):
    def __init__(self, message: str, dump):
        super().__init__(message)
        self.dump = dump


# -- argument parsing ----------------------------------------------------------


def parse_range(text: str | None) -> list[int] | None:
    """``"3"`` -> [3], ``"2..4"`` -> [2, 3, 4], ``"2,5"`` -> [2, 5]; ``"3..2"`` is empty."""
    if text is None:
        return None
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _range_arg(text: str) -> list[int]:
    try:
        return parse_range(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}")


def _add_code_args(p: argparse.ArgumentParser, ranges: bool = False) -> None:
    kind = _range_arg if ranges else int
    p.add_argument("--q", type=kind, required=not ranges, default=[2, 3] if ranges else None,
                   help="field size (a prime power)")
    p.add_argument("--m", type=kind, help="number of variables (projective dimension for --preset projective)")
    p.add_argument("--d", type=kind, help="degree of the square-free monomials")
    p.add_argument("--leq", action="store_true", help="use all monomials of degree <= d")
    p.add_argument("--preset", choices=PRESET_CHOICES, help="standard evaluation set (default affine)")
    if not ranges:
        p.add_argument("--sets", help='explicit factors, e.g. "0,1;0,1,2;0,1,2,3"')


def _add_budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cap", type=int, default=DEFAULT_SUBSPACE_CAP, help="max subspaces for exact-subspace")
    p.add_argument("--budget", type=int, default=10**7, help="max flats for exact-support and duality")
    p.add_argument("--search-budget", type=int, default=10**7, help="max nodes for the footprint search")
    p.add_argument("--time-limit", type=int, default=0, help="seconds before aborting (0 = none)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $CGHW_JOBS or 1)")


def _add_output_args(p: argparse.ArgumentParser, default: str = "table") -> None:
    p.add_argument("--format", choices=("table", "json", "csv"), default=default)
    p.add_argument("--output", help="write the report to this file instead of stdout")
    p.add_argument("--timing", action="store_true", help="record wall time per row")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cartesian-ghw",
        description="Generalized Hamming weights of square-free evaluation codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code", help="build a code and report its parameters")
    _add_code_args(p)
    p.add_argument("--show-generator", action="store_true")
    _add_output_args(p)

    p = sub.add_parser("ghw", help="compute generalized Hamming weights")
    _add_code_args(p)
    p.add_argument("--r", type=_range_arg, help="r or a range a..b (default: every r)")
    p.add_argument("--method", choices=METHODS + ("all",), default="exact-support")
    _add_budget_args(p)
    _add_output_args(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--q", type=_range_arg, help="field sizes for grid suites, e.g. 2..4")
    p.add_argument("--m", type=_range_arg, help="dimensions for grid suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--extended", action="store_true", help="include the exact torus-example value")
    p.add_argument("--time-limit", type=int, default=0)
    p.add_argument("--jobs", type=int, default=None)
    _add_output_args(p)

    p = sub.add_parser("table", help="sweep a parameter grid")
    _add_code_args(p, ranges=True)
    p.add_argument("--r", type=_range_arg, help="restrict r (default: every r the formulas cover)")
    _add_budget_args(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.add_argument("--seed", type=int, default=0, help="accepted for uniformity; the sweep is deterministic")
    return parser


def config_echo(args: argparse.Namespace) -> dict:
    """The run configuration as echoed in reports.

    Worker count, output path and the timing switch change nothing but
    wall time and destination, so they are left out to keep reports
    byte-identical across them.
    """
    skip = {"jobs", "output", "timing", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


# -- code construction ---------------------------------------------------------


def make_code(q: int, m: int | None, d: int | None, leq: bool, preset_name: str | None, sets: str | None) -> EvaluationCode:
    if d is None:
        raise BadArgs("--d is required")
    spec = field_make(q)
    homogeneous = not leq
    if sets is not None:
        if preset_name is not None:
            raise BadArgs("give either --sets or --preset, not both")
        X = parse_factors(spec, sets)
        if m is not None and m != X.m:
            raise BadArgs(f"--m {m} does not match the {X.m} factors in --sets")
        return build_code(X, d, homogeneous)
    if m is None:
        raise BadArgs("--m is required with a preset")
    name = preset_name or "affine"
    if name == "projective":
        if leq:
            raise BadArgs("the projective code is homogeneous; drop --leq")
        return build_projective_code(spec, m, d)
    if name == "affine-punctured":
        pts = preset("affine_punctured", spec, m)
        return evaluation_code(spec, pts, d, homogeneous, family="affine_punctured")
    return build_code(preset(name, spec, m), d, homogeneous)


def code_summary(C: EvaluationCode, show_generator: bool = False) -> dict:
    out = {
        "q": C.spec.q,
        "m": C.m,
        "d": C.degree,
        "homogeneous": C.homogeneous,
        "family": C.family,
        "n": C.n,
        "k": C.k,
    }
    if C.cartesian is not None:
        out["sizes"] = list(C.cartesian.sizes)
        out["factors"] = [list(f) for f in C.cartesian.factors]
    if show_generator:
        out["generator"] = C.generator.tolist()
    return out


def expected_dimension(C: EvaluationCode) -> int:
    if C.homogeneous:
        return comb(C.m, C.degree)
    return sum(comb(C.m, i) for i in range(C.degree + 1))


# -- reports -------------------------------------------------------------------


def _witness_text(w) -> str:
    if w is None:
        return ""
    if isinstance(w, list) and w and isinstance(w[0], str):
        return "{" + ", ".join(w) + "}"
    return json.dumps(w, separators=(",", ":"))


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["r", "method", "value", "exact", "witness", "millis"])
        for row in report.get("rows", []):
            w.writerow([row["r"], row["method"], row["value"], row["exact"],
                        _witness_text(row["witness"]), "" if row["millis"] is None else f"{row['millis']:.1f}"])
        return buf.getvalue()
    lines = []
    code = report.get("code")
    if code:
        lines.append(" ".join(f"{k}={code[k]}" for k in ("q", "m", "d", "n", "k", "family")))
        if code.get("homogeneous") is False:
            lines[-1] += " (degree <= d)"
        if "generator" in code:
            lines.extend(" ".join(str(x) for x in row) for row in code["generator"])
    for row in report.get("rows", []):
        text = f"r={row['r']:<3} {row['method']:<15} {row['value']:>8}"
        text += "" if row["exact"] else "  (lower bound)"
        if row["witness"] is not None:
            text += "  " + _witness_text(row["witness"])
        if row["millis"] is not None:
            text += f"  [{row['millis']:.1f} ms]"
        lines.append(text)
    for chk in report.get("checks", []):
        lines.append(f"{'PASS' if chk['pass'] else 'FAIL'} {chk['name']}: {chk['detail']}")
    return "\n".join(lines) + "\n"


def emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


@contextmanager
def time_limit(seconds: int):
    if not seconds or not hasattr(signal, "SIGALRM"):
        yield
        return

    def handler(signum, frame):
        raise TimeLimitExceeded(f"time limit of {seconds} s exceeded")

    old = signal.signal(signal.SIGALRM, handler)
    signal.alarm(seconds)
    try:
        yield
    finally:
        signal.alarm(0)
        signal.signal(signal.SIGALRM, old)


# -- commands ------------------------------------------------------------------


def cmd_code(args) -> dict:
    C = make_code(args.q, args.m, args.d, args.leq, args.preset, args.sets)
    want = expected_dimension(C)
    got = rank(C.generator)
    return {
        "schema_version": SCHEMA_VERSION,
        "config": config_echo(args),
        "code": code_summary(C, args.show_generator),
        "rows": [],
        "checks": [{"name": "dimension", "pass": got == want, "detail": f"rank {got}, expected {want}"}],
    }


def _row(rec) -> dict:
    return {
        "r": rec.r,
        "method": rec.method,
        "value": rec.value,
        "witness": rec.witness,
        "exact": rec.exact,
        "millis": None if rec.millis is None else round(rec.millis, 3),
    }


def _hint(exc: Exception) -> str:
    return f"{exc}; this method does not cover the case, use --method footprint or an exact method"


def cmd_ghw(args) -> dict:
    C = make_code(args.q, args.m, args.d, args.leq, args.preset, args.sets)
    k = generator_of(C).rows
    rs = args.r if args.r is not None else list(range(1, k + 1))
    for r in rs:
        if not 1 <= r <= k:
            raise BadRange(f"r = {r} outside 1..{k} (the code has dimension {k})")
    methods = list(METHODS) if args.method == "all" else [args.method]
    jobs = args.jobs or default_jobs()
    kw = dict(cap=args.cap, budget=args.budget, search_budget=args.search_budget, jobs=jobs, timing=args.timing)

    rows, checks = [], []
    dual_values = None
    for r in rs:
        records = []
        for method in methods:
            try:
                if method == "duality":
                    if args.method == "all" and C.n - k > DUALITY_MAX_DIM:
                        checks.append({"name": f"duality r={r}", "pass": True,
                                       "detail": f"skipped: dual dimension {C.n - k} > {DUALITY_MAX_DIM}"})
                        continue
                    # the dual hierarchy gives every r at once
                    if dual_values is None:
                        dual_values = exact_hierarchy(C, "duality", budget=args.budget)
                    records.append(GHWRecord(r, dual_values[r - 1], "duality", None, True, None))
                else:
                    records.append(ghw_value(C, r, method, **kw))
            except ConditionFails as exc:
                if args.method != "all":
                    raise BadRange(
                        f"{exc} (the expression evaluates to {exc.value} but is not established here); "
                        "use --method footprint or an exact method"
                    ) from exc
                checks.append({"name": f"{method} r={r}", "pass": True, "detail": "skipped: size condition fails"})
            except (BadRange, BadArgs) as exc:
                if args.method != "all":
                    raise BadRange(_hint(exc)) from exc
                checks.append({"name": f"{method} r={r}", "pass": True, "detail": f"skipped: {exc}"})
            except BudgetError as exc:
                if args.method != "all" or isinstance(exc, TimeLimitExceeded):
                    raise
                checks.append({"name": f"{method} r={r}", "pass": True, "detail": f"skipped: {exc}"})
        if args.method == "all":
            checks.append(_cross_check(r, records))
        rows.extend(_row(rec) for rec in records)
    return {
        "schema_version": SCHEMA_VERSION,
        "config": config_echo(args),
        "code": code_summary(C),
        "rows": rows,
        "checks": checks,
    }


def _cross_check(r: int, records) -> dict:
    exact = {rec.method: rec.value for rec in records if rec.exact}
    bounds = {rec.method: rec.value for rec in records if not rec.exact}
    values = set(exact.values())
    ok = len(values) <= 1
    if ok and values:
        v = values.pop()
        ok = all(b <= v for b in bounds.values())
    if not ok:
        raise Disagreement(
            f"methods disagree at r={r}: exact {exact}, lower bounds {bounds}",
            [_row(rec) for rec in records],
        )
    detail = f"{len(exact)} exact value(s) agree"
    if bounds:
        detail += f"; lower bounds {sorted(bounds.values())} do not exceed them"
    return {"name": f"agree r={r}", "pass": True, "detail": detail}


def cmd_verify(args) -> dict:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    checks = []
    for name in names:
        kw = {}
        if name in RANDOMIZED:
            kw.update(trials=args.trials, seed=args.seed)
        if name in GRIDDED:
            if args.q is not None:
                kw["qs"] = args.q
            if args.m is not None:
                kw["ms"] = args.m
        if name == "torus-example":
            kw["extended"] = args.extended
        res = SUITES[name](**kw)
        checks.append({"name": name, "pass": res.ok, "detail": res.detail})
    return {"schema_version": SCHEMA_VERSION, "config": config_echo(args), "rows": [], "checks": checks}


def _exact_value(C: EvaluationCode, r: int, args, jobs: int, cache: dict):
    """Exact d_r by subspace enumeration within the cap, else by support search."""
    G = generator_of(C)
    if gaussian_binomial(G.rows, r, C.spec.q) <= args.cap:
        return ghw_value(C, r, "exact-subspace", cap=args.cap, jobs=jobs).value
    if "support" not in cache:
        try:
            cache["support"] = support_hierarchy(G, args.budget)
        except BudgetError:
            cache["support"] = None
    values = cache["support"]
    return None if values is None else values[r - 1]


def _optional(C, r, method, args):
    try:
        rec = ghw_value(C, r, method, search_budget=args.search_budget)
    except (CodeError, ValueError):
        return None, True
    return rec.value, rec.exact


def cmd_table(args) -> tuple[list[str], list[list]]:
    jobs = args.jobs or default_jobs()
    projective = args.preset == "projective"
    header = TABLE_HEADER + ([PROJECTIVE_COLUMN] if projective else [])
    out = []
    for q in args.q or []:
        for m in args.m if args.m is not None else [2, 3, 4]:
            top = m + 1 if projective else m
            ds = args.d if args.d is not None else list(range(1, top + 1))
            for d in ds:
                C = make_code(q, m, d, args.leq, args.preset, None)
                partner = build_partner(C, q, m, d) if projective else None
                cache, pcache = {}, {}
                last = (m + 2 - d) if projective else (m + 1 - d)
                rs = args.r if args.r is not None else list(range(1, last + 1))
                for r in rs:
                    if not 1 <= r <= C.k:
                        continue
                    exact = _exact_value(C, r, args, jobs, cache)
                    fp, fp_exact = _optional(C, r, "footprint", args)
                    fm, fm_exact = _optional(C, r, "formula", args)
                    agree = exact is not None
                    for v, is_exact in ((fp, fp_exact), (fm, fm_exact)):
                        if v is not None and exact is not None:
                            agree = agree and (v == exact if is_exact else v <= exact)
                    row = [q, m, d, r, C.n, C.k, _blank(exact), _blank(fp), _blank(fm), agree]
                    if projective:
                        a = _exact_value(partner, r, args, jobs, pcache)
                        row.append(None if a is None or exact is None else (q - 1) * exact == a)
                    out.append(row)
    return header, out


def build_partner(C: EvaluationCode, q: int, m: int, d: int) -> EvaluationCode:
    """The affine-punctured code on F_q^{m+1} matching a projective code."""
    from .projective import build_affine_punctured

    return build_affine_punctured(C.spec, m + 1, d)


def _blank(v):
    return "" if v is None else v


def render_table(header: list[str], rows: list[list], fmt: str, config: dict) -> str:
    if fmt == "json":
        recs = [dict(zip(header, row)) for row in rows]
        doc = {"schema_version": SCHEMA_VERSION, "config": config, "rows": recs, "checks": []}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if x is None else str(x).lower() if isinstance(x, bool) else x for x in row])
    return buf.getvalue()


# -- entry point ---------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with time_limit(getattr(args, "time_limit", 0)):
            if args.command == "table":
                header, rows = cmd_table(args)
                emit(render_table(header, rows, args.format, config_echo(args)), args.output)
                return EXIT_OK if all(row[9] is not False for row in rows) else EXIT_DISAGREE
            report = {"code": cmd_code, "ghw": cmd_ghw, "verify": cmd_verify}[args.command](args)
    except Disagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps(exc.dump, indent=2), file=sys.stderr)
        return EXIT_DISAGREE
    except BudgetError as exc:
        hint = ""
        if args.command == "ghw" and args.method == "exact-subspace":
            hint = " (try --method exact-support or footprint, or raise --cap)"
        elif args.command == "ghw" and args.method in ("exact-support", "duality"):
            hint = " (try --method exact-subspace or footprint, or raise --budget)"
        print(f"budget exceeded: {exc}{hint}", file=sys.stderr)
        return EXIT_BUDGET
    except (CodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    emit(render(report, args.format), args.output)
    if any(not chk["pass"] for chk in report["checks"]):
        return EXIT_DISAGREE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
