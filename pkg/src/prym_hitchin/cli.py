"""Command-line front end: ``dims``, ``analyze`` and ``sweep``.

Exit codes: 0 success, 2 a mathematical identity failed, 64 bad usage,
65 bad data (the library error class is printed).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import moduli_tables as mt
from .cover_geometry import CoverData
from .errors import GridTooLarge, IdentityFailure, PrymHitchinError
from .exact_algebra import (
    Poly,
    char_poly,
    determinant,
    evaluate_at_matrix,
    parity_decompose,
    pfaffian,
    poly_square_root,
    vanishing_order,
)
from .higgs_local import (
    Alternating,
    InvariantTyped,
    alternating_square_certificate,
    equivariance_parity_check,
    hitchin_map,
    is_nilpotent,
    vanishing_order_profile,
)
from .serialization import (
    SchemaError,
    bipoly_out,
    child,
    cover_in,
    fixed_out,
    germ_in,
    higgs_in,
    int_in,
    matrix_in,
    order_out,
    poly_in,
    poly_out,
)
from .spectral_model import (
    ANTI_ALTERNATING,
    ANTI_SYMMETRIC,
    INVARIANT_MAX,
    WSpace,
    genus_ledger,
    invariant_tau,
    spectral_report,
    w_membership,
)
from .suites import run_suite

EXIT_OK = 0
EXIT_IDENTITY = 2
EXIT_USAGE = 64
EXIT_DATA = 65
SCENARIO_VERSION = "1"
DEFAULT_SEED = 42


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _range(text: str) -> tuple:
    """``"A..B"`` or ``"A"`` as an inclusive pair."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            pair = (int(lo), int(hi))
        else:
            pair = (int(text), int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or an integer, got {text!r}") from None
    if pair[0] > pair[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return pair


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def _md_table(header: list, rows: list) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines)


def _csv(rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _cover_from_flags(gy: int, n: int, etale: bool) -> CoverData:
    return CoverData(gy, n, etale or n == 0)


# --------------------------------------------------------------------------
# dims

def render_dims(cover: CoverData, r: int, rep: mt.DimReport, fmt: str) -> str:
    checks = [{"lhs": a, "rhs": b, "pass": ok} for a, b, ok in rep.equality_checks]
    if fmt == "json":
        return _dumps({"cover": cover.to_json(), "r": r, "dims": rep.dims, "checks": checks})
    if fmt == "csv":
        rows = [["label", "dim"]] + [[k, v] for k, v in rep.dims.items()]
        rows += [["check", "result"]] + [[f"{c['lhs']}={c['rhs']}", "pass" if c["pass"] else "FAIL"] for c in checks]
        return _csv(rows)
    out = [f"cover: g_Y={cover.g_Y} n={cover.n} g_X={cover.g_X}{' (etale)' if cover.etale else ''}  rank: {r}", ""]
    out.append(_md_table(["space", "dim"], [[k, v] for k, v in rep.dims.items()]))
    if checks:
        out += ["", _md_table(["identity", "result"],
                              [[f"{c['lhs']} = {c['rhs']}", "pass" if c["pass"] else "FAIL"] for c in checks])]
    return "\n".join(out)


def cmd_dims(args) -> int:
    cover = _cover_from_flags(args.gy, args.n, args.etale)
    space = args.space
    if space is None and args.kind is None and args.type is None and args.kp is None:
        space = "all"
    if args.kp is not None and space is None:
        space = "tau"
    rep = mt.dim_report(cover, args.r, space, args.kind, args.kp, args.type, args.d, args.fixed_det)
    print(render_dims(cover, args.r, rep, args.format))
    return EXIT_OK if rep.passed else EXIT_IDENTITY


# --------------------------------------------------------------------------
# analyze

def _parse_space(text, pointer) -> WSpace:
    if not isinstance(text, str):
        raise SchemaError(pointer, "expected a space name such as WMinus or WTau(1)")
    try:
        return WSpace.parse(text)
    except ValueError as exc:
        raise SchemaError(pointer, str(exc)) from None


def _parse_scenario(text, pointer):
    if not isinstance(text, str):
        raise SchemaError(pointer, "expected a scenario name")
    t = text.strip().lower().replace("_", "")
    fixed = {"antisymmetric": ANTI_SYMMETRIC, "antialternating": ANTI_ALTERNATING, "invariantmax": INVARIANT_MAX}
    if t in fixed:
        return fixed[t]
    if t.startswith("invarianttau(") and t.endswith(")"):
        try:
            return invariant_tau(int(t[len("invarianttau("):-1]))
        except ValueError:
            pass
    raise SchemaError(pointer, f"unknown scenario {text!r}")


def _range_in(value, pointer) -> tuple:
    if isinstance(value, int) and not isinstance(value, bool):
        return (value, value)
    if not (isinstance(value, list) and len(value) == 2):
        raise SchemaError(pointer, "expected [lo, hi] or an integer")
    lo, hi = (int_in(v, child(pointer, i)) for i, v in enumerate(value))
    if lo > hi:
        raise SchemaError(pointer, "empty range")
    return lo, hi


MATRIX_OPS = ("char_poly", "det", "pfaffian", "cayley_hamilton", "nilpotent", "hitchin")
POLY_OPS = ("square_root", "vanishing_order", "parity")


def _ops_in(task, pointer, allowed, default):
    ops = task.get("ops", list(default))
    if not isinstance(ops, list):
        raise SchemaError(child(pointer, "ops"), "expected an array")
    for i, op in enumerate(ops):
        if op not in allowed:
            raise SchemaError(child(child(pointer, "ops"), i), f"unknown op {op!r}; expected one of {', '.join(allowed)}")
    return ops


def validate_task(task, pointer, cover):
    """Parse one task into ``(kind, payload)`` or raise SchemaError / a library error."""
    if not isinstance(task, dict):
        raise SchemaError(pointer, "expected an object")
    kind = task.get("kind")
    needs_cover = kind in ("dims", "types", "ledger")
    if needs_cover and cover is None:
        raise SchemaError("/cover", f"task kind {kind!r} needs a cover")
    if kind == "germ":
        germ = germ_in(task.get("germ"), child(pointer, "germ"))
        spaces = task.get("spaces", [])
        if not isinstance(spaces, list):
            raise SchemaError(child(pointer, "spaces"), "expected an array")
        return kind, (germ, [_parse_space(s, child(child(pointer, "spaces"), i)) for i, s in enumerate(spaces)])
    if kind == "higgs":
        return kind, higgs_in(task.get("higgs"), child(pointer, "higgs"))
    if kind == "matrix":
        m = matrix_in(task.get("matrix"), child(pointer, "matrix"))
        return kind, (m, _ops_in(task, pointer, MATRIX_OPS, ("char_poly",)))
    if kind == "poly":
        p = poly_in(task.get("poly"), child(pointer, "poly"))
        return kind, (p, _ops_in(task, pointer, POLY_OPS, POLY_OPS))
    if kind == "dims":
        r = int_in(task.get("r"), child(pointer, "r"), 1)
        space = task.get("space", "all")
        if space not in mt.SPACES:
            raise SchemaError(child(pointer, "space"), f"expected one of {', '.join(mt.SPACES)}")
        return kind, (r, space)
    if kind == "types":
        r = int_in(task.get("r"), child(pointer, "r"), 1)
        d = int_in(task.get("d", 0), child(pointer, "d"))
        mo = task.get("maximal_only", False)
        if not isinstance(mo, bool):
            raise SchemaError(child(pointer, "maximal_only"), "expected a boolean")
        return kind, (r, d, mo)
    if kind == "grid":
        grid = mt.Grid(
            _range_in(task.get("g_Y", [1, 5]), child(pointer, "g_Y")),
            _range_in(task.get("n", [1, 6]), child(pointer, "n")),
            _range_in(task.get("r", [1, 8]), child(pointer, "r")),
            _range_in(task["k_p"], child(pointer, "k_p")) if "k_p" in task else None,
        )
        return kind, grid
    if kind == "orbits":
        return kind, int_in(task.get("n"), child(pointer, "n"), 1)
    if kind == "ledger":
        r = int_in(task.get("r"), child(pointer, "r"), 1)
        return kind, (r, _parse_scenario(task.get("scenario"), child(pointer, "scenario")))
    raise SchemaError(child(pointer, "kind"), f"unknown task kind {kind!r}")


def _membership_out(m):
    cert = m.certificate
    if isinstance(cert, Poly):
        cert = poly_out(cert)
    elif isinstance(cert, tuple):
        cert = [order_out(o) for o in cert]
    return {"member": m.member, "certificate": cert}


def run_task(kind, payload, cover) -> dict:
    if kind == "germ":
        germ, spaces = payload
        rep = spectral_report(germ)
        out = {
            "kind": "germ",
            "spectral_polynomial": bipoly_out(rep.spectral_polynomial),
            "smooth_on_fiber": rep.smooth_on_fiber,
            "singular_fiber_gcd": poly_out(rep.singular_fiber_gcd),
            "fixed_points_on_fiber": fixed_out(rep.fixed_point_count_on_fiber),
        }
        nc = rep.node_certificate
        if nc is not None:
            out["node_profile"] = {
                "certificate": poly_out(nc.certificate),
                "simple_roots": nc.simple_roots,
                "all_nodes": nc.all_nodes,
                "node_count": nc.node_count,
            }
        if spaces:
            out["membership"] = {s.label: _membership_out(w_membership(germ, s)) for s in spaces}
        return out
    if kind == "higgs":
        h = payload
        img = hitchin_map(h)
        out = {
            "kind": "higgs",
            "structure": h.structure.kind,
            "hitchin": [poly_out(c) for c in img.components],
            "parity": [
                {"i": v.index, "expected": v.expected, "ok": v.ok} for v in equivariance_parity_check(h).verdicts
            ],
            "nilpotent": is_nilpotent(h.phi),
        }
        if isinstance(h.structure, Alternating):
            out["certificate"] = poly_out(alternating_square_certificate(h))
        if isinstance(h.structure, InvariantTyped):
            out["vanishing_orders"] = [order_out(o) for o in vanishing_order_profile(h)]
        return out
    if kind == "matrix":
        m, ops = payload
        out = {"kind": "matrix"}
        for op in ops:
            if op == "char_poly":
                out["char_poly"] = bipoly_out(char_poly(m))
            elif op == "det":
                out["det"] = poly_out(determinant(m))
            elif op == "pfaffian":
                pf = pfaffian(m)
                out["pfaffian"] = poly_out(pf)
                out["pfaffian_squared_is_det"] = pf * pf == determinant(m)
            elif op == "cayley_hamilton":
                out["cayley_hamilton"] = evaluate_at_matrix(char_poly(m), m).is_zero
            elif op == "nilpotent":
                out["nilpotent"] = is_nilpotent(m)
            elif op == "hitchin":
                out["hitchin"] = [poly_out(c) for c in hitchin_map(m).components]
        return out
    if kind == "poly":
        p, ops = payload
        out = {"kind": "poly"}
        for op in ops:
            if op == "square_root":
                try:
                    out["square_root"] = poly_out(poly_square_root(p))
                except PrymHitchinError as exc:
                    out["square_root"] = {"error": type(exc).__name__}
            elif op == "vanishing_order":
                out["vanishing_order"] = order_out(vanishing_order(p))
            elif op == "parity":
                even, odd = parity_decompose(p)
                out["parity"] = {"even": poly_out(even), "odd": poly_out(odd)}
        return out
    if kind == "dims":
        r, space = payload
        rep = mt.dim_report(cover, r, space)
        return {"kind": "dims", "r": r, "dims": rep.dims,
                "checks": [{"lhs": a, "rhs": b, "pass": ok} for a, b, ok in rep.equality_checks]}
    if kind == "types":
        r, d, mo = payload
        types = mt.enumerate_types(cover, r, d, mo)
        return {"kind": "types", "r": r, "d": d, "maximal_only": mo, "count": len(types),
                "types": [list(t.ks) for t in types]}
    if kind == "grid":
        rep = mt.identity_sweep(payload)
        return {"kind": "grid", "cells": rep.cells, "checks": len(rep.checks), "passed": rep.passed,
                "families": rep.counts()}
    if kind == "orbits":
        oc = mt.p2_orbits_rank2(payload)
        return {"kind": "orbits", "n": payload, "orbits": oc.orbits, "components": oc.components,
                "free": oc.free}
    if kind == "ledger":
        r, scenario = payload
        led = genus_ledger(cover, r, scenario)
        return {"kind": "ledger", "r": r, "scenario": scenario.label, "g_spectral": led.g_spectral,
                "deg_ram_spectral": led.deg_ram_spectral, "g_quotient_spectral": led.g_quotient_spectral,
                "g_normalized": led.g_normalized, "g_normalized_quotient": led.g_normalized_quotient,
                "prym_dim": led.prym_dim, "pic_degree": led.pic_degree, "node_count": led.node_count}
    raise AssertionError(kind)


def _flatten(prefix, value, rows):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    else:
        rows.append((prefix, json.dumps(value, separators=(",", ":"))))


def render_results(results: list, fmt: str) -> str:
    if fmt == "json":
        return _dumps({"version": SCENARIO_VERSION, "results": results})
    rows = []
    for i, res in enumerate(results):
        flat = []
        _flatten("", res, flat)
        rows += [(i, k, v) for k, v in flat]
    if fmt == "csv":
        return _csv([("task", "field", "value")] + rows)
    return _md_table(["task", "field", "value"], [[i, k, f"`{v}`"] for i, k, v in rows]) if rows else "(no tasks)"


def load_scenario(doc):
    """Validate a scenario document; returns ``(cover, [(kind, payload), ...])``."""
    if not isinstance(doc, dict):
        raise SchemaError("/", "expected an object")
    if doc.get("version") != SCENARIO_VERSION:
        raise SchemaError("/version", f"expected version {SCENARIO_VERSION!r}")
    cover = None
    if doc.get("cover") is not None:
        try:
            cover = cover_in(doc["cover"], "/cover")
        except PrymHitchinError as exc:
            raise LocatedError(exc, "/cover")
    tasks = doc.get("tasks", [])
    if not isinstance(tasks, list):
        raise SchemaError("/tasks", "expected an array")
    parsed = []
    for i, task in enumerate(tasks):
        ptr = child("/tasks", i)
        try:
            parsed.append(validate_task(task, ptr, cover))
        except PrymHitchinError as exc:
            raise LocatedError(exc, ptr)
    return cover, parsed


class LocatedError(Exception):
    def __init__(self, exc: PrymHitchinError, pointer: str):
        self.exc = exc
        self.pointer = pointer
        super().__init__(f"{type(exc).__name__} at {pointer}: {exc}")


def cmd_analyze(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
        return EXIT_DATA
    except json.JSONDecodeError as exc:
        print(f"SchemaError at /: invalid JSON ({exc.msg} at line {exc.lineno})", file=sys.stderr)
        return EXIT_DATA
    try:
        cover, tasks = load_scenario(doc)
    except SchemaError as exc:
        print(f"SchemaError at {exc.pointer}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except LocatedError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DATA
    results = []
    for i, (kind, payload) in enumerate(tasks):
        try:
            results.append(run_task(kind, payload, cover))
        except IdentityFailure as exc:
            print(f"IdentityFailure at /tasks/{i}: {exc}", file=sys.stderr)
            return EXIT_IDENTITY
        except PrymHitchinError as exc:
            print(f"{type(exc).__name__} at /tasks/{i}: {exc}", file=sys.stderr)
            return EXIT_DATA
    print(render_results(results, args.format))
    return EXIT_OK


# --------------------------------------------------------------------------
# sweep

SUITE_FLAGS = {
    "cayley_trials": ("cayley_hamilton",),
    "pfaffian_trials": ("pfaffian_det",),
    "sqrt_trials": ("square_root", "non_square"),
    "certificate_trials": ("alternating_certificate",),
    "parity_trials": ("parity_symmetric", "parity_alternating", "parity_invariant"),
    "vanishing_trials": ("vanishing_orders",),
    "fixed_point_trials": ("fixed_points",),
    "smoothness_trials": ("smoothness",),
    "node_trials": ("wminus_nodes",),
}
ALL_SUITES_TRIALS = {
    "cayley_trials": 200, "pfaffian_trials": 200, "sqrt_trials": 500, "certificate_trials": 200,
    "parity_trials": 200, "vanishing_trials": 200, "fixed_point_trials": 200,
    "smoothness_trials": 500, "node_trials": 200,
}


def _suite_params(name: str, args) -> dict:
    if name in ("pfaffian_det", "cayley_hamilton") and args.max_dim is not None:
        return {"max_dim": args.max_dim}
    return {}


def replay_scenario(task: dict) -> dict:
    return {"version": SCENARIO_VERSION, "cover": None, "tasks": [task]}


def _failed_cell_rows(ch, k_filter) -> list:
    """Every identity of the cell holding the failing check, for the table form."""
    rows = []
    for c in mt.cell_checks(ch.g_Y, ch.n, ch.r, k_filter):
        rows.append([c.family, c.g_Y, c.n, c.r, "" if c.k_p is None else c.k_p, c.lhs, c.rhs,
                     "pass" if c.passed else "FAIL"])
    return rows


def cmd_sweep(args) -> int:
    seed = args.seed
    lines = [f"seed: {seed}"]
    summary = {"seed": seed}
    md_rows = [["seed", str(seed), ""]]
    status = EXIT_OK

    grid = mt.Grid(args.gy, args.n, args.r, args.kp)
    try:
        rep = mt.identity_sweep(grid, jobs=args.jobs)
    except IdentityFailure as exc:
        ch = exc.check
        task = {"kind": "grid", "g_Y": [ch.g_Y, ch.g_Y], "n": [ch.n, ch.n], "r": [ch.r, ch.r]}
        if ch.k_p is not None:
            task["k_p"] = [ch.k_p, ch.k_p]
        replay = {"version": SCENARIO_VERSION, "cover": None, "tasks": [task]}
        if args.format == "json":
            summary.update(status="fail", failure={"check": ch.family, "g_Y": ch.g_Y, "n": ch.n, "r": ch.r,
                                                   "k_p": ch.k_p, "lhs": ch.lhs, "rhs": ch.rhs},
                           replay=replay)
            print(_dumps(summary))
        elif args.format == "md":
            header = ["identity", "g_Y", "n", "r", "k_p", "lhs", "rhs", "status"]
            print(_md_table(header, _failed_cell_rows(ch, grid.k_p)))
            print()
            print("replay scenario:")
            print(_dumps(replay))
        else:
            print("\n".join(lines))
            print(f"FAIL identities: {exc}")
            print("replay scenario:")
            print(_dumps(replay))
        return EXIT_IDENTITY
    span = f"g_Y {grid.g_Y[0]}..{grid.g_Y[1]}, n {grid.n[0]}..{grid.n[1]}, r {grid.r[0]}..{grid.r[1]}"
    lines.append(f"identities: all identities pass ({rep.cells} cells, {len(rep.checks)} checks, {span})")
    md_rows.append(["identities", f"{rep.cells} cells, {len(rep.checks)} checks, {span}", "pass"])
    summary["identities"] = {"cells": rep.cells, "checks": len(rep.checks), "families": rep.counts(),
                             "skipped_cells": [list(c) for c in rep.skipped_cells]}
    if rep.skipped_cells:
        lines.append(f"  skipped {len(rep.skipped_cells)} inadmissible cells (g_X < 2)")

    if args.orbits:
        orbit_rows = []
        for n in range(max(1, args.n[0]), args.n[1] + 1):
            oc = mt.p2_orbits_rank2(n)
            ok = oc.orbits == 2 and oc.components == 2 ** (2 * n - 1) and oc.free
            verdict = "pass" if ok else "FAIL"
            orbit_rows.append({"n": n, "orbits": oc.orbits, "components": oc.components, "free": oc.free})
            lines.append(f"orbits n={n}: orbit count {oc.orbits}, components {oc.components}, free {oc.free}"
                         f" [{verdict}]")
            md_rows.append([f"orbits n={n}", f"{oc.orbits} orbits, {oc.components} components", verdict])
            if not ok:
                status = EXIT_IDENTITY
        summary["orbits"] = orbit_rows

    trials = {k: getattr(args, k) for k in SUITE_FLAGS}
    if args.all_suites:
        trials = {k: v or ALL_SUITES_TRIALS[k] for k, v in trials.items()}
    suites_out = []
    for flag, names in SUITE_FLAGS.items():
        count = trials[flag]
        if not count:
            continue
        for name in names:
            res = run_suite(name, count, seed, args.jobs, **_suite_params(name, args))
            entry = {"suite": name, "trials": count, "failures": len(res.failures), "stats": res.stats}
            verdict = "pass" if res.passed else "FAIL"
            lines.append(f"suite {name}: {count} trials, {len(res.failures)} failures [{verdict}]")
            md_rows.append([f"suite {name}", f"{count} trials, {len(res.failures)} failures", verdict])
            if not res.passed:
                status = EXIT_IDENTITY
                first = res.failures[0]
                entry["replay"] = replay_scenario(first["task"])
                lines.append(f"  first failure at trial {first['trial']}; replay scenario:")
                lines.append(_dumps(entry["replay"]))
            suites_out.append(entry)
    if suites_out:
        summary["suites"] = suites_out

    if args.format == "json":
        summary["status"] = "pass" if status == EXIT_OK else "fail"
        print(_dumps(summary))
    elif args.format == "md":
        print(_md_table(["check", "detail", "status"], md_rows))
        for entry in suites_out:
            if "replay" in entry:
                print()
                print(f"replay scenario for {entry['suite']}:")
                print(_dumps(entry["replay"]))
    else:
        print("\n".join(lines))
    return status


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="prym-hitchin", description="Exact checks for Hitchin systems on curves with involution.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    d = sub.add_parser("dims", help="dimension table for one cover and rank")
    d.add_argument("--gy", type=int, required=True, help="genus of the quotient curve")
    d.add_argument("--n", type=int, required=True, help="half the number of ramification points")
    d.add_argument("--r", type=int, required=True, help="rank")
    d.add_argument("--etale", action="store_true", help="assert the cover is etale (n = 0)")
    d.add_argument("--space", choices=mt.SPACES, default=None)
    d.add_argument("--kind", choices=("plus", "minus"), default=None, help="anti-invariant locus only")
    d.add_argument("--kp", type=int, default=None, help="k_p for the typed invariant space")
    d.add_argument("--type", type=_int_list, default=None, help="explicit type k_1,...,k_2n")
    d.add_argument("--d", type=int, default=0, help="degree, enters only through parity")
    d.add_argument("--fixed-det", action="store_true")
    d.add_argument("--format", choices=("md", "json", "csv"), default="md")
    d.set_defaults(func=cmd_dims)

    a = sub.add_parser("analyze", help="run the tasks of a JSON scenario file")
    a.add_argument("file")
    a.add_argument("--format", choices=("json", "csv", "md"), default="json")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", help="identity sweep and seeded property suites")
    s.add_argument("--gy", type=_range, default=(1, 5))
    s.add_argument("--n", type=_range, default=(1, 6))
    s.add_argument("--r", type=_range, default=(1, 8))
    s.add_argument("--kp", type=_range, default=None)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--orbits", action="store_true", help="orbit counts for each n in the --n range")
    s.add_argument("--max-dim", type=int, default=None, help="largest matrix size in the kernel suites")
    for flag in SUITE_FLAGS:
        s.add_argument("--" + flag.replace("_", "-"), dest=flag, type=int, default=0)
    s.add_argument("--all-suites", action="store_true", help="run every suite with its default trial count")
    s.add_argument("--format", choices=("text", "json", "md"), default="text")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.exit(EXIT_USAGE, "prym-hitchin: error: --jobs must be >= 1\n")
    try:
        return args.func(args)
    except GridTooLarge as exc:
        print(f"GridTooLarge: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PrymHitchinError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
