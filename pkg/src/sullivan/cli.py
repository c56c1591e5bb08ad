"""Batch front-end: reproducible verification runs with JSON reports.

Exit codes: 0 all checks pass, 1 configuration error, 2 I/O error,
3 mathematical check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import arithmetic
from .arithmetic import DegreeScheme
from .core import check_d_squared
from .graphs import GraphError, GroupTable, SimpleGraph, automorphisms, find_group_isomorphism, frucht_graph
from .endo import SolveError, solve_graph, solve_rigid, tilde_monoid
from .models import (
    ModelError,
    ModelMk,
    ModelMnG,
    build_mk,
    build_mng,
    ellipticity_certificates,
    formal_dimension,
    mng_formal_dimension_formula,
    model_from_dict,
    model_to_dict,
    monomial_cocycle_representative,
    tilde,
)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_MATH = 3


class ConfigError(ValueError):
    pass


def _parse_toml_lite(text: str) -> dict:
    """Minimal flat TOML: [sections], key = value with strings, integers,
    booleans and homogeneous arrays.  Enough for run configs; JSON configs
    are the first-class format."""
    out = {}
    section = out

    def parse_value(raw: str):
        raw = raw.strip()
        if raw.startswith("["):
            inner = raw.strip("[]").strip()
            return [parse_value(x) for x in inner.split(",")] if inner else []
        if raw.startswith('"') and raw.endswith('"'):
            return raw[1:-1]
        if raw in ("true", "false"):
            return raw == "true"
        return int(raw)

    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            name = line.strip("[]").strip()
            section = out.setdefault(name, {})
            continue
        if "=" not in line:
            raise ConfigError(f"cannot parse config line: {line!r}")
        key, _, raw = line.partition("=")
        section[key.strip()] = parse_value(raw)
    return out


def load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise IOError(f"cannot read config {path}: {exc}") from exc
    if path.endswith(".toml"):
        return _parse_toml_lite(text)
    return json.loads(text)


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise IOError(f"cannot read {path}: {exc}") from exc


def _emit(report: dict, args) -> None:
    text = json.dumps(report, indent=None if args.quiet else 2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        if not args.quiet:
            print(f"wrote {args.out}")
    else:
        print(text)


def _load_graph(args) -> SimpleGraph:
    data = _read_json(args.graph)
    try:
        return SimpleGraph.from_dict(data)
    except (KeyError, GraphError) as exc:
        raise ConfigError(f"bad graph file: {exc}") from exc


def _load_model(path: str):
    data = _read_json(path)
    try:
        return model_from_dict(data)
    except ModelError as exc:
        raise IOError(str(exc)) from exc
    except (KeyError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


GROUPS = {
    "trivial": GroupTable.trivial,
    "z2": lambda: GroupTable.cyclic(2),
    "z3": lambda: GroupTable.cyclic(3),
    "z4": lambda: GroupTable.cyclic(4),
    "z5": lambda: GroupTable.cyclic(5),
    "z6": lambda: GroupTable.cyclic(6),
    "s3": lambda: GroupTable.symmetric(3),
}


def _named_group(spec: str) -> GroupTable:
    if spec in GROUPS:
        return GROUPS[spec]()
    if spec.endswith(".json"):
        data = _read_json(spec)
        return GroupTable(data["table"], names=data.get("names"))
    raise ConfigError(
        f"unknown group {spec!r}; use one of {sorted(GROUPS)} or a JSON table file"
    )


# -- subcommands -----------------------------------------------------------------


def cmd_build(args) -> int:
    if args.family == "mk":
        if args.k is None:
            raise ConfigError("--k is required for the rigid family")
        model = build_mk(args.k)
    elif args.family == "mng":
        if args.n is None or args.graph is None:
            raise ConfigError("--n and --graph are required for the graph family")
        model = build_mng(args.n, _load_graph(args))
    else:
        raise ConfigError(f"unknown family {args.family!r}")
    _emit(model_to_dict(model), args)
    return EXIT_OK


def cmd_analyze(args) -> int:
    model = _load_model(args.model)
    checks = args.checks.split(",") if args.checks else ["d2", "dim"]
    report = {"model": model.label, "checks": {}}
    ok = True
    for check in checks:
        if check == "d2":
            good = check_d_squared(model.algebra)
            report["checks"]["d2"] = good
        elif check == "dim":
            dim = formal_dimension(model.algebra)
            entry = {"formal_dimension": dim}
            if isinstance(model, ModelMnG):
                entry["closed_form"] = mng_formal_dimension_formula(
                    model.n, len(model.graph.vertices)
                )
                good = entry["closed_form"] == dim
            else:
                from .models import mk_formal_dimension_formula

                entry["closed_form"] = mk_formal_dimension_formula(model.k)
                good = entry["closed_form"] == dim
            entry["verdict"] = good
            report["checks"]["dim"] = entry
        elif check == "elliptic":
            if not isinstance(model, ModelMnG):
                raise ConfigError("ellipticity certificates need the graph family")
            rep = ellipticity_certificates(model)
            report["checks"]["elliptic"] = rep.to_dict()
            good = rep.ok
        elif check == "isolation":
            good = arithmetic.isolation_check(model.scheme)
            report["checks"]["isolation"] = good
        else:
            raise ConfigError(f"unknown check {check!r}")
        ok = ok and bool(good)
    report["ok"] = ok
    _emit(report, args)
    return EXIT_OK if ok else EXIT_MATH


def cmd_verify_arith(args) -> int:
    reports = []
    ok = True
    if args.family in ("mk", "both"):
        for k in range(6, args.k_max + 1, 2):
            rep = arithmetic.table1_check(k).to_dict()
            rep["family"] = "mk"
            ok = ok and rep["ok"]
            reports.append(rep)
    if args.family in ("mng", "both"):
        for n in range(1, args.n_max + 1):
            t2 = arithmetic.table2_check(n)
            dio = arithmetic.dioph_no_solution_check(n)
            gcd_ok = arithmetic.gcd_identity_check(n)
            entry = {
                "family": "mng",
                "parameter": n,
                "table2": t2.to_dict(),
                "diophantine": dio.to_dict(),
                "gcd_identity": gcd_ok,
                "ok": t2.ok and dio.ok and gcd_ok,
            }
            ok = ok and entry["ok"]
            reports.append(entry)
    _emit({"ok": ok, "reports": reports}, args)
    return EXIT_OK if ok else EXIT_MATH


def cmd_aut(args) -> int:
    graph = _load_graph(args)
    try:
        auts = automorphisms(graph)
    except GraphError as exc:
        raise ConfigError(str(exc)) from exc
    report = {
        "order": auts.order,
        "elements": [
            {v: p(v) for v in graph.vertices} for p in auts.elements
        ],
    }
    _emit(report, args)
    return EXIT_OK


def cmd_endos(args) -> int:
    model = _load_model(args.model)
    if isinstance(model, ModelMk):
        rep = solve_rigid(model)
    else:
        rep = solve_graph(model)
    _emit(rep.to_dict(), args)
    return EXIT_OK


def cmd_realize(args) -> int:
    group = _named_group(args.group)
    if group.order > 48:
        raise ConfigError("group order above the supported desk scale (48)")
    t0 = time.time()
    graph = frucht_graph(group)
    model = build_mng(args.n, graph)
    rep = solve_graph(model)
    witness = find_group_isomorphism(group, rep.invertible_group_table())
    if witness is None:
        raise SolveError("self-equivalence group is not isomorphic to the input group")
    report = {
        "group": args.group,
        "group_order": group.order,
        "graph_vertices": len(graph.vertices),
        "model": rep.label,
        "invertible_count": rep.invertible_count,
        "isomorphism": {str(k): v for k, v in witness.items()},
        "monoid": rep.to_dict(),
        "seconds": round(time.time() - t0, 2),
        "ok": True,
    }
    _emit(report, args)
    return EXIT_OK


def cmd_verify_all(args) -> int:
    cfg = load_config(args.config) if args.config else {}
    run = cfg.get("verify_all", cfg)
    k_list = run.get("k_list", [6, 8])
    n_list = run.get("n_list", [1])
    graphs = run.get("graphs", ["path3", "complete3"])
    k_max = run.get("k_max", 200)
    n_max = run.get("n_max", 100)
    seed = run.get("seed", 20260810)
    samples = run.get("property_samples", 200)
    with_tilde = run.get("tilde", True)
    from .graphs import asymmetric_graph_6, complete_graph, cycle_graph, path_graph

    named = {
        "path2": lambda: path_graph(2),
        "path3": lambda: path_graph(3),
        "complete3": lambda: complete_graph(3),
        "cycle4": lambda: cycle_graph(4),
        "asymmetric6": asymmetric_graph_6,
    }
    report = {"stages": {}, "ok": True}

    def stage(name, fn):
        t0 = time.time()
        try:
            result = fn()
            good = bool(result.pop("ok", True)) if isinstance(result, dict) else bool(result)
            entry = {"ok": good, "seconds": round(time.time() - t0, 2)}
            if isinstance(result, dict):
                entry.update(result)
        except (SolveError, ModelError) as exc:
            entry = {"ok": False, "error": str(exc)}
        report["stages"][name] = entry
        report["ok"] = report["ok"] and entry["ok"]
        if not args.quiet:
            print(f"[{'PASS' if entry['ok'] else 'FAIL'}] {name} "
                  f"({entry.get('seconds', '-')}s)", file=sys.stderr)

    def arith_stage():
        ok = all(arithmetic.table1_check(k).ok for k in range(6, k_max + 1, 2))
        ok = ok and all(arithmetic.table2_check(n).ok for n in range(1, n_max + 1))
        ok = ok and all(
            arithmetic.dioph_no_solution_check(n).ok and arithmetic.gcd_identity_check(n)
            for n in range(1, n_max + 1)
        )
        return {"ok": ok, "k_max": k_max, "n_max": n_max}

    stage("arithmetic", arith_stage)
    models_mk = {}
    for k in k_list:
        models_mk[k] = build_mk(k)
        stage(f"d2[mk k={k}]", lambda m=models_mk[k]: check_d_squared(m.algebra))
    models_g = {}
    for n in n_list:
        for gname in graphs:
            if gname in named:
                g = named[gname]()
            elif gname.endswith(".json"):
                g = SimpleGraph.from_dict(_read_json(gname))
            else:
                raise ConfigError(f"unknown graph name {gname!r}")
            m = build_mng(n, g)
            models_g[(n, gname)] = m
            stage(f"d2[mng n={n} {gname}]", lambda m=m: check_d_squared(m.algebra))
            stage(
                f"dim[mng n={n} {gname}]",
                lambda m=m, n=n: {
                    "ok": formal_dimension(m.algebra)
                    == mng_formal_dimension_formula(n, len(m.graph.vertices))
                },
            )
            stage(f"elliptic[n={n} {gname}]", lambda m=m: ellipticity_certificates(m).to_dict())
    for k, m in models_mk.items():
        stage(
            f"endos[mk k={k}]",
            lambda m=m: {"ok": [e.describe() for e in solve_rigid(m).elements] == ["zero", "identity"]},
        )
    for (n, gname), m in models_g.items():
        def graph_stage(m=m):
            rep = solve_graph(m)
            return {
                "ok": rep.invertible_count == automorphisms(m.graph).order,
                "invertibles": rep.invertible_count,
            }
        stage(f"endos[mng n={n} {gname}]", graph_stage)
        def chirality_stage(m=m, n=n):
            x = monomial_cocycle_representative(m)
            tm = tilde(m.algebra, x, formal_dimension(m.algebra))
            rep = tilde_monoid(tm, m, solve_graph(m))
            dims_ok = tm.formal_dim % 4 != 0
            degs_ok = all(d in (0, 1) for d in rep.degrees)
            return {"ok": dims_ok and degs_ok, "dimension": tm.formal_dim}
        stage(f"chirality[n={n} {gname}]", chirality_stage)
    _emit(report, args)
    return EXIT_OK if report["ok"] else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sullivan",
        description="exact certificates for rigid Sullivan algebras and their "
        "graph-indexed relatives",
    )
    ap.add_argument("--quiet", action="store_true", help="compact output")
    ap.add_argument("--json", action="store_true", help="JSON output (always on; kept for compatibility)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a model and write it as JSON")
    p.add_argument("--family", required=True, choices=["mk", "mng"])
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--graph", help="graph JSON file")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("analyze", help="run checks on a stored model")
    p.add_argument("--model", required=True)
    p.add_argument("--checks", default="d2,dim", help="comma list: d2,dim,elliptic,isolation")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("verify-arith", help="divisibility and diophantine sweeps")
    p.add_argument("--family", default="both", choices=["mk", "mng", "both"])
    p.add_argument("--k-max", type=int, default=200)
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify_arith)

    p = sub.add_parser("aut", help="automorphism group of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_aut)

    p = sub.add_parser("endos", help="monoid of self-map classes of a model")
    p.add_argument("--model", required=True)
    p.add_argument("--report", dest="out")
    p.set_defaults(fn=cmd_endos)

    p = sub.add_parser("realize", help="realize a finite group end to end")
    p.add_argument("--group", required=True, help=f"one of {sorted(GROUPS)} or a JSON table")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_realize)

    p = sub.add_parser("verify-all", help="aggregate verification pipeline")
    p.add_argument("--config", help="TOML or JSON run configuration")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify_all)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (SolveError, ModelError) as exc:
        print(f"mathematical check failure: {exc}", file=sys.stderr)
        return EXIT_MATH
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
