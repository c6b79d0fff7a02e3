"""Command-line front end.

Subcommands: kupisch (closed-form Nakayama computations), sweep (theorem
checks with oracle cross-validation, JSON-lines output), quiver (oracle
computations on a TOML presentation or a catalog entry), catalog (list,
verify, dump).  Exit codes: 0 all pass, 1 a check failed, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from selfext import catalog as cat
from selfext import io as sio
from selfext import lab
from selfext import nakayama as nk
from selfext import oracle as orc
from selfext.nakayama import INFINITE, SerialModule, Shape


class InputError(ValueError):
    pass


def _parse_series(args) -> nk.NakayamaAlgebra:
    if not args.series:
        raise InputError("--series is required")
    try:
        series = [int(c) for c in args.series.split(",")]
    except ValueError:
        raise InputError(f"malformed series {args.series!r}")
    shape = Shape.CYCLIC if args.shape == "cyclic" else Shape.LINEAR
    return nk.validate_kupisch(series, shape)


def _parse_module(a: nk.NakayamaAlgebra, text: str) -> SerialModule:
    try:
        i, k = (int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"module must be given as i,k, got {text!r}")
    m = SerialModule(i, k)
    nk.check_module(a, m)
    return m


def _fmt_pd(v) -> str:
    return "infinite" if v == INFINITE else str(int(v))


def cmd_kupisch(args) -> int:
    a = _parse_series(args)
    sub = args.subcommand
    if sub == "validate":
        print(f"valid {a.key()} dim={a.dimension()} loewy={a.loewy_length()}")
        return 0
    m = _parse_module(a, args.module)
    if sub == "hom":
        n = _parse_module(a, args.target)
        print(nk.hom_dim(a, m, n))
    elif sub == "ext":
        n = _parse_module(a, args.target or args.module)
        print(nk.ext_dim(a, m, n, args.i))
    elif sub == "rigid":
        print("rigid" if nk.is_rigid(a, m) else "non-rigid")
    elif sub == "pd":
        print(_fmt_pd(nk.proj_dim(a, m)))
    elif sub == "tate":
        print(nk.tate_ext_dim(a, m, args.i))
    elif sub == "report":
        rep = nk.report(a, m, depth=args.depth)
        out = {
            "algebra": a.key(),
            "module": [m.i, m.k],
            "proj_dim": _fmt_pd(rep.proj_dim),
            "inj_dim": _fmt_pd(rep.inj_dim),
            "rigid": rep.rigid,
            "ext_self_dims": rep.ext_dims,
        }
        print(json.dumps(out))
    return 0


def _out_path(path: str) -> str:
    base = os.environ.get("SELFEXT_OUT_DIR", "")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def cmd_sweep(args) -> int:
    shapes = tuple(
        Shape.CYCLIC if s == "cyclic" else Shape.LINEAR
        for s in args.shapes.split(",")
    )
    config = lab.SweepConfig(
        n_max=args.n_max,
        c_max=args.c_max,
        shapes=shapes,
        ext_depth=args.depth,
        field_chars=tuple(int(p) for p in args.p.split(",")),
        seed=args.seed,
    )
    checks = args.checks.split(",") if args.checks else None
    if checks:
        unknown = [c for c in checks if c != "oracle" and c not in lab.CHECKS]
        if unknown:
            raise InputError(f"unknown checks: {unknown}; known: "
                             f"{sorted(lab.CHECKS) + ['oracle']}")
    rows = []
    failed = False
    for verdict in lab.run_sweep(config, checks):
        d = verdict.to_dict()
        d["seed"] = args.seed
        print(json.dumps(d))
        rows.append((verdict.instance, verdict.check, verdict.status))
        failed = failed or verdict.failed
    if args.csv:
        path = _out_path(args.csv)
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["instance", "check", "status"])
            writer.writerows(rows)
        print(f"# summary written to {path}", file=sys.stderr)
    return 1 if failed else 0


def _load_entry(args) -> cat.CatalogEntry:
    if getattr(args, "catalog", None):
        return cat.get_entry(args.catalog)
    if not getattr(args, "file", None):
        raise InputError("one of --file or --catalog is required")
    pres, name = sio.load_presentation_file(args.file)
    if name:
        entries = cat.catalog()
        if name in entries and entries[name].presentation == pres:
            return entries[name]
    return cat.CatalogEntry(
        name=name or os.path.basename(args.file),
        description="presentation loaded from file",
        family="custom",
        presentation=pres,
    )


def _resolve_module(entry: cat.CatalogEntry, expr: str) -> orc.OracleModule:
    try:
        return entry.module(expr)
    except cat.UnknownModuleName as exc:
        raise InputError(str(exc))


def cmd_quiver(args) -> int:
    entry = _load_entry(args)
    table = entry.table()
    sub = args.subcommand
    if sub == "build":
        verts = list(entry.presentation.vertices)
        cartan = table.cartan_matrix()
        print(f"name: {entry.name}")
        print(f"char: {entry.p}")
        print(f"dimension: {table.dimension}")
        print("cartan:")
        for i in verts:
            print("  " + " ".join(str(cartan[(i, j)]) for j in verts))
        print(f"weakly_symmetric: {orc.weakly_symmetric_check(table)}")
        return 0
    if sub == "ext":
        if args.simple is not None:
            m = table.simple_module(args.simple)
        else:
            m = _resolve_module(entry, args.module)
        target = args.target
        if target.isdigit() or (target.startswith("-") and target[1:].isdigit()):
            n = table.simple_module(int(target))
        else:
            n = _resolve_module(entry, target)
        print(orc.ext_dim(m, n, args.i))
        return 0
    if sub == "period":
        m = _resolve_module(entry, args.module)
        period = orc.omega_period(m, args.bound, seed=args.seed)
        if period is None:
            print(f"period not certified <= {args.bound} (seed={args.seed})")
            return 1
        print(period)
        return 0
    if sub == "resolve":
        m = _resolve_module(entry, args.module)
        res = orc.Resolution(m)
        verts = list(entry.presentation.vertices)
        print("step\t" + "\t".join(f"P{v}" for v in verts))
        for i in range(args.depth + 1):
            mult = res.cover_multiplicities(i)
            print(f"{i}\t" + "\t".join(str(mult[v]) for v in verts))
            if res.syzygy(i + 1).is_zero():
                break
        return 0
    raise InputError(f"unknown quiver subcommand {sub!r}")


def cmd_catalog(args) -> int:
    if args.subcommand == "list":
        entries = cat.catalog()
        width = max(len(n) for n in entries)
        for name in sorted(entries):
            print(f"{name:{width}s}  {entries[name].description}")
        return 0
    entry = cat.get_entry(args.name)
    if args.subcommand == "dump":
        text = sio.dump_presentation(entry.presentation, entry.name)
        if args.out:
            path = _out_path(args.out)
            with open(path, "w") as fh:
                fh.write(text)
            print(f"# written to {path}", file=sys.stderr)
        else:
            print(text)
        return 0
    if args.subcommand == "verify":
        verdicts = entry.verify(depth=args.depth, seed=args.seed)
        failed = False
        for v in verdicts:
            if args.json:
                d = v.to_dict()
                d["seed"] = args.seed
                print(json.dumps(d))
            else:
                line = f"{v.check:32s} {v.status}"
                if v.failed and v.witness:
                    line += f"  {v.witness}"
                print(line)
            failed = failed or v.failed
        return 1 if failed else 0
    raise InputError(f"unknown catalog subcommand {args.subcommand!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="selfext",
        description="homological workbench for Nakayama and bound quiver algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    kup = sub.add_parser("kupisch", help="closed-form Nakayama computations")
    kup.add_argument("subcommand",
                     choices=["validate", "hom", "ext", "rigid", "pd", "report", "tate"])
    kup.add_argument("--series", required=True, help="Kupisch series, e.g. 4,4")
    kup.add_argument("--shape", choices=["cyclic", "linear"], default="cyclic")
    kup.add_argument("--module", help="serial module as i,k")
    kup.add_argument("--target", help="target serial module as i,k")
    kup.add_argument("--i", type=int, default=1, help="Ext degree")
    kup.add_argument("--depth", type=int, default=20)
    kup.set_defaults(func=cmd_kupisch)

    sweep = sub.add_parser("sweep", help="theorem checks over all Kupisch series in range")
    sweep.add_argument("--n-max", type=int, required=True)
    sweep.add_argument("--c-max", type=int, required=True)
    sweep.add_argument("--shapes", default="cyclic,linear")
    sweep.add_argument("--checks", default=None,
                       help="comma list from rigidity,1.5,1.7,1.8,duality,oracle")
    sweep.add_argument("--p", default="2,3", help="field characteristics for the oracle")
    sweep.add_argument("--depth", type=int, default=20)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--csv", default=None, help="write a summary CSV here")
    sweep.set_defaults(func=cmd_sweep)

    quiver = sub.add_parser("quiver", help="oracle computations on a presentation")
    quiver.add_argument("subcommand", choices=["build", "ext", "period", "resolve"])
    quiver.add_argument("--file", help="presentation TOML file")
    quiver.add_argument("--catalog", help="catalog entry name instead of a file")
    quiver.add_argument("--module", help="module expression (S0, P1, arrow:a, path:a.b, W, ...)")
    quiver.add_argument("--simple", type=int, help="source simple module by vertex")
    quiver.add_argument("--target", help="target module expression or vertex")
    quiver.add_argument("--i", type=int, default=1)
    quiver.add_argument("--bound", type=int, default=8)
    quiver.add_argument("--depth", type=int, default=12)
    quiver.add_argument("--seed", type=int, default=0)
    quiver.set_defaults(func=cmd_quiver)

    catp = sub.add_parser("catalog", help="named algebras and verification suites")
    catp.add_argument("subcommand", choices=["list", "verify", "dump"])
    catp.add_argument("name", nargs="?", help="catalog entry name")
    catp.add_argument("--depth", type=int, default=12)
    catp.add_argument("--seed", type=int, default=0)
    catp.add_argument("--json", action="store_true")
    catp.add_argument("--out", default=None)
    catp.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, nk.KupischError, nk.NotSelfInjective, nk.ProjectiveInput,
            orc.OracleError, sio.SchemaError, cat.UnknownCatalogEntry,
            FileNotFoundError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
