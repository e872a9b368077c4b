"""Command-line interface.

Exit codes: 0 = success (or "yes" for yes/no commands), 1 = the math says
no (e.g. `flat` on a non-flat input), 2 = unusable input or wrong usage.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import catalog, geodesics, inputdoc, report, sweeps, theorems
from .classc import theorem2_check
from .errors import (
    FlatLieError,
    HypothesisNotMetError,
    NotClassCError,
    NotLorentzianError,
    ParseError,
)
from .metric import MetricLieAlgebra, killing_subalgebra


def _read_input(path: str) -> MetricLieAlgebra:
    if path == "-":
        return inputdoc.loads(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return inputdoc.load(fh)


def _add_input_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", default="-", metavar="PATH|-",
                   help="input document path, or - for stdin (default)")
    p.add_argument("--json", action="store_true", help="emit machine-readable JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flatlie",
        description="Exact analysis of flat left-invariant pseudo-Riemannian metrics on Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate an input document")
    _add_input_opts(p)

    p = sub.add_parser("analyze", help="full analysis report")
    _add_input_opts(p)
    p.add_argument("--sweep", type=int, metavar="N",
                   help="additionally run randomized property sweeps over N instances")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")

    p = sub.add_parser("flat", help="flatness verdict (exit 1 if not flat)")
    _add_input_opts(p)

    p = sub.add_parser("killing", help="basis of the Killing subalgebra")
    _add_input_opts(p)

    p = sub.add_parser("theorem1", help="timelike-Killing split check (Lorentzian inputs only)")
    _add_input_opts(p)

    p = sub.add_parser("theorem2", help="class-C degenerate-restriction flatness check")
    _add_input_opts(p)

    p = sub.add_parser("companion", help="same-connection Riemannian metric, when one exists")
    _add_input_opts(p)

    p = sub.add_parser("geodesic", help="integrate the velocity geodesic equation")
    _add_input_opts(p)
    p.add_argument("--v0", required=True, metavar="CSV",
                   help="initial velocity, comma-separated (rationals or decimals)")
    p.add_argument("--t-max", required=True, type=float, metavar="F")
    p.add_argument("--rel-tol", type=float, default=1e-9, metavar="F")
    p.add_argument("--csv", metavar="PATH", help="export trajectory samples as CSV")

    p = sub.add_parser("catalog", help="list or emit built-in examples")
    p.add_argument("action", nargs="?", default="list", choices=["list", "show"])
    p.add_argument("name", nargs="?", help="entry name (for show)")
    p.add_argument("--json", action="store_true")

    return parser


def _parse_v0(text: str, dim: int) -> list[float]:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != dim:
        raise ParseError(f"--v0 needs {dim} components, got {len(parts)}")
    out = []
    for s in parts:
        try:
            out.append(float(Fraction(s)) if "/" in s else float(s))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"--v0: invalid number {s!r}") from None
    return out


def cmd_validate(args) -> int:
    m = _read_input(args.input)
    if args.json:
        print(json.dumps({"ok": True, "dim": m.dim, "signature": report.signature_section(m)}, indent=2))
    else:
        sig = m.signature
        print(f"ok: dim {m.dim}, signature ({sig.n_plus}+, {sig.n_minus}-, {sig.n_zero}0)")
    return 0


def cmd_analyze(args) -> int:
    m = _read_input(args.input)
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    rep = report.analysis_report(m)
    timings["analysis"] = time.perf_counter() - t0
    sweep_failures = 0
    if args.sweep:
        t0 = time.perf_counter()
        results = sweeps.run_all(args.seed, args.sweep)
        timings["sweeps"] = time.perf_counter() - t0
        rep["sweeps"] = [
            {"name": r.name, "count": r.count, "ok": r.ok, "notes": r.notes,
             "failures": list(r.failures)}
            for r in results
        ]
        sweep_failures = sum(len(r.failures) for r in results)
    if args.json:
        sys.stdout.write(report.to_json(rep))
    else:
        sys.stdout.write(report.render_text(rep, timings))
        if args.sweep:
            for r in rep["sweeps"]:
                status = "ok" if r["ok"] else f"{len(r['failures'])} FAILURES"
                print(f"sweep {r['name']} ({r['count']} instances): {status}"
                      + (f" [{r['notes']}]" if r["notes"] else ""))
    return 1 if sweep_failures else 0


def cmd_flat(args) -> int:
    m = _read_input(args.input)
    section = report.flatness_section(m)
    if args.json:
        print(json.dumps(section, indent=2))
    elif section["flat"]:
        print("flat")
    else:
        w = section["witness"]
        print(f"not flat: K(e_{w['i']}, e_{w['j']}) = {w['curvature']}")
    return 0 if section["flat"] else 1


def cmd_killing(args) -> int:
    m = _read_input(args.input)
    section = report.subspace_json(killing_subalgebra(m))
    if args.json:
        print(json.dumps(section, indent=2))
    else:
        print(f"killing subalgebra dim {section['dim']}")
        for row in section["basis"]:
            print("  " + " ".join(row))
    return 0


def cmd_theorem1(args) -> int:
    m = _read_input(args.input)
    section = report.theorem1_section(m)
    if section is None:
        raise NotLorentzianError(f"theorem1 requires a Lorentzian input (signature {tuple(m.signature)})")
    if args.json:
        print(json.dumps(section, indent=2))
    else:
        print(
            f"direct side: {section['direct_side']}, structural side: {section['structural_side']}, "
            f"equivalent: {section['equivalent']}"
        )
    return 0 if section["direct_side"] else 1


def cmd_theorem2(args) -> int:
    m = _read_input(args.input)
    r = theorem2_check(m)
    section = {
        "degenerate_restriction": r.degenerate_restriction,
        "radical_dim": r.radical_dim,
        "flat": r.flat,
        "equivalent": r.equivalent,
    }
    if args.json:
        print(json.dumps(section, indent=2))
    else:
        print(
            ("degenerate restriction -> flat" if r.flat else "nondegenerate restriction -> not flat")
            + f" (equivalence verified: {r.equivalent})"
        )
    return 0 if r.flat else 1


def cmd_companion(args) -> int:
    m = _read_input(args.input)
    if not m.is_lorentzian:
        raise NotLorentzianError(f"companion requires a Lorentzian input (signature {tuple(m.signature)})")
    try:
        companion = theorems.riemannian_companion(m)
    except HypothesisNotMetError as exc:
        print(f"no companion: {exc}", file=sys.stderr)
        return 1
    section = {
        "gram": report.mat_json(companion.gram),
        "same_connection": theorems.same_connection(m, companion),
    }
    if args.json:
        print(json.dumps(section, indent=2))
    else:
        print("riemannian companion gram rows:")
        for row in section["gram"]:
            print("  " + " ".join(row))
    return 0


def cmd_geodesic(args) -> int:
    m = _read_input(args.input)
    v0 = _parse_v0(args.v0, m.dim)
    traj = geodesics.integrate(m, v0, args.t_max, args.rel_tol)
    if args.csv:
        geodesics.write_csv(traj, args.csv)
    final = traj.final
    section = {
        "outcome": traj.outcome,
        "t_final": final.t,
        "steps": len(traj.samples) - 1,
        "blowup_time": traj.blowup_time,
        "final_norm": final.norm,
        "energy_drift": traj.energy_drift(),
    }
    if args.json:
        print(json.dumps(section, indent=2))
    else:
        print(f"outcome: {traj.outcome} at t = {final.t:.6g} "
              f"(|v| = {final.norm:.6g}, energy drift = {section['energy_drift']:.3g})")
        if traj.blowup_time is not None:
            print(f"estimated blow-up time: {traj.blowup_time:.6g}")
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.names():
            entry = catalog.get(name)
            print(f"{name}: {entry.description}" if not args.json else name)
        return 0
    if not args.name:
        raise ParseError("catalog show requires an entry name")
    entry = catalog.get(args.name)
    print(json.dumps(entry.document, indent=2))
    return 0


_HANDLERS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "flat": cmd_flat,
    "killing": cmd_killing,
    "theorem1": cmd_theorem1,
    "theorem2": cmd_theorem2,
    "companion": cmd_companion,
    "geodesic": cmd_geodesic,
    "catalog": cmd_catalog,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (NotLorentzianError, NotClassCError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FlatLieError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
