"""Command-line front end: ``qcl <command> --quiver '><>' --dims 1,2,2,1 --orbit all``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .classes import (
    euler_class_ext,
    k_class,
    orbit_class,
    verify_all,
    verify_interpolation,
    verify_k_lowest_degree,
)
from .lace import LaceDiagram, canonical_minimal, k_diagrams, minimal_diagrams
from .permutation import Perm
from .polynomial import Poly
from .quiver import Orbit, Quiver, codim, enumerate_orbits, validate_orbit

COMMANDS = ("orbits", "codim", "minimal", "class", "euler", "verify", "kdiagrams", "kclass", "kcheck")


class UsageError(Exception):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        # one line, no usage dump
        print(f"qcl: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qcl", description="Equivariant classes of type-A quiver orbit closures.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--quiver", required=True, help="orientation string, e.g. '><>>'")
    parser.add_argument("--dims", required=True, help="comma-separated dimension vector")
    sel = parser.add_mutually_exclusive_group()
    sel.add_argument("--orbit", help="orbit s-table as JSON, or 'all'")
    sel.add_argument("--orbit-from-perms", help="semicolon-separated permutation sequence naming a diagram")
    parser.add_argument("--format", choices=("text", "json", "latex"), default="text")
    parser.add_argument("--strict", action="store_true", help="check every diagram of each orbit")
    parser.add_argument("--trunc", type=int, help="series truncation degree for kcheck")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for verify")
    parser.add_argument("--render", choices=("top", "bottom"), help="draw diagrams as text grids")
    return parser


def parse_job(args: argparse.Namespace) -> tuple[Quiver, tuple[int, ...], list[Orbit] | None]:
    try:
        q = Quiver.parse(args.quiver)
    except ValueError as exc:
        raise UsageError("--quiver", str(exc)) from None
    try:
        dims = q.check_dims(int(t) for t in args.dims.split(",")) if args.dims.strip() else q.check_dims(())
    except ValueError as exc:
        raise UsageError("--dims", str(exc)) from None

    if args.orbit_from_perms is not None:
        try:
            perms = [Perm.parse(t) for t in args.orbit_from_perms.split(";")] if q.n else []
            d = LaceDiagram.from_perms(q, dims, perms)
        except ValueError as exc:
            raise UsageError("--orbit-from-perms", str(exc)) from None
        return q, dims, [d.orbit()]
    if args.orbit is None:
        return q, dims, None
    if args.orbit.strip() == "all":
        return q, dims, enumerate_orbits(q, dims)
    try:
        doc = json.loads(args.orbit)
        if "quiver" in doc and doc["quiver"] != str(q):
            raise ValueError(f"quiver {doc['quiver']!r} disagrees with --quiver")
        if "dims" in doc and tuple(doc["dims"]) != dims:
            raise ValueError(f"dims {doc['dims']} disagree with --dims")
        mu = Orbit.from_json(doc, n=q.n)
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise UsageError("--orbit", str(exc)) from None
    if not validate_orbit(q, dims, mu):
        raise UsageError("--orbit", f"strands {mu} do not fill dimension vector {list(dims)}")
    return q, dims, [mu]


def _poly_out(f: Poly, fmt: str):
    if fmt == "json":
        return f.to_json()
    if fmt == "latex":
        return f.to_latex()
    return f.to_text()


def _diagram_lines(d: LaceDiagram, render: str | None) -> list[str]:
    lines = [f"{d.perm_string()}  length={d.length}"]
    if render:
        lines += ["  " + row for row in d.render(render).splitlines()]
    return lines


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        q, dims, orbits = parse_job(args)
        if args.command != "orbits" and orbits is None:
            raise UsageError("--orbit", "an orbit selector is required (JSON, 'all', or --orbit-from-perms)")
        if args.jobs < 1:
            raise UsageError("--jobs", "must be at least 1")
        if args.trunc is not None and args.trunc < 0:
            raise UsageError("--trunc", "must be non-negative")
    except UsageError as exc:
        print(f"qcl: error: {exc}", file=sys.stderr)
        return 2

    status, payload, text = _dispatch(args, q, dims, orbits)
    if args.format == "json":
        doc = {"command": args.command, "quiver": str(q), "dims": list(dims), "results": payload}
        if args.command in ("verify", "kcheck"):
            doc["pass"] = status == 0
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text) + "\n")
    return status


def _dispatch(args, q: Quiver, dims: tuple[int, ...], orbits: list[Orbit] | None):
    fmt = args.format
    cmd = args.command
    payload: list = []
    text: list[str] = []
    status = 0
    single = orbits is not None and len(orbits) == 1 and args.orbit != "all"

    def label(mu: Orbit) -> str:
        return f"{mu}  codim={codim(q, mu)}"

    if cmd == "orbits":
        for mu in enumerate_orbits(q, dims):
            payload.append({"s": mu.to_json()["s"], "codim": codim(q, mu)})
            text.append(label(mu))
        return status, payload, text

    if cmd == "verify" and not args.strict and len(orbits) > 1:
        reports = verify_all(q, dims, jobs=args.jobs)
        for rep in reports:
            payload.append(rep)
            mark = "PASS" if rep["pass"] else "FAIL"
            text.append(f"{mark} {Orbit.from_json({'s': rep['orbit']}, n=q.n)}  codim={rep['codim']}  checks={len(rep['checks'])}")
            status = status or (0 if rep["pass"] else 1)
        return status, payload, text

    for mu in orbits:
        entry: dict = {"orbit": mu.to_json()["s"], "codim": codim(q, mu)}
        if cmd == "codim":
            text.append(str(entry["codim"]) if single else label(mu))
        elif cmd == "minimal":
            ds = minimal_diagrams(q, dims, mu)
            entry["diagrams"] = [d.to_json()["perms"] for d in ds]
            if not single:
                text.append(label(mu))
            for d in ds:
                text += [("" if single else "  ") + line for line in _diagram_lines(d, args.render)]
        elif cmd == "class":
            f = orbit_class(q, dims, mu).poly
            entry["class"] = _poly_out(f, fmt)
            text.append(_poly_out(f, fmt) if single else f"{label(mu)}\n  {_poly_out(f, fmt)}")
        elif cmd == "euler":
            d = canonical_minimal(q, dims, mu)
            f = euler_class_ext(q, mu, d)
            entry["diagram"] = d.to_json()["perms"]
            entry["strands"] = [[s.start, s.end, s.dots[0]] for s in d.strands]
            entry["euler"] = _poly_out(f, fmt)
            text.append(_poly_out(f, fmt) if single else f"{label(mu)}\n  {_poly_out(f, fmt)}")
        elif cmd == "verify":
            rep = verify_interpolation(q, dims, mu, strict=args.strict)
            entry = rep.to_json()
            mark = "PASS" if rep.passed else "FAIL"
            text.append(f"{mark} {label(mu)}  checks={len(rep.checks)}")
            for c in rep.failures():
                text.append(f"  {c.expected} at {c.eta} via {c.diagram}: got {c.actual}")
            status = status or (0 if rep.passed else 1)
        elif cmd == "kdiagrams":
            c = codim(q, mu)
            ds = k_diagrams(q, dims, mu)
            entry["diagrams"] = [
                {"perms": d.to_json()["perms"], "length": d.length, "sign": 1 if (d.length - c) % 2 == 0 else -1} for d in ds
            ]
            if not single:
                text.append(label(mu))
            for d in ds:
                sign = "+" if (d.length - c) % 2 == 0 else "-"
                text += [("" if single else "  ") + sign + line for line in _diagram_lines(d, args.render)]
        elif cmd == "kclass":
            f = k_class(q, dims, mu)
            entry["kclass"] = _poly_out(f, fmt)
            text.append(_poly_out(f, fmt) if single else f"{label(mu)}\n  {_poly_out(f, fmt)}")
        elif cmd == "kcheck":
            ok = verify_k_lowest_degree(q, dims, mu, trunc=args.trunc)
            entry["pass"] = ok
            text.append(f"{'PASS' if ok else 'FAIL'} {label(mu)}")
            status = status or (0 if ok else 1)
        payload.append(entry)
    return status, payload, text


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
