"""Command-line front end: ``mforge <subcommand> ...``.

Exit status is 0 on success, 1 when a validation or relation check fails
(the report is still written) and 2 on usage, input or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import analysis, catalog, geometry, weyl
from .cartan import cartan_matrix, classify_cartan
from .core import FORMAT_VERSION, MinusculeSystem, dumps_system, system_from_json, validate_system
from .errors import InvalidSystem, MforgeError
from .ops import build_operators, check_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
THREADS_ENV = "MFORGE_THREADS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _vectors(vs) -> list[list[int]]:
    return [list(v) for v in vs]


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").strip("()[]").split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def thread_limit(environ=os.environ) -> int:
    """Value of MFORGE_THREADS (default 1); work here runs on a single thread regardless."""
    raw = environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


# -- input ------------------------------------------------------------------


def _catalog_params(args) -> dict:
    params = {}
    for key in ("n", "k", "level", "parity"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    if args.affine is not None:
        params["affine"] = args.affine
    return params


def _read_json(args, stdin):
    path = args.input
    if path in (None, "-"):
        name, text = "<stdin>", stdin.read()
    else:
        name = path
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{name}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return system_from_json(data)
    except MforgeError as exc:
        raise UsageError(f"{name}: {exc}") from None


def _raw_input(args, stdin):
    """(psi, delta) from the one selected source, before validation."""
    name = getattr(args, "catalog", None)
    if name is not None and args.input is not None:
        raise UsageError("give either an input file or --catalog, not both")
    if name is not None:
        system = catalog.build(name, **_catalog_params(args))
        return list(system.psi), system.delta
    return _read_json(args, stdin)


def _restrict(system: MinusculeSystem, spec: str) -> MinusculeSystem:
    if spec.startswith("no-"):
        return catalog.drop(system, spec[3:].split(","))
    return catalog.restrict(system, spec.split(","))


def _apply_chain(system: MinusculeSystem, args) -> MinusculeSystem:
    if getattr(args, "restrict", None):
        system = _restrict(system, args.restrict)
    normal = getattr(args, "slice_normal", None)
    level = getattr(args, "slice_level", None)
    if (normal is None) != (level is None):
        raise UsageError("--slice-normal and --slice-level go together")
    if normal is not None:
        system = catalog.slice_system(system, catalog.SliceSpec(_int_list(normal), level))
    return system


class _Invalid(Exception):
    def __init__(self, report):
        self.report = report


def _system(args, stdin) -> MinusculeSystem:
    psi, delta = _raw_input(args, stdin)
    report = validate_system(psi, delta)
    if not report.ok:
        raise _Invalid(report)
    return _apply_chain(report.system, args)


# -- subcommands ------------------------------------------------------------


def cmd_catalog_list(args, stdin):
    if args.format == "json":
        rows = [
            {"name": e.name, "summary": e.summary, "params": list(e.params), "ranges": e.ranges}
            for e in catalog.ENTRIES.values()
        ]
        return _dumps({"format": FORMAT_VERSION, "entries": rows}), EXIT_OK
    lines = []
    for e in catalog.ENTRIES.values():
        lines.append(f"{e.name}")
        lines.append(f"    {e.summary}")
        lines.append(f"    params: {', '.join(e.params)}; {e.ranges}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_build(args, stdin):
    args.catalog, args.input = args.name, None
    system = _system(args, stdin)
    text = dumps_system(system)
    if args.emit:
        Path(args.emit).write_text(text)
    return text, EXIT_OK


def cmd_validate(args, stdin):
    psi, delta = _raw_input(args, stdin)
    report = validate_system(psi, delta)
    return _dumps(report.as_json()), EXIT_OK if report.ok else EXIT_FAIL


def cmd_cartan(args, stdin):
    system = _system(args, stdin)
    A = cartan_matrix(system.delta)
    out = {"format": FORMAT_VERSION, **A.as_json(), "type": classify_cartan(A)}
    return _dumps(out), EXIT_OK


def cmd_relations(args, stdin):
    system = _system(args, stdin)
    fam = build_operators(system)
    if args.matrix:
        kind, _, label = args.matrix.partition(":")
        if kind not in ("E", "F", "H") or label not in fam.labels:
            raise UsageError(f"--matrix wants KIND:LABEL with KIND in E, F, H and LABEL in {', '.join(fam.labels)}")
        out = {
            "format": FORMAT_VERSION,
            "operator": args.matrix,
            "basis": _vectors(system.psi),
            "matrix": fam.operator(kind, label).dense(),
        }
        return _dumps(out), EXIT_OK
    report = check_all(fam)
    return _dumps(report.as_json()), EXIT_OK if report.ok else EXIT_FAIL


def cmd_weights(args, stdin):
    system = _system(args, stdin)
    rows = [{"vertex": list(v), "weight": analysis.weight(system, v).as_dict()} for v in system.psi]
    return _dumps({"format": FORMAT_VERSION, "labels": list(system.delta.labels), "weights": rows}), EXIT_OK


def cmd_extremes(args, stdin):
    system = _system(args, stdin)
    highest, lowest = analysis.extreme_vectors(system)
    out = {"format": FORMAT_VERSION, "highest": _vectors(highest), "lowest": _vectors(lowest)}
    return _dumps(out), EXIT_OK


def cmd_irreducible(args, stdin):
    system = _system(args, stdin)
    cert = analysis.irreducibility_certificate(system)
    return _dumps({"format": FORMAT_VERSION, **cert.as_json()}), EXIT_OK


def cmd_crystal(args, stdin):
    graph = analysis.crystal_graph(_system(args, stdin))
    if args.format == "dot":
        return graph.to_dot(), EXIT_OK
    return _dumps({"format": FORMAT_VERSION, **graph.as_json()}), EXIT_OK


def cmd_poset(args, stdin):
    system = _system(args, stdin)
    poset = analysis.weight_poset(system)
    out = {
        "format": FORMAT_VERSION,
        "vertices": _vectors(poset.vertices),
        "covers": _covers(poset),
        "maximum": _maybe(poset.maximum()),
        "minimum": _maybe(poset.minimum()),
    }
    status = EXIT_OK
    if args.check_lattice:
        out["lattice"] = poset.is_lattice
        out["distributive"] = poset.is_distributive()
        if not out["distributive"]:
            status = EXIT_FAIL
    return _dumps(out), status


def _maybe(v):
    return None if v is None else list(v)


def _covers(poset) -> list[list[int]]:
    """Index pairs (i, j) with vertices[i] < vertices[j] and nothing in between."""
    n = len(poset.vertices)
    out = []
    for i in range(n):
        above = [j for j in range(n) if j != i and poset.leq(i, j)]
        for j in above:
            if not any(k != j and poset.leq(k, j) for k in above):
                out.append([i, j])
    return out


def cmd_orbits(args, stdin):
    system = _system(args, stdin)
    out = {"format": FORMAT_VERSION}
    orbits = weyl.vertex_orbits(system)
    out["vertex_orbits"] = [{"size": len(o), "representative": list(o[0])} for o in orbits]
    if args.pairs:
        out["pair_orbits"] = weyl.orbits_on_pairs(system).as_json()["orbits"]
    if args.sqdist is not None:
        stats = weyl.edge_root_system(system, args.sqdist)
        out["edge_roots"] = {
            "sqdist": args.sqdist,
            **stats.as_json(),
            "closed": weyl.is_reflection_closed(stats.roots),
        }
    return _dumps(out), EXIT_OK


def cmd_delpezzo(args, stdin):
    table = geometry.cubic_incidence_table() if args.slice else geometry.incidence_table()
    return _dumps(table.as_json()), EXIT_OK


def cmd_slice(args, stdin):
    if args.slice_normal is None:
        raise UsageError("slice needs --slice-normal and --slice-level")
    return dumps_system(_system(args, stdin)), EXIT_OK


# -- parser -----------------------------------------------------------------


def _add_catalog_params(p):
    p.add_argument("--n", type=int, help="rank parameter")
    p.add_argument("--k", type=int, help="number of -2 entries for hypercube slices")
    p.add_argument("--level", type=int, help="slice level for schlafli entries")
    p.add_argument("--parity", choices=["+", "-"], help="half-cube parity")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--affine", dest="affine", action="store_true", default=None, help="keep the affine root (default)")
    g.add_argument("--finite", dest="affine", action="store_false", help="drop the affine root")


def _add_chain(p):
    p.add_argument("--restrict", help="'no-LABEL[,LABEL...]' to drop roots, or a comma list of roots to keep")
    p.add_argument("--slice-normal", help="comma-separated normal vector")
    p.add_argument("--slice-level", type=int, help="level v.normal of the slice")


def _add_input(p):
    p.add_argument("input", nargs="?", help="JSON system file, or '-' / omitted for stdin")
    p.add_argument("--catalog", help="build a catalog entry instead of reading a file")
    _add_catalog_params(p)
    _add_chain(p)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mforge", description="Build and verify minuscule systems.")
    parser.add_argument("--output", "-o", help="write the report here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("catalog", help="list or build catalog entries")
    csub = p.add_subparsers(dest="catalog_command", required=True, parser_class=_Parser)
    lp = csub.add_parser("list", help="names, parameters and expected types")
    lp.add_argument("--format", choices=["text", "json"], default="text")
    lp.set_defaults(func=cmd_catalog_list)
    bp = csub.add_parser("build", help="emit a catalog system as JSON")

    p = sub.add_parser("build", help="emit a catalog system as JSON")
    for q in (bp, p):
        q.add_argument("name", help="catalog entry")
        _add_catalog_params(q)
        _add_chain(q)
        q.add_argument("--emit", help="also write the system to this file")
        q.set_defaults(func=cmd_build)

    simple = {
        "validate": (cmd_validate, "check the minuscule axioms"),
        "cartan": (cmd_cartan, "Cartan matrix and type"),
        "relations": (cmd_relations, "check all operator relations"),
        "weights": (cmd_weights, "weight of every vertex"),
        "extremes": (cmd_extremes, "highest and lowest weight vectors"),
        "irreducible": (cmd_irreducible, "irreducibility certificate"),
        "crystal": (cmd_crystal, "crystal graph"),
        "poset": (cmd_poset, "weight poset"),
        "orbits": (cmd_orbits, "Weyl group orbits"),
        "slice": (cmd_slice, "vertices on a hyperplane v.normal = level"),
    }
    for name, (func, help_text) in simple.items():
        p = sub.add_parser(name, help=help_text)
        _add_input(p)
        p.set_defaults(func=func)
        if name == "relations":
            p.add_argument("--matrix", metavar="KIND:LABEL", help="dump one generator, e.g. E:alpha1")
        elif name == "crystal":
            p.add_argument("--format", choices=["json", "dot"], default="json")
        elif name == "poset":
            p.add_argument("--check-lattice", action="store_true")
        elif name == "orbits":
            p.add_argument("--pairs", action="store_true", help="also orbits on ordered vertex pairs")
            p.add_argument("--sqdist", type=int, help="edge-root statistics at this squared distance")

    p = sub.add_parser("delpezzo", help="intersection numbers of Del Pezzo lines")
    p.add_argument("--slice", action="store_true", help="the 27 lines of the cubic surface")
    p.set_defaults(func=cmd_delpezzo)
    return parser


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        thread_limit()
        args = make_parser().parse_args(argv)
        try:
            text, status = args.func(args, stdin)
        except (_Invalid, InvalidSystem) as exc:
            text, status = _dumps(exc.report.as_json()), EXIT_FAIL
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except MforgeError as exc:
        print(f"mforge: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_USAGE
    if args.output:
        Path(args.output).write_text(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())
