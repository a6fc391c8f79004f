"""Command-line workbench.

Commands:

* ``homology`` -- homology or cohomology tables for a rack, any supported
  ring and coefficient system;
* ``ring`` -- cohomology ring structure constants over a field;
* ``verify`` -- the exhaustive identity suites, with a minimal witness and
  exit code 1 on any failure.

Exit codes: 0 success, 1 validation or identity failure (including usage
errors), 2 resource limit.

JSON reports are byte-identical across runs for identical inputs and
configuration; wall-clock timings are reported only when ``--timings`` is
given (the field is null otherwise, keeping the default deterministic).
Nothing in the default suites is sampled, so ``seed`` is always null; the
field exists so the schema is stable if sampled suites are ever added.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .complexes import (
    DEFAULT_MAX_BASIS,
    boundary_matrix,
    cochain_differential_matrix,
    module_from_xset,
)
from .errors import (
    DimensionOverflow,
    OrbitLimitExceeded,
    ParseError,
    RackhomError,
    ResourceLimit,
)
from .linalg import homology
from .racks import Rack, XSet, builtin, validate_rack, validate_xset, xset_self, xset_singleton
from .rings import ring_by_name
from .cup import ring_structure
from .verify import ALL_SUITES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_RESOURCE = 2


class _Parser(argparse.ArgumentParser):
    # usage problems are validation failures, not resource failures
    def error(self, message):
        self.exit(EXIT_FAIL, f"{self.prog}: error: {message}\n")


def parse_rack_text(text: str) -> Rack:
    """Parse the plain rack format: header ``rack n`` then n rows of n
    entries, row x column y holding x <| y.  Blank lines and ``#`` comments
    are skipped."""
    lines = text.splitlines()
    rows = []
    size = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if size is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "rack":
                raise ParseError("expected header 'rack n'", line=lineno)
            try:
                size = int(parts[1])
            except ValueError:
                raise ParseError(f"bad size {parts[1]!r}", line=lineno) from None
            if size < 1:
                raise ParseError("size must be >= 1", line=lineno)
            continue
        entries = line.split()
        if len(entries) != size:
            raise ParseError(
                f"expected {size} entries, found {len(entries)}", line=lineno
            )
        row = []
        for col, tok in enumerate(entries, start=1):
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"bad entry {tok!r}", line=lineno, column=col) from None
            if not 0 <= v < size:
                raise ParseError(
                    f"entry {v} out of range 0..{size - 1}", line=lineno, column=col
                )
            row.append(v)
        rows.append(row)
        if len(rows) == size:
            break
    if size is None:
        raise ParseError("empty rack file")
    if len(rows) != size:
        raise ParseError(f"expected {size} rows, found {len(rows)}")
    return validate_rack(rows, label="file")


def parse_rack_file(path: str) -> Rack:
    """Accept either the text format or the JSON shape
    ``{"size": n, "table": [[...]]}``."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as err:
            raise ParseError(f"bad JSON: {err.msg}", line=err.lineno, column=err.colno) from None
        table = obj.get("table")
        if not isinstance(table, list):
            raise ParseError("JSON rack needs a 'table' array")
        if "size" in obj and obj["size"] != len(table):
            raise ParseError("JSON 'size' disagrees with table height")
        return validate_rack(table, label="file")
    return parse_rack_text(text)


def parse_xset_file(path: str, rack: Rack) -> XSet:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as err:
            raise ParseError(f"bad JSON: {err.msg}", line=err.lineno, column=err.colno) from None
    act = obj.get("act")
    if not isinstance(act, list):
        raise ParseError("JSON rack-set needs an 'act' array")
    if "size" in obj and obj["size"] != len(act):
        raise ParseError("JSON 'size' disagrees with action height")
    return validate_xset(rack, act, label="file")


def _load_rack(args) -> tuple[Rack, str]:
    if args.builtin:
        return builtin(args.builtin), f"builtin:{args.builtin}"
    with open(args.rack, "rb") as fh:
        digest_src = fh.read()
    rack = parse_rack_file(args.rack)
    return rack, digest_src.decode("utf-8", errors="replace")


def _coefficients(args, rack) -> XSet | None:
    spec = getattr(args, "coefficients", None)
    if spec in (None, "trivial"):
        return None
    if spec == "self":
        return xset_self(rack)
    if spec == "singleton":
        return xset_singleton(rack)
    return parse_xset_file(spec, rack)


def _scalar_json(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


def make_report(command, options, input_text, results=None, suites=None,
                timings=None):
    return {
        "version": __version__,
        "input_sha": hashlib.sha256(input_text.encode("utf-8")).hexdigest(),
        "command": {"name": command, "options": options},
        "results": results or [],
        "suites": suites or [],
        "seed": None,
        "timings": timings,
    }


def emit(report, as_json, human_lines):
    if as_json:
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
    else:
        for line in human_lines:
            print(line)


def cmd_homology(args) -> int:
    rack, input_text = _load_rack(args)
    ring = ring_by_name(args.ring)
    xs = _coefficients(args, rack)
    results = []
    human = [f"{rack.label}: size {rack.size}, "
             + ("quandle" if rack.is_quandle() else "rack (not a quandle)")]
    timings = {} if args.timings else None

    def shown(h):
        if ring.is_field:
            return f"{ring.name}^{h.betti}"
        return h.describe()

    t0 = time.perf_counter()
    if args.cohomology:
        module = module_from_xset(xs) if xs else None
        mats = {
            p: cochain_differential_matrix(
                rack, p, ring, args.quandle, module, max_basis=args.max_basis
            )
            for p in range(args.max_degree + 1)
        }
        for n in range(1, args.max_degree + 1):
            h = homology(mats[n - 1], mats[n], ring, degree=n)
            results.append(
                {"kind": "cohomology", "degree": n, "betti": h.betti,
                 "torsion": list(h.torsion)}
            )
            human.append(f"H^{n} over {ring.name}: {shown(h)}")
    else:
        mats = {
            n: boundary_matrix(rack, n, ring, args.quandle, xs, max_basis=args.max_basis)
            for n in range(1, args.max_degree + 2)
        }
        for n in range(1, args.max_degree + 1):
            h = homology(mats[n + 1], mats[n], ring, degree=n)
            results.append(
                {"kind": "homology", "degree": n, "betti": h.betti,
                 "torsion": list(h.torsion)}
            )
            human.append(f"H_{n} over {ring.name}: {shown(h)}")
    if timings is not None:
        timings["total_s"] = round(time.perf_counter() - t0, 6)
    options = {
        "ring": args.ring,
        "max_degree": args.max_degree,
        "quandle": args.quandle,
        "cohomology": args.cohomology,
        "coefficients": args.coefficients or "trivial",
        "max_basis": args.max_basis,
    }
    report = make_report("homology", options, input_text, results=results,
                         timings=timings)
    emit(report, args.json, human)
    return EXIT_OK


def cmd_ring(args) -> int:
    rack, input_text = _load_rack(args)
    ring = ring_by_name(args.ring)
    if not ring.is_field:
        raise ParseError("ring structure needs a field: Q or Fp:p")
    t0 = time.perf_counter()
    rs = ring_structure(rack, ring, args.max_degree, args.quandle,
                        max_basis=args.max_basis)
    timings = {"total_s": round(time.perf_counter() - t0, 6)} if args.timings else None
    dims = {str(p): rs.dims[p] for p in sorted(rs.dims)}
    reps = {
        str(p): [[_scalar_json(v) for v in vec] for vec in rs.reps[p]]
        for p in sorted(rs.reps)
    }
    products = {
        f"{p},{i},{q},{j}": [_scalar_json(c) for c in coords]
        for (p, i, q, j), coords in sorted(rs.products.items())
    }
    results = [{"dims": dims, "representatives": reps, "products": products}]
    human = [f"{rack.label}: cohomology ring over {ring.name} up to degree {args.max_degree}"]
    human.append("dims: " + ", ".join(f"H^{p}={rs.dims[p]}" for p in sorted(rs.dims)))
    for (p, i, q, j), coords in sorted(rs.products.items()):
        human.append(
            f"[{p}:{i}] . [{q}:{j}] = ("
            + ", ".join(str(c) for c in coords)
            + f") in H^{p + q}"
        )
    options = {
        "ring": args.ring,
        "max_degree": args.max_degree,
        "quandle": args.quandle,
        "max_basis": args.max_basis,
    }
    report = make_report("ring", options, input_text, results=results, timings=timings)
    emit(report, args.json, human)
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    suites = run_suite(args.suite)
    timings = {"total_s": round(time.perf_counter() - t0, 6)} if args.timings else None
    report = make_report(
        "verify", {"suite": args.suite}, f"verify:{args.suite}",
        suites=[s.as_dict() for s in suites], timings=timings,
    )
    human = []
    for s in suites:
        mark = "pass" if s.passed else "FAIL"
        human.append(f"{s.name}: {mark} ({s.checks} checks)")
        for note in s.notes:
            human.append(f"  note: {note}")
        if not s.passed:
            human.append(f"  witness: {s.witness}")
    emit(report, args.json, human)
    return EXIT_OK if all(s.passed for s in suites) else EXIT_FAIL


def build_parser() -> _Parser:
    parser = _Parser(prog="rackhom", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_rack_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--builtin", metavar="KIND:ARG",
                         help="trivial:n, dihedral:n, cyclic:n, conjugation:s3")
        src.add_argument("--rack", metavar="PATH",
                         help="rack file (text or JSON)")
        p.add_argument("--quandle", action="store_true",
                       help="use the quandle (non-degenerate) complex")
        p.add_argument("--max-basis", type=int, default=DEFAULT_MAX_BASIS,
                       help="cap on basis size before exiting with code 2")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock timings (breaks byte-identical output)")

    p_hom = sub.add_parser("homology", help="homology / cohomology tables")
    add_rack_source(p_hom)
    p_hom.add_argument("--ring", default="Z", help="Z, Q, or Fp:p (default Z)")
    p_hom.add_argument("--max-degree", type=int, default=3)
    p_hom.add_argument("--cohomology", action="store_true")
    p_hom.add_argument("--coefficients", metavar="SPEC",
                       help="trivial (default), self, singleton, or a rack-set JSON path")
    p_hom.set_defaults(func=cmd_homology)

    p_ring = sub.add_parser("ring", help="cohomology ring structure constants")
    add_rack_source(p_ring)
    p_ring.add_argument("--ring", default="Q", help="Q or Fp:p (default Q)")
    p_ring.add_argument("--max-degree", type=int, default=2)
    p_ring.set_defaults(func=cmd_ring)

    p_ver = sub.add_parser("verify", help="run identity suites")
    p_ver.add_argument("--suite", default="all",
                       help="one of: " + ", ".join(ALL_SUITES) + ", or all")
    p_ver.add_argument("--json", action="store_true")
    p_ver.add_argument("--timings", action="store_true")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DimensionOverflow, ResourceLimit, OrbitLimitExceeded) as err:
        print(f"rackhom: resource limit: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except (RackhomError, OSError, KeyError, ValueError) as err:
        print(f"rackhom: error: {err}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
