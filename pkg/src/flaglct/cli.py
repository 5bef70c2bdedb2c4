"""Command-line frontend.

Subcommands: ``info``, ``lct``, ``fibration``, ``verify``.  Nodes use the
Bourbaki numbering (1-based).  ``--json`` switches to the machine schema
documented in README.md.

Exit codes: 0 success, 1 domain error, 2 parse error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .errors import CapExceeded, DomainError, ParseError
from .flag import FlagVariety, anticanonical_coefficients, fibration, fibration_tower, schubert_cells
from .lct import (
    QDivisor,
    fiber_thresholds,
    format_value,
    global_lct,
    lct_b_stable,
    lct_lower_bound_general,
    parse_rational,
)
from .roots import build_root_system, parse_nodes, parse_type
from .weyl import DEFAULT_CAP
from . import verify as _verify

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3

NUMBERING_HELP = """\
Nodes follow Bourbaki: A_n, B_n, C_n are paths 1-...-n (B_n: node n short,
C_n: node n long); D_n has nodes n-1 and n attached to n-2; E_n is the path
1-3-4-...-n with node 2 attached to 4; F4 is 1-2=>3-4; G2 is 1<=2 (node 1 short).
"""


@dataclass
class Query:
    command: str
    type_string: str = ""
    levi: str | None = None
    omit: str | None = None
    divisor: str = ""
    alpha: int | None = None
    cap: int = DEFAULT_CAP
    allow_large: bool = False
    general: bool = False
    include: list = field(default_factory=list)
    as_json: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


def build_parser():
    p = _Parser(prog="flaglct", description=__doc__.split("\n\n")[0], epilog=NUMBERING_HELP,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("type_string", help="Cartan type, e.g. A3, F4")
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--levi", help="comma-separated Levi nodes I ('' for G/B)")
        g.add_argument("--omit", help="comma-separated omitted nodes S\\I")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (default 10^7)")
        sp.add_argument("--allow-large", action="store_true", help="permit E7/E8 full-group enumeration")
        sp.add_argument("--json", dest="as_json", action="store_true", help="machine-readable output")

    info = sub.add_parser("info", help="dimension, Picard rank, Betti numbers, fibrations",
                          epilog=NUMBERING_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    common(info)
    lct = sub.add_parser("lct", help="log canonical threshold of sum a_k D_k",
                         epilog=NUMBERING_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    common(lct)
    lct.add_argument("--div", dest="divisor", default="", help="coefficients, e.g. a1=2,a3=3/4")
    lct.add_argument("--general", action="store_true",
                     help="treat D as any effective divisor in the class (lower bound only)")
    fib = sub.add_parser("fibration", help="fibration over one node, or the whole tower",
                         epilog=NUMBERING_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    common(fib)
    fib.add_argument("--alpha", type=int, help="omitted node to fibre over (default: whole tower)")
    ver = sub.add_parser("verify", help="run the invariant suite")
    ver.add_argument("--include", action="append", default=[],
                     help="extra types to check, e.g. F4 (repeatable or comma-separated)")
    ver.add_argument("--only", action="store_true", help="check only the --include types")
    ver.add_argument("--json", dest="as_json", action="store_true")
    return p


def parse_query(argv):
    ns = build_parser().parse_args(argv)
    q = Query(command=ns.command, as_json=ns.as_json)
    for name in ("type_string", "levi", "omit", "divisor", "alpha", "cap", "allow_large", "general"):
        if hasattr(ns, name):
            setattr(q, name, getattr(ns, name))
    if ns.command == "verify":
        q.include = [t.strip() for chunk in ns.include for t in chunk.split(",") if t.strip()]
        q.only = ns.only
    return q


def variety_of(q):
    t, n = parse_type(q.type_string)
    rs = build_root_system(t, n)
    if q.omit is not None:
        return FlagVariety.from_omitted(rs, parse_nodes(q.omit, n))
    return FlagVariety(rs, parse_nodes(q.levi, n))


def parse_divisor(text, X):
    coeffs = {}
    if not text.strip():
        return QDivisor({})
    pos = 0
    for tok in text.split(","):
        key, sep, val = tok.partition("=")
        key = key.strip()
        if not sep or not key.startswith("a") or not key[1:].isdigit():
            raise ParseError("expected a<node>=<rational>", text, pos)
        node = int(key[1:])
        try:
            coeffs[node] = parse_rational(val)
        except ParseError:
            raise ParseError(f"bad coefficient for {key}", text, pos + len(tok.partition("=")[0]) + 1) from None
        if coeffs[node] < 0:
            raise DomainError(f"coefficient of D_{node} (node {node}) is negative: {coeffs[node]}")
        pos += len(tok) + 1
    return QDivisor(coeffs).validate(X)


def _variety_json(X):
    return {
        "type": X.root_system.name,
        "levi": sorted(X.levi),
        "omitted": list(X.omitted),
    }


def _fibration_json(f):
    return {
        "alpha": f.alpha,
        "base_levi": sorted(f.base.levi),
        "base_dimension": f.base.dimension,
        "fiber_type": f.fiber_type,
        "fiber_nodes": sorted(f.fiber.nodes),
        "fiber_marked_node": f.fiber_marked_node,
        "fiber_dimension": f.fiber_dimension,
    }


def cmd_info(q):
    X = variety_of(q)
    cells = schubert_cells(X, cap=q.cap, allow_large=q.allow_large)
    g = global_lct(X)
    return {
        "command": "info",
        **_variety_json(X),
        "dimension": X.dimension,
        "picard_rank": X.picard_rank,
        "betti": cells.betti,
        "num_schubert_cells": len(cells),
        "anticanonical": {str(k): v for k, v in anticanonical_coefficients(X).items()},
        "global_lct": format_value(g.value),
        "global_lct_derived_extension": g.derived_extension,
        "fibration_tower": [_fibration_json(f) for f in fibration_tower(X)],
    }


def cmd_lct(q):
    X = variety_of(q)
    D = parse_divisor(q.divisor, X)
    res = (lct_lower_bound_general if q.general else lct_b_stable)(X, D)
    return {
        "command": "lct",
        **_variety_json(X),
        "divisor": {str(k): str(v) for k, v in D.coefficients.items()},
        "value": format_value(res.value),
        "exactness": res.exactness,
        "klt": res.klt,
        "lc": res.lc,
        "fiber_thresholds": {str(k): format_value(v) for k, v in fiber_thresholds(X, D).items()},
    }


def cmd_fibration(q):
    X = variety_of(q)
    steps = [fibration(X, q.alpha)] if q.alpha is not None else fibration_tower(X)
    return {
        "command": "fibration",
        **_variety_json(X),
        "dimension": X.dimension,
        "steps": [_fibration_json(f) for f in steps],
    }


def cmd_verify(q):
    types = list(q.include) if getattr(q, "only", False) else list(_verify.DEFAULT_TYPES) + list(q.include)
    for t in types:
        parse_type(t)
    results = _verify.run(tuple(dict.fromkeys(types)))
    return {
        "command": "verify",
        "ok": all(r.status != "fail" for r in results),
        "checks": [
            {"name": r.name, "status": r.status, "seconds": round(r.seconds, 4), "detail": r.detail}
            for r in results
        ],
    }


COMMANDS = {"info": cmd_info, "lct": cmd_lct, "fibration": cmd_fibration, "verify": cmd_verify}


def render_text(report):
    cmd = report["command"]
    lines = []
    if cmd == "verify":
        for c in report["checks"]:
            tail = f"  ({c['detail']})" if c["detail"] else ""
            lines.append(f"{c['status'].upper():8s} {c['seconds']:8.3f}s  {c['name']}{tail}")
        lines.append("all checks passed" if report["ok"] else "FAILURES")
        return "\n".join(lines)
    lines.append(f"variety: {report['type']} levi={report['levi']} omitted={report['omitted']}")
    if cmd == "info":
        lines += [
            f"dimension: {report['dimension']}",
            f"picard rank: {report['picard_rank']}",
            f"betti: {' '.join(map(str, report['betti']))}",
            f"schubert cells: {report['num_schubert_cells']}",
            "anticanonical: " + " ".join(f"a{k}={v}" for k, v in report["anticanonical"].items()),
            f"global lct: {report['global_lct']}"
            + (" (derived extension)" if report["global_lct_derived_extension"] else ""),
        ]
        steps = report["fibration_tower"]
    elif cmd == "lct":
        lines += [
            "divisor: " + (" ".join(f"a{k}={v}" for k, v in report["divisor"].items()) or "0"),
            f"lct: {report['value']}",
            f"exactness: {report['exactness']}",
            f"klt: {'yes' if report['klt'] else 'no'}",
            f"lc: {'yes' if report['lc'] else 'no'}",
            "fiber thresholds: " + " ".join(f"X{k}:{v}" for k, v in report["fiber_thresholds"].items()),
        ]
        steps = []
    else:
        lines.append(f"dimension: {report['dimension']}")
        steps = report["steps"]
    for s in steps:
        lines.append(
            f"  fibre over node {s['alpha']}: {s['fiber_type']}/P{s['fiber_marked_node']} "
            f"(dim {s['fiber_dimension']}), base levi={s['base_levi']} (dim {s['base_dimension']})"
        )
    return "\n".join(lines)


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        q = parse_query(sys.argv[1:] if argv is None else argv)
        report = COMMANDS[q.command](q)
    except SystemExit as exc:  # --help
        return exc.code or 0
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CAP
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    if q.as_json:
        print(json.dumps(report, indent=2), file=out)
    else:
        print(render_text(report), file=out)
    if q.command == "verify" and not report["ok"]:
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
