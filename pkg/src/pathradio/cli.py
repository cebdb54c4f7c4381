"""Command line front end.

    pathradio color --n 4 --m 2 --k 3
    pathradio formula --n 5 --m 3 --k 3 --variant as-printed
    pathradio verify coloring.json --decompose
    pathradio sweep --n 2..9 --m 1..3 --k hyp..hyp+2 --oracle --format csv

Exit codes: 0 success, 1 domain failure (hypothesis, invalid coloring,
mismatch), 2 usage or input schema error.  Data goes to stdout (or --out),
warnings to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import jsonschema

from .coloring import ColoringError, RadioColoring
from .construct import construct_optimal
from .formula import AS_PRINTED, CONSISTENT, HypothesisError, min_valid_k, theorem_span
from .graph import InstanceError, build_graph, build_layering
from .oracle import DEFAULT_VERTEX_CAP, CertRow, certify_theorem, mismatches
from .verify import check_coloring, decompose, lower_bound_certificate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

COLORING_SCHEMA = {
    "type": "object",
    "required": ["n", "m", "k", "colors"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 1},
        "colors": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "sequence": {"type": ["array", "null"], "items": {"type": "integer"}},
        "span": {"type": "integer"},
    },
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepSpec:
    n_range: Tuple[int, ...]
    m_range: Tuple[int, ...]
    k_mode: str  # "hyp..hyp+D", "A..B" or "a,b,c"
    variant: str = CONSISTENT
    oracle: bool = False
    output_format: str = "csv"
    output_path: Optional[str] = None
    unchecked: bool = False
    vertex_cap: int = DEFAULT_VERTEX_CAP
    node_budget: Optional[int] = None
    workers: int = 1

    def __post_init__(self):
        if not self.n_range or not self.m_range:
            raise UsageError("empty n or m range")

    def k_values(self, n: int, m: int) -> List[int]:
        return parse_k_mode(self.k_mode, min_valid_k(n, m))

    def instances(self) -> List[Tuple[int, int, int]]:
        out = []
        for n in self.n_range:
            for m in self.m_range:
                if m > n:
                    continue
                for k in self.k_values(n, m):
                    out.append((n, m, k))
        return out


def parse_range(text: str) -> Tuple[int, ...]:
    """'2..9' -> 2..9 inclusive, '3' -> (3,), '1,4,5' -> (1, 4, 5)."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = tuple(range(int(lo), int(hi) + 1))
        else:
            values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


_HYP = re.compile(r"^hyp(?:\+(\d+))?$")


def _k_endpoint(token: str, hyp: int) -> int:
    mt = _HYP.match(token.strip())
    if mt:
        return hyp + int(mt.group(1) or 0)
    return int(token)


def parse_k_mode(text: str, hyp: int) -> List[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(_k_endpoint(lo, hyp), _k_endpoint(hi, hyp) + 1))
        return [_k_endpoint(t, hyp) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad k spec {text!r}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_color(args) -> int:
    g = build_graph(args.n, args.m)
    if args.unchecked:
        print("warning: unchecked mode, span is not certified optimal", file=sys.stderr)
    col = construct_optimal(g.n, g.m, args.k, unchecked=args.unchecked)
    _emit(_dump(col.to_json()), args.out)
    return EXIT_OK


def cmd_formula(args) -> int:
    build_graph(args.n, args.m)
    res = theorem_span(args.n, args.m, args.k, variant=args.variant, unchecked=args.unchecked)
    if args.variant == AS_PRINTED:
        msg = "warning: as-printed variant keeps (m+s)^2 in the even-diameter, m-not-dividing-n case"
        if res.case.printed_erratum:
            consistent = theorem_span(args.n, args.m, args.k, unchecked=args.unchecked).value
            msg += f"; here it gives {res.value}, the consistent value is {consistent}"
        print(msg, file=sys.stderr)
    if not res.hypothesis_holds:
        print("warning: k below the threshold, value is not certified", file=sys.stderr)
    _emit(_dump(res.to_json()), args.out)
    return EXIT_OK


def _load_coloring(path: str) -> RadioColoring:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None
    try:
        jsonschema.validate(data, COLORING_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise UsageError(f"{path}: schema error at {where}: {exc.message}") from None
    if len(data["colors"]) != data["n"] + 1:
        raise UsageError(
            f"{path}: schema error at colors: expected {data['n'] + 1} entries, got {len(data['colors'])}"
        )
    return RadioColoring.from_json(data)


def cmd_verify(args) -> int:
    col = _load_coloring(args.path)
    g = build_graph(col.n, col.m)
    report = check_coloring(g, col)
    out = report.to_json()
    if not report.distinct:
        print("error: colors are not distinct", file=sys.stderr)
    if args.decompose and report.valid:
        lay = build_layering(g)
        dec = decompose(g, lay, col)
        out["decomposition"] = dec.to_json()
        out["certificate"] = lower_bound_certificate(g, lay, col)
    _emit(_dump(out), args.out)
    return EXIT_OK if report.valid else EXIT_FAIL


def render_rows(rows: Sequence[CertRow], fmt: str) -> str:
    if fmt == "json":
        return _dump([r.to_json() for r in rows])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CertRow.FIELDS)
    for r in rows:
        w.writerow(["" if v is None else v for v in (getattr(r, f) for f in CertRow.FIELDS)])
    return buf.getvalue()


def run_sweep(spec: SweepSpec) -> List[CertRow]:
    return certify_theorem(
        spec.instances(),
        variant=spec.variant,
        oracle=spec.oracle,
        unchecked=spec.unchecked,
        vertex_cap=spec.vertex_cap,
        node_budget=spec.node_budget,
        workers=spec.workers,
    )


def cmd_sweep(args) -> int:
    spec = SweepSpec(
        n_range=parse_range(args.n),
        m_range=parse_range(args.m),
        k_mode=args.k,
        variant=args.variant,
        oracle=args.oracle,
        output_format=args.format,
        output_path=args.out,
        unchecked=args.unchecked,
        vertex_cap=args.vertex_cap,
        node_budget=args.node_budget,
        workers=args.workers,
    )
    if spec.variant == AS_PRINTED:
        print("warning: comparing against the as-printed formula", file=sys.stderr)
    rows = run_sweep(spec)
    _emit(render_rows(rows, spec.output_format), spec.output_path)
    bad = mismatches(rows)
    if bad:
        print(f"{len(bad)} mismatching row(s) out of {len(rows)}", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pathradio", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def instance_args(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--unchecked", action="store_true", help="allow k below the threshold")
        sp.add_argument("--out", help="write to PATH instead of stdout")

    sp = sub.add_parser("color", help="construct an optimal radio k-coloring")
    instance_args(sp)
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("formula", help="evaluate the closed-form span")
    instance_args(sp)
    sp.add_argument("--variant", choices=[CONSISTENT, AS_PRINTED], default=CONSISTENT)
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("verify", help="check a coloring file")
    sp.add_argument("path")
    sp.add_argument("--decompose", action="store_true", help="add run decomposition and certificate")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="compare formula, construction and oracle over a grid")
    sp.add_argument("--n", required=True, help="range such as 2..9")
    sp.add_argument("--m", required=True, help="range such as 1..3")
    sp.add_argument("--k", default="hyp..hyp+2", help="hyp..hyp+D, A..B or a,b,c")
    sp.add_argument("--variant", choices=[CONSISTENT, AS_PRINTED], default=CONSISTENT)
    sp.add_argument("--oracle", action="store_true", help="run the exact search too")
    sp.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)
    sp.add_argument("--node-budget", type=int, default=None)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--unchecked", action="store_true")
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisError as exc:
        print(f"error: {exc} (use --unchecked to override)", file=sys.stderr)
        return EXIT_FAIL
    except ColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
