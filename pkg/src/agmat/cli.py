"""Command-line interface.

Exit codes: 0 success, 1 a verification assertion failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from agmat.classify import enumerate_classes, export_csv, max_n_from_env, render_text, table_to_dict
from agmat.errors import AgmatError, InconsistencyError
from agmat.groupoid import cayley_table, make_groupoid
from agmat.matrix import mat_op, parse_matrix, serialize_matrix
from agmat.properties import DEFAULT_SEED, property_report
from agmat.theorems import DEFAULT_N_MAX, SWEEP_MIN, verify_theorems

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    n_range: tuple[int, int] | None = None
    t: int | None = None
    u: int | None = None
    shape: tuple[int, int] | None = None
    format: str = "text"
    include_degenerate: bool = False
    seed: int = DEFAULT_SEED
    max_n: int = 256
    workers: int = 1
    a: str | None = None
    b: str | None = None


def _shape(text: str) -> tuple[int, int]:
    try:
        p, q = (int(s) for s in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"shape must look like PxQ, got {text!r}") from None
    if p < 1 or q < 1:
        raise argparse.ArgumentTypeError(f"shape dimensions must be positive, got {text!r}")
    return p, q


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agmat", description="Affine groupoids x*y = (t*x + u*y) mod n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def params(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="modulus, at least 3")
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--u", type=int, required=True)

    p = sub.add_parser("check", help="report every property of one groupoid")
    params(p)
    p.add_argument("--shape", type=_shape, help="also spot-check PxQ matrices, e.g. 2x2")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("enumerate", help="classify every (t, u) pair for a modulus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--include-degenerate", action="store_true", help="include the (0, 0) pair")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=_positive, default=1)

    p = sub.add_parser("verify", help="sweep all groupoids and check the class theorems")
    p.add_argument("--n-min", type=int, default=SWEEP_MIN)
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=_positive, default=1)

    p = sub.add_parser("table", help="print the operation table")
    params(p)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("matop", help="combine two matrix files")
    params(p)
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--b", required=True, metavar="FILE")
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(list(argv))
    kw = {k: v for k, v in vars(ns).items() if k not in ("n_min", "n_max")}
    if ns.command == "verify":
        kw["n_range"] = (ns.n_min, ns.n_max)
    return RunConfig(max_n=max_n_from_env(), **kw)


def _check_n(cfg: RunConfig) -> None:
    if cfg.n is not None and cfg.n > cfg.max_n:
        raise UsageError(f"n={cfg.n} exceeds max_n={cfg.max_n} (set AGMAT_MAX_N to raise it)")


def _cmd_check(cfg: RunConfig, out: TextIO) -> int:
    g = make_groupoid(cfg.n, cfg.t, cfg.u)
    _check_n(cfg)
    report = property_report(g, shape=cfg.shape, seed=cfg.seed)
    if cfg.format == "json":
        json.dump(report.to_dict(), out, indent=2, sort_keys=False)
        out.write("\n")
    elif cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "t", "u", "property", "holds", "method", "witness"])
        for name, v in report.verdicts.items():
            wit = "" if v.witness is None else " ".join(map(str, v.witness.elements))
            w.writerow([g.n, g.t, g.u, name, "true" if v.holds else "false", v.method, wit])
    else:
        out.write(f"{g}  type={report.type_class.tag}\n")
        for name, v in report.verdicts.items():
            line = f"  {name:<26} {'holds' if v.holds else 'fails':<6} [{v.method}]"
            if v.witness is not None:
                w = v.witness
                line += f"  witness {w.law} at {w.elements}: {w.lhs} != {w.rhs}"
            out.write(line + "\n")
        out.write(f"  left identities: {report.left_identities}\n")
        if report.ag_group:
            d = report.ag_group_details
            out.write(f"  AG-group: identity {d['identity']}, inverses {d['inverses']}\n")
        if report.matrix is not None:
            held = sum(1 for v in report.matrix["laws"].values() if v["holds"])
            out.write(
                f"  matrix spot-check {report.matrix['shape']} (seed {report.matrix['seed']}): "
                f"{held} laws hold on samples, {len(report.matrix['laws']) - held} fail via lifted witnesses\n"
            )
    return EXIT_OK


def _cmd_enumerate(cfg: RunConfig, out: TextIO) -> int:
    table = enumerate_classes(
        cfg.n, include_degenerate=cfg.include_degenerate, max_n=cfg.max_n, workers=cfg.workers, seed=cfg.seed
    )
    if cfg.format == "csv":
        out.write(export_csv(table).decode("utf-8"))
    elif cfg.format == "json":
        json.dump(table_to_dict(table), out, indent=2)
        out.write("\n")
    else:
        out.write(render_text(table))
    return EXIT_OK


def _cmd_verify(cfg: RunConfig, out: TextIO) -> int:
    lo, hi = cfg.n_range
    report = verify_theorems(lo, hi, workers=cfg.workers)
    if cfg.format == "json":
        json.dump(report.to_dict(), out, indent=2)
        out.write("\n")
    else:
        out.write(report.render())
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_table(cfg: RunConfig, out: TextIO) -> int:
    g = make_groupoid(cfg.n, cfg.t, cfg.u)
    _check_n(cfg)
    rows = cayley_table(g).rows()
    if cfg.format == "json":
        json.dump({"n": g.n, "t": g.t, "u": g.u, "entries": rows}, out)
        out.write("\n")
    elif cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["*", *range(g.n)])
        for x, row in enumerate(rows):
            w.writerow([x, *row])
    else:
        width = len(str(g.n - 1))
        out.write(f"{g}\n")
        out.write(" " * width + " | " + " ".join(f"{y:>{width}}" for y in range(g.n)) + "\n")
        out.write("-" * width + "-+-" + "-" * ((width + 1) * g.n - 1) + "\n")
        for x, row in enumerate(rows):
            out.write(f"{x:>{width}} | " + " ".join(f"{v:>{width}}" for v in row) + "\n")
    return EXIT_OK


def _cmd_matop(cfg: RunConfig, out: TextIO) -> int:
    g = make_groupoid(cfg.n, cfg.t, cfg.u)
    with open(cfg.a, "rb") as fa, open(cfg.b, "rb") as fb:
        a, b = parse_matrix(fa.read()), parse_matrix(fb.read())
    out.write(serialize_matrix(mat_op(g, a, b)).decode("ascii"))
    return EXIT_OK


COMMANDS = {
    "check": _cmd_check,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "matop": _cmd_matop,
}


def run_cli(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return EXIT_USAGE if exc.code else EXIT_OK
    except AgmatError as exc:
        err.write(f"agmat: error: {exc}\n")
        return EXIT_USAGE
    buf = io.StringIO()
    try:
        code = COMMANDS[cfg.command](cfg, buf)
    except InconsistencyError as exc:
        out.write(buf.getvalue())
        err.write(f"agmat: verification failed: {exc}\n")
        return EXIT_FAIL
    except (AgmatError, UsageError, OSError, TypeError) as exc:
        err.write(f"agmat: error: {exc}\n")
        return EXIT_USAGE
    out.write(buf.getvalue())
    return code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
