"""Command line interface.

Subcommands: ``entropy``, ``closed-form``, ``compare``, ``phi-table``,
``special`` and ``dual``. Every command writes CSV or JSON to stdout or to
``--output``. Exit status: 0 success, 1 domain error, 2 bad flags, 3 a
failed ``compare``.

Set ``ORTHO_ENTROPY_THREADS`` to process several degrees concurrently;
output order is always by ``n`` then index.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .closedform import closed_form, compare, extremal_summary
from .entropy import entropy_table
from .families import FAMILIES, FamilySpec
from .numthy import PhiFunction, phi_at_integer, verify_main_lemma
from .specfun import RFunctionEvaluator, RMode
from .spectrum import decompose

logger = logging.getLogger("orthoentropy")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_COMPARE_FAILED = 3

COMMANDS = ("entropy", "closed-form", "compare", "phi-table", "special", "dual")

# CSV columns per command
COLUMNS = {
    "entropy": ["n", "j", "lambda", "christoffel", "S_nj", "method"],
    "entropy+dual": ["n", "j", "lambda", "christoffel", "S_nj", "S_n_dual", "method"],
    "closed-form": ["kind", "n", "j", "d", "value", "is_max", "is_min"],
    "compare": ["n", "j", "spectral", "closed_form", "diff"],
    "phi-table": ["n", "j", "k", "phi"],
    "special": ["x", "digamma_form", "series_form", "difference"],
    "dual": ["n", "i", "S_n_i"],
}


@dataclass
class RunConfig:
    command: str
    family: Optional[FamilySpec] = None
    n_list: list = field(default_factory=list)
    output_format: str = "csv"
    output_path: Optional[str] = None
    threshold: float = 1e-9
    include_dual: bool = False
    kind: int = 1
    j_list: Optional[list] = None
    grid: tuple = (0.0, 0.5, 0.01)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.command != "special" and not self.n_list:
            raise ValueError("at least one n is required")
        if not self.threshold > 0:
            raise ValueError("threshold must be positive")


def parse_int_list(text: str) -> list[int]:
    """``"150,151,152"`` or ``"1-10"`` or a mix of both."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    if any(v < 1 for v in out):
        raise argparse.ArgumentTypeError("values must be positive integers")
    return out


def parse_grid(text: str) -> tuple[float, float, float]:
    try:
        start, stop, step = (float(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be start:stop:step, got {text!r}") from None
    if step <= 0 or stop < start:
        raise argparse.ArgumentTypeError("grid needs step > 0 and stop >= start")
    return start, stop, step


def grid_points(grid) -> list[float]:
    start, stop, step = grid
    count = int(round((stop - start) / step)) + 1
    pts = [start + i * step for i in range(count)]
    return [p for p in pts if p <= stop + 1e-12 * max(1.0, abs(stop))]


def _int_list_arg(text):
    try:
        return parse_int_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _threads() -> int:
    raw = os.environ.get("ORTHO_ENTROPY_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(func, items):
    threads = _threads()
    if threads == 1 or len(items) == 1:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))


def _num(x):
    return repr(float(x))


def _render_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(
            {k: (_num(v) if isinstance(v, float) else v) for k, v in row.items() if k in columns}
        )
    return buf.getvalue()


def _entropy_rows(cfg: RunConfig):
    def one(n):
        logger.info("entropy: %s n=%d", cfg.family.label(), n)
        table = entropy_table(decompose(cfg.family, n), include_dual=cfg.include_dual)
        rows = list(table.rows())
        if cfg.include_dual:
            for row, dual in zip(rows, table.dual_values):
                row["S_n_dual"] = float(dual)
        return rows

    return [row for rows in _map_ordered(one, cfg.n_list) for row in rows]


def _dual_rows(cfg: RunConfig):
    def one(n):
        logger.info("dual: %s n=%d", cfg.family.label(), n)
        table = entropy_table(decompose(cfg.family, n), include_dual=True)
        return [{"n": n, "i": i + 1, "S_n_i": float(v)} for i, v in enumerate(table.dual_values)]

    return [row for rows in _map_ordered(one, cfg.n_list) for row in rows]


def _closed_form_payload(cfg: RunConfig):
    rows, summaries = [], []
    for n in cfg.n_list:
        summary = extremal_summary(cfg.kind, n)
        summaries.append(summary.to_dict())
        for j in range(1, n + 1):
            res = closed_form(cfg.kind, n, j)
            rows.append(
                {
                    "kind": cfg.kind,
                    "n": n,
                    "j": j,
                    "d": res.d,
                    "value": res.value,
                    "is_max": int(j in summary.argmax_set),
                    "is_min": int(j in summary.argmin_set),
                }
            )
    return rows, summaries


def _special_rows(cfg: RunConfig):
    digamma_eval = RFunctionEvaluator(mode=RMode.DIGAMMA_FORM)
    rows = []
    for x in grid_points(cfg.grid):
        a = digamma_eval.digamma_form(x)
        b = digamma_eval.series_form(x)
        rows.append({"x": x, "digamma_form": a, "series_form": b, "difference": a - b})
    return rows


def _phi_payload(cfg: RunConfig):
    tables, reports, rows = [], [], []
    for n in cfg.n_list:
        js = cfg.j_list or list(range(1, n + 1))
        for j in js:
            f = PhiFunction(n, j)
            values = [phi_at_integer(f, k) for k in range(0, n + 1)]
            tables.append({"n": n, "j": j, "values": values})
            reports.append(verify_main_lemma(n, j).to_dict())
            rows.extend({"n": n, "j": j, "k": k, "phi": v} for k, v in enumerate(values))
    return tables, reports, rows


def run(cfg: RunConfig, stream=None) -> int:
    """Execute one command; returns the process exit status."""
    out_format = cfg.output_format
    status = EXIT_OK
    payload: dict = {"command": cfg.command}

    if cfg.command == "entropy":
        rows = _entropy_rows(cfg)
        columns = COLUMNS["entropy+dual" if cfg.include_dual else "entropy"]
        payload.update(family=cfg.family.kind, parameters=cfg.family.param_dict, rows=rows)
    elif cfg.command == "dual":
        rows = _dual_rows(cfg)
        columns = COLUMNS["dual"]
        payload.update(family=cfg.family.kind, parameters=cfg.family.param_dict, rows=rows)
    elif cfg.command == "closed-form":
        rows, summaries = _closed_form_payload(cfg)
        columns = COLUMNS["closed-form"]
        payload.update(kind=cfg.kind, rows=rows, extremal=summaries)
    elif cfg.command == "compare":
        reports = _map_ordered(lambda n: compare(cfg.family, n, cfg.threshold), cfg.n_list)
        for rep in reports:
            logger.info("compare: %s n=%d max_abs_diff=%.3e", cfg.family.kind, rep.n, rep.max_abs_diff)
        if not all(rep.passed for rep in reports):
            status = EXIT_COMPARE_FAILED
        rows = [
            {"n": rep.n, "j": j + 1, "spectral": float(s), "closed_form": float(c), "diff": float(dv)}
            for rep in reports
            for j, (s, c, dv) in enumerate(zip(rep.spectral, rep.closed, rep.per_j_diffs))
        ]
        columns = COLUMNS["compare"]
        payload["reports"] = [rep.to_dict() for rep in reports]
        payload["pass"] = status == EXIT_OK
    elif cfg.command == "phi-table":
        tables, reports, rows = _phi_payload(cfg)
        columns = COLUMNS["phi-table"]
        payload.update(tables=tables, reports=reports)
    else:
        rows = _special_rows(cfg)
        columns = COLUMNS["special"]
        payload.update(rows=rows)

    if out_format == "json":
        text = json.dumps(payload, indent=1) + "\n"
    else:
        text = _render_csv(columns, rows)

    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        (stream or sys.stdout).write(text)
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv", dest="output_format")
    common.add_argument("--output", "-o", default=None, help="output file (default: stdout)")
    common.add_argument("-v", "--verbose", action="store_true", help="log one line per degree")

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family", choices=FAMILIES, default="chebyshev1")
    fam.add_argument("--alpha", type=float, help="jacobi alpha (reference sets: 1.2)")
    fam.add_argument("--beta", type=float, help="jacobi beta (8.9 or 3.4) or meixner beta (3.4 or 8.9)")
    fam.add_argument("--theta", type=float, help="pollaczek theta (reference sets: 1.2)")
    fam.add_argument("--a", type=float, help="pollaczek a (reference sets: 8.9 or 3.4)")
    fam.add_argument("--c", type=float, help="meixner c (reference sets: 0.2 or 0.8)")

    n_arg = argparse.ArgumentParser(add_help=False)
    n_arg.add_argument(
        "--n", type=_int_list_arg, required=True, action="append",
        help="degree(s): 150,151,152 or 1-10; may repeat",
    )

    parser = argparse.ArgumentParser(
        prog="orthoentropy",
        description="Discrete Shannon entropy of orthonormal polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", parents=[common, fam, n_arg], help="per-zero entropies S_{n,j}")
    p.add_argument("--include-dual", action="store_true", help="add the row entropy with the same index")

    sub.add_parser("dual", parents=[common, fam, n_arg], help="row entropies S_n^i")

    p = sub.add_parser("closed-form", parents=[common, n_arg], help="Chebyshev closed forms")
    p.add_argument("--kind", type=int, choices=(1, 2), default=1)

    p = sub.add_parser("compare", parents=[common, fam, n_arg], help="spectral vs closed form")
    p.add_argument("--threshold", type=float, default=1e-9)

    p = sub.add_parser("phi-table", parents=[common, n_arg], help="folding map values and lemma check")
    p.add_argument("--j", type=_int_list_arg, default=None, help="index list (default: 1..n)")

    p = sub.add_parser("special", parents=[common], help="R(x) by both routes")
    p.add_argument("--grid", type=parse_grid, default=(0.0, 0.5, 0.01), help="start:stop:step")
    return parser


def config_from_args(args) -> RunConfig:
    n_list = sorted({n for chunk in (getattr(args, "n", None) or []) for n in chunk})
    family = None
    if hasattr(args, "family"):
        family = FamilySpec.from_name(
            args.family, alpha=args.alpha, beta=args.beta, theta=args.theta, a=args.a, c=args.c
        )
    if args.command == "compare" and family.kind not in ("chebyshev1", "chebyshev2"):
        raise ValueError("compare needs --family chebyshev1 or chebyshev2")
    return RunConfig(
        command=args.command,
        family=family,
        n_list=n_list,
        output_format=args.output_format,
        output_path=args.output,
        threshold=getattr(args, "threshold", 1e-9),
        include_dual=getattr(args, "include_dual", False),
        kind=getattr(args, "kind", 1),
        j_list=getattr(args, "j", None),
        grid=getattr(args, "grid", (0.0, 0.5, 0.01)),
    )


def main(argv=None, stream=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        cfg = config_from_args(args)
        return run(cfg, stream=stream)
    except (ValueError, IndexError, ArithmeticError) as exc:
        print(f"orthoentropy: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
