"""Command-line front end.

Subcommands: `run` (single propagation + analysis), `fig2`..`fig5` (canned
sweeps), `cnot` (Controlled-NOT synthesis + scorecard), `accept` (acceptance
suite).  Results are serialized to csv or json; angles are degrees on the
way in and out, and complex amplitudes are written `magnitude@phase-degrees`.

Exit codes: 0 ok, 1 usage error, 2 I/O error, 3 acceptance failure.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys
from typing import Any, Sequence

from . import __version__
from .acceptance import run_all
from .analysis import analyze
from .gate import CNOT_CONFIG, cnot_synthesis
from .model import CaseKind, ConfigError, GateConfig, NormalizationError, QubitInput
from .sweep import SweepResult, fig2_sweep, fig3_timeseries, fig4_sweep, fig5_sweep

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_ACCEPT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on errors; we reserve 2 for I/O."""

    def error(self, message: str):
        raise UsageError(message)


def _amplitude(text: str) -> complex:
    """Parse `magnitude@phase-degrees` (phase optional) into a complex number."""
    mag_s, _, phase_s = text.partition("@")
    try:
        mag = float(mag_s)
        phase = math.radians(float(phase_s)) if phase_s else 0.0
    except ValueError as exc:
        raise UsageError(f"bad amplitude {text!r}: expected magnitude@phase-degrees") from exc
    if mag < 0:
        raise UsageError(f"bad amplitude {text!r}: magnitude must be non-negative")
    return mag * cmath.exp(1j * phase)


def build_parser() -> _Parser:
    parser = _Parser(prog="polgate", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", default="-", help="output path, '-' for standard output")

    def add_config(p: argparse.ArgumentParser) -> None:
        p.add_argument("--case", choices=("I", "II"), default="I")
        p.add_argument("--lambda1", type=float, default=1.0)
        p.add_argument("--lambda2", type=float, default=1.0)
        p.add_argument("--delta1", type=float, default=0.0)
        p.add_argument("--delta2", type=float, default=5.0)
        p.add_argument("--time", type=float, default=math.pi)

    p_run = sub.add_parser("run", help="single propagation and analysis")
    add_config(p_run)
    for flag, default in (
        ("--alpha-plus", "0"),
        ("--alpha-minus", "1"),
        ("--beta-plus", "1"),
        ("--beta-minus", "0"),
    ):
        p_run.add_argument(flag, default=default, metavar="MAG[@PHASE_DEG]")
    add_output(p_run)

    for name in ("fig2", "fig4"):
        p = sub.add_parser(name, help=f"{name} sweep")
        p.add_argument("--case", choices=("I", "II"), default="I")
        add_output(p)

    p_fig3 = sub.add_parser("fig3", help="population time series")
    p_fig3.add_argument("--samples", type=int, default=400)
    add_output(p_fig3)

    p_fig5 = sub.add_parser("fig5", help="phase-shift sweep (detuned case)")
    p_fig5.add_argument("--no-phase-variant", action="store_true")
    add_output(p_fig5)

    p_cnot = sub.add_parser("cnot", help="Controlled-NOT synthesis")
    add_output(p_cnot)

    sub.add_parser("accept", help="run the acceptance suite")
    return parser


def _fmt(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write(result: SweepResult, fmt: str, output: str) -> None:
    if fmt == "csv":
        lines = [",".join(result.columns)]
        lines += [",".join(_fmt(v) for v in row) for row in result.rows]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(
            {
                "metadata": result.metadata,
                "columns": list(result.columns),
                "rows": [list(row) for row in result.rows],
            },
            indent=2,
        ) + "\n"
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _run_record(args: argparse.Namespace) -> SweepResult:
    config = GateConfig(
        case=CaseKind(args.case),
        lambda1=args.lambda1,
        lambda2=args.lambda2,
        delta1=args.delta1,
        delta2=args.delta2,
        time=args.time,
    )
    q = QubitInput(
        _amplitude(args.alpha_plus),
        _amplitude(args.alpha_minus),
        _amplitude(args.beta_plus),
        _amplitude(args.beta_minus),
    )
    r = analyze(config, q)
    deg = lambda x: None if x is None else math.degrees(x)  # noqa: E731
    row = [r.p0]
    for c in r.c:
        row += [c.real, c.imag]
    row += list(r.eta)
    row += [deg(p) for p in r.phi]
    ph = r.phases
    row += [deg(ph.phi_bar_plus), deg(ph.phi_bar_minus), deg(ph.dphi_plus), deg(ph.dphi_minus)]
    row += [r.retention, r.quality]
    columns = (
        ["p0"]
        + [f"c_{b}_{part}" for b in ("pp", "pm", "mp", "mm") for part in ("re", "im")]
        + [f"eta_{b}" for b in ("pp", "pm", "mp", "mm")]
        + [f"phi_{b}_deg" for b in ("pp", "pm", "mp", "mm")]
        + ["phi_bar_plus_deg", "phi_bar_minus_deg", "dphi_plus_deg", "dphi_minus_deg"]
        + ["retention", "quality"]
    )
    return SweepResult(
        columns=tuple(columns),
        rows=[tuple(row)],
        metadata={
            "version": __version__,
            "command": "run",
            "case": config.case.value,
            "lambda1": config.lambda1,
            "lambda2": config.lambda2,
            "delta1": config.delta1,
            "delta2": config.delta2,
            "time": config.time,
        },
    )


def _cnot_record() -> SweepResult:
    composite, score = cnot_synthesis()
    rows: list[tuple] = []
    for i in range(4):
        for j in range(4):
            entry = composite.matrix[i, j]
            rows.append((f"m_{i}{j}_re", entry.real))
            rows.append((f"m_{i}{j}_im", entry.imag))
    rows += [
        ("single_shift_deg", score.single_shift_deg),
        ("upper_diag_mag_0", score.upper_diag_mags[0]),
        ("upper_diag_mag_1", score.upper_diag_mags[1]),
        ("upper_block_phase_deg", score.upper_block_phase_deg),
        ("lower_antidiag_mag_0", score.lower_antidiag_mags[0]),
        ("lower_antidiag_mag_1", score.lower_antidiag_mags[1]),
        ("lower_block_phase_deg", score.lower_block_phase_deg),
        ("max_small_entry", score.max_small_entry),
        ("distance_per_block", score.distance_per_block),
        ("leakage", composite.leakage),
    ]
    return SweepResult(
        columns=("name", "value"),
        rows=rows,
        metadata={
            "version": __version__,
            "command": "cnot",
            "case": CNOT_CONFIG.case.value,
            "lambda1": CNOT_CONFIG.lambda1,
            "lambda2": CNOT_CONFIG.lambda2,
            "delta1": CNOT_CONFIG.delta1,
            "delta2": CNOT_CONFIG.delta2,
            "time": CNOT_CONFIG.time,
            "ordering": "rows/columns {a-b-, a+b-, a-b+, a+b+}",
        },
    )


def _accept() -> int:
    results = run_all()
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] criterion {r.index}: {r.name:<{width}}  {r.details}")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_OK if not failed else EXIT_ACCEPT


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "accept":
            return _accept()
        if args.command == "run":
            result = _run_record(args)
        elif args.command == "fig2":
            result = fig2_sweep(CaseKind(args.case))
        elif args.command == "fig3":
            if args.samples < 1:
                raise UsageError("--samples must be a positive integer")
            result = fig3_timeseries(args.samples)
        elif args.command == "fig4":
            result = fig4_sweep(CaseKind(args.case))
        elif args.command == "fig5":
            result = fig5_sweep(with_phase_variant=not args.no_phase_variant)
        else:  # cnot
            result = _cnot_record()
        _write(result, args.format, args.output)
        return EXIT_OK
    except (UsageError, ConfigError, NormalizationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
