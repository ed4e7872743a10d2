"""Command-line entry point.

Exit codes: 0 success, 1 configuration or I/O error, 2 invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import emit
from .analysis import InvariantReport, run_sweep, verify_invariants
from .config import ConfigError, RunConfig, parse_config
from .spectra import DegenerateResponseError
from .waveguide import DegenerateBranchError

EXIT_OK, EXIT_CONFIG, EXIT_VIOLATION = 0, 1, 2

SUBCOMMANDS = ("spectrum", "polariton", "phase-match", "sweep", "verify")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="flat key = value config file")
    common.add_argument("--geometry", choices=("linear", "ring"))
    common.add_argument("--out", metavar="PATH", help="output file (default: stdout for CSV)")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--exact-eigen", action="store_true",
                        help="use exact non-Hermitian eigenvalues in the polariton kernel")
    common.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                        help="override a config key; repeatable, last wins")

    parser = argparse.ArgumentParser(prog="phopol", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="probe spectrum vs. omega_s - omega_k")
    sub.add_parser("polariton", parents=[common], help="branch frequencies and fractions vs. delta")
    sub.add_parser("phase-match", parents=[common], help="backward SBS phase-matched triplet")
    sub.add_parser("sweep", parents=[common], help="sweep along the configured axis")
    sub.add_parser("verify", parents=[common], help="check all invariants; exit 2 on violation")
    return parser


def load_config(args) -> RunConfig:
    text = ""
    if args.config:
        try:
            text = Path(args.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(args.config, f"cannot read config: {exc.strerror}") from None
    overrides = list(args.overrides)
    if args.geometry:
        overrides.append(f"geometry={args.geometry}")
    if args.format:
        overrides.append(f"format={args.format}")
    if args.out:
        overrides.append(f"out={args.out}")
    if args.exact_eigen:
        overrides.append("exact_eigen=true")
    return parse_config(text, overrides)


def _emit_text(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_table_command(cfg: RunConfig, axis: str) -> int:
    table = run_sweep(cfg.sweep_spec(axis=axis))
    report = verify_invariants(table)
    if cfg.format == "csv":
        _emit_text(emit.format_csv(table), cfg)
    else:
        if cfg.out:
            emit.emit_json(table, cfg.out)
        sys.stdout.write(emit.dumps(emit.summarize(table, report, cfg.prominence)))
    return EXIT_OK


def _phase_match(cfg: RunConfig) -> int:
    pair = cfg.mode_pair()
    row = {
        "k_signal": pair.k_signal, "k_pump": pair.k_pump, "q_phonon": pair.q_phonon,
        "omega_k": pair.omega_k, "omega_kq": pair.omega_kq, "Omega_q": pair.Omega_q,
        "energy_residual": pair.energy_residual(),
    }
    if cfg.format == "csv":
        text = ",".join(row) + "\n" + ",".join(emit.fmt(v) for v in row.values()) + "\n"
    else:
        text = emit.dumps(row)
    _emit_text(text, cfg)
    return EXIT_OK


def _verify(cfg: RunConfig) -> int:
    linear = run_sweep(cfg.sweep_spec(axis="probe_detuning", geometry="linear"))
    ring = run_sweep(cfg.sweep_spec(axis="probe_detuning", geometry="ring"))
    fractions = run_sweep(cfg.sweep_spec(axis="polariton_detuning"))
    report = InvariantReport()
    report.merge(verify_invariants(linear, paired=ring), "linear")
    report.merge(verify_invariants(ring), "ring")
    report.merge(verify_invariants(fractions), "fractions")
    if cfg.format == "json":
        text = emit.dumps(report_summary(report, linear))
    else:
        lines = []
        for name, residual in report.residuals.items():
            status = "PASS" if residual <= report.tolerances[name] else "FAIL"
            lines.append(f"{status} {name} residual={residual:.3e} tol={report.tolerances[name]:.1e}")
        text = "\n".join(lines) + "\n"
    _emit_text(text, cfg)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def report_summary(report, linear) -> dict:
    return {
        "regime": linear.metadata.get("regime"),
        "f_abs": linear.metadata.get("f_abs"),
        "invariants": emit.report_document(report),
    }


def dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; 2 is reserved for invariant violations
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG
    try:
        cfg = load_config(args)
        if args.command == "spectrum":
            return _run_table_command(cfg, "probe_detuning")
        if args.command == "polariton":
            return _run_table_command(cfg, "polariton_detuning")
        if args.command == "sweep":
            return _run_table_command(cfg, cfg.axis)
        if args.command == "phase-match":
            return _phase_match(cfg)
        return _verify(cfg)
    except (ConfigError, DegenerateBranchError) as exc:
        print(f"phopol: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, DegenerateResponseError) as exc:
        print(f"phopol: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"phopol: cannot write output: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
