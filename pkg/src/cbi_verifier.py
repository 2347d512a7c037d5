#!/usr/bin/env python
import argparse
import csv
import io
import json
import logging
import signal
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from fs import FS
from errors import ConfigError, ParseError
from exact.scalar import format_rational, parse_rational
from models.param_set import DualHahnParams, ParamSet
from models.run_config import RunConfig
from models.truncation_case import TruncationCase
from cbi_algebra import build_K1, build_K2, build_K3, build_P, casimir_operator
from cbi_family import bi_table, cbi_table
from limits_bridge import build_E_alpha
from operators.dunkl import build_D0, build_D_alpha, build_H_y, build_U, conjugated_H
from spectral_orthogonality import classify_truncation, grid_weight_table, positive_even_params, positive_odd_params
from suites import REFERENCE_PARAMS, SUITES, SuiteRunner

FAMILIES = ("cbi", "bi")
FORMATS = ("json", "csv")
OPERATORS = ("D_alpha", "D0", "U", "H", "H_conjugated", "K1", "K2", "K3", "P", "casimir", "E_alpha")
EVEN_KEYS = ("a", "b", "c", "N")
ODD_KEYS = ("zeta", "xi", "chi", "N")


def rational(text: str) -> Fraction:
    """argparse type for "p/q" literals."""
    try:
        return parse_rational(text)
    except ParseError as e:
        raise argparse.ArgumentTypeError(str(e))


def eps_values(text: str) -> Tuple[float, ...]:
    """argparse type for a comma-separated list of positive floats."""
    try:
        values = tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Not a comma-separated list of numbers: {text!r}")
    if not values or any(v <= 0 for v in values):
        raise argparse.ArgumentTypeError(f"eps values must be positive: {text!r}")
    return values


def key_value(text: str) -> Tuple[str, str]:
    key, sep, value = text.partition("=")
    if not sep or not key or not value:
        raise argparse.ArgumentTypeError(f"Expected key=value, got {text!r}")
    return key.strip(), value.strip()


def _triple(pairs: Optional[List[Tuple[str, str]]], keys: Sequence[str], flag: str) -> Optional[Tuple[Tuple[Fraction, ...], int]]:
    """Named positivity inputs such as a=1 b=1 c=1 N=6."""
    if pairs is None:
        return None
    values = dict(pairs)
    if set(values) != set(keys):
        raise ConfigError(f"{flag} expects exactly {' '.join(k + '=...' for k in keys)}, got {' '.join(values)}")
    try:
        N = int(values["N"])
    except ValueError:
        raise ConfigError(f"{flag}: N must be an integer, got {values['N']!r}")
    return tuple(parse_rational(values[k]) for k in keys[:3]), N


class CbiVerifier:
    """
    Command-line application: generates polynomial tables, runs verification
    suites and dumps operators, writing every artifact under data/.
    """
    def __init__(self, argv: Optional[Sequence[str]] = None, fs: Optional[FS] = None) -> None:
        signal.signal(signal.SIGINT, self._handle_exit)

        self.fs = fs or FS()
        self.args = self._parse_arguments(argv)
        if self.args.verbose:
            logging.getLogger().setLevel(logging.DEBUG)

        logging.info(f"Project root determined as: {self.fs.root}")

        self.config = self._build_config()
        self.output_path: Optional[Path] = None
        self.summary: str = ""

    def _handle_exit(self, signum, frame) -> None:
        """
        Handle clean exit on keyboard interrupt.
        """
        print("\nExiting cleanly. Goodbye!")
        sys.exit(0)

    def _parse_arguments(self, argv: Optional[Sequence[str]]) -> argparse.Namespace:
        """
        Parse command line arguments.

        Returns:
            Parsed arguments
        """
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--rho1", type=rational, default=None, help="Parameter rho1 as p/q (default: None)")
        common.add_argument("--rho2", type=rational, default=None, help="Parameter rho2 as p/q (default: None)")
        common.add_argument("--r1", type=rational, default=None, help="Parameter r1 as p/q (default: None)")
        common.add_argument("--r2", type=rational, default=None, help="Parameter r2 as p/q (default: None)")
        common.add_argument("--alpha", type=rational, default=Fraction(0), help="Operator parameter alpha (default: 0)")
        common.add_argument("--n", type=int, default=30, help="Largest degree n (default: 30)")
        common.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: json)")
        common.add_argument("--output", type=Path, default=None, help="Output file (default: a file under data/)")
        common.add_argument("--verbose", action="store_true", help="Log per-degree detail at DEBUG level (default: off)")

        truncation = argparse.ArgumentParser(add_help=False)
        truncation.add_argument("--N", type=int, default=None, help="Truncation size N (default: None)")
        truncation.add_argument(
            "--even", type=key_value, nargs=4, default=None, metavar="KEY=VALUE",
            help="Positive even parametrization a=.. b=.. c=.. N=.. (default: None)",
        )
        truncation.add_argument(
            "--odd", type=key_value, nargs=4, default=None, metavar="KEY=VALUE",
            help="Positive odd parametrization zeta=.. xi=.. chi=.. N=.. (default: None)",
        )

        parser = argparse.ArgumentParser(
            description="Exact verification of the complementary Bannai-Ito polynomials.",
            epilog="Example usage: python main.py verify ortho --even a=1 b=1 c=1 N=6",
        )
        commands = parser.add_subparsers(dest="command", required=True)

        gen = commands.add_parser("gen", parents=[common], help="Write a table of monic polynomials")
        gen.add_argument("--family", choices=FAMILIES, default="cbi", help="Polynomial family (default: cbi)")

        verify = commands.add_parser("verify", parents=[common, truncation], help="Run a verification suite")
        verify.add_argument("suite", choices=SUITES, help="Suite to run")
        verify.add_argument("--beta", type=rational, default=Fraction(1, 3), help="Shift beta for the algebra suite (default: 1/3)")
        verify.add_argument("--gamma", type=rational, default=Fraction(1, 3), help="Para-Krawtchouk gamma (default: 1/3)")
        verify.add_argument("--h", type=rational, default=None, help="Grid parameter h of the five-term suite (default: rho2 and r1)")
        verify.add_argument("--eps", type=eps_values, default=(1e-3, 1e-4, 1e-5), help="Limit steps eps (default: 1e-3,1e-4,1e-5)")
        verify.add_argument("--seed", type=int, default=7, help="Seed of the random parameter draws (default: 7)")
        verify.add_argument("--draws", type=int, default=5, help="Number of random parameter sets (default: 5)")
        verify.add_argument("--workers", type=int, default=1, help="Parallel workers, -1 for all cores (default: 1)")

        dump = commands.add_parser("dump-op", parents=[common], help="Write an operator in normal form as JSON")
        dump.add_argument("--operator", choices=OPERATORS, default="D_alpha", help="Operator to dump (default: D_alpha)")

        commands.add_parser("grid-table", parents=[common, truncation], help="Write k, x_k, w_k for a truncation case as CSV")

        return parser.parse_args(argv)

    def _params(self) -> Optional[ParamSet]:
        values = [self.args.rho1, self.args.rho2, self.args.r1, self.args.r2]
        if all(v is None for v in values):
            return None
        if any(v is None for v in values):
            raise ConfigError("Give all of --rho1 --rho2 --r1 --r2 or none of them")
        return ParamSet(*values)

    def _build_config(self) -> RunConfig:
        args = self.args
        even = _triple(getattr(args, "even", None), EVEN_KEYS, "--even")
        odd = _triple(getattr(args, "odd", None), ODD_KEYS, "--odd")
        if even and odd:
            raise ConfigError("--even and --odd are mutually exclusive")
        truncation_n = getattr(args, "N", None)
        if even or odd:
            truncation_n = (even or odd)[1]
        if args.n < 0:
            raise ConfigError(f"--n must be non-negative, got {args.n}")
        if getattr(args, "draws", 1) < 1:
            raise ConfigError(f"--draws must be positive, got {args.draws}")
        return RunConfig(
            command=args.command,
            suite=getattr(args, "suite", None),
            family=getattr(args, "family", "cbi"),
            params=self._params(),
            alpha=args.alpha,
            beta=getattr(args, "beta", Fraction(1, 3)),
            n_max=args.n,
            truncation_n=truncation_n,
            even_triple=even[0] if even else None,
            odd_triple=odd[0] if odd else None,
            gamma=getattr(args, "gamma", Fraction(1, 3)),
            grid_h=getattr(args, "h", None),
            eps=getattr(args, "eps", (1e-3, 1e-4, 1e-5)),
            output_format=args.format,
            seed=getattr(args, "seed", 7),
            draws=getattr(args, "draws", 5),
            workers=getattr(args, "workers", 1),
            output=args.output,
            operator=getattr(args, "operator", "D_alpha"),
        )

    def run(self) -> int:
        """
        Execute the configured command.

        Returns:
            0 when the command succeeded, 1 when a verification suite failed
        """
        handlers = {
            "gen": self.generate,
            "verify": self.verify,
            "dump-op": self.dump_operator,
            "grid-table": self.grid_table,
        }
        return handlers[self.config.command]()

    def generate(self) -> int:
        params = self.config.params or REFERENCE_PARAMS
        builder = cbi_table if self.config.family == "cbi" else bi_table
        table = builder(params, self.config.n_max)
        default = self.fs.tables_folder / f"{self.config.family}_n{self.config.n_max}.{self.config.output_format}"
        if self.config.output_format == "csv":
            self._write(_csv_text(table.to_rows()), default)
        else:
            self._write(_json_text(table.to_dict()), default)
        self.summary = f"{len(table)} {self.config.family} polynomials at {params}"
        return 0

    def verify(self) -> int:
        report = SuiteRunner(self.config).run()
        self._write(_json_text(report.to_dict()), self.fs.reports_folder / f"{self.config.suite}.json")
        self.summary = f"Suite {self.config.suite}: {len(report.checks)} checks, {len(report.failures)} failures"
        return 0 if report.passed else 1

    def dump_operator(self) -> int:
        params = self.config.params or REFERENCE_PARAMS
        alpha = self.config.alpha
        name = self.config.operator
        builders = {
            "D_alpha": lambda: build_D_alpha(params, alpha),
            "D0": lambda: build_D0(params),
            "U": lambda: build_U(params),
            "H": lambda: build_H_y(params),
            "H_conjugated": lambda: conjugated_H(params),
            "K1": lambda: build_K1(params, alpha),
            "K2": build_K2,
            "K3": lambda: build_K3(params, alpha),
            "P": lambda: build_P(params),
            "casimir": lambda: casimir_operator(params, alpha),
            "E_alpha": lambda: build_E_alpha(DualHahnParams(params.rho2, params.r1, params.r2), alpha),
        }
        operator = builders[name]()
        payload = {
            "operator": name,
            "params": params.to_dict(),
            "alpha": format_rational(alpha),
            "terms": operator.to_json(),
        }
        self._write(_json_text(payload), self.fs.tables_folder / f"{name}.json")
        self.summary = f"{name} has {len(operator.terms)} terms"
        return 0

    def grid_table(self) -> int:
        params, N = self._truncated_params()
        case: TruncationCase = classify_truncation(params, N)
        rows = [["k", "x_k", "w_k"]] + grid_weight_table(case, params)
        self._write(_csv_text(rows), self.fs.tables_folder / f"grid_{case.tag.value}_N{N}.csv")
        self.summary = f"Grid of {case.tag.value} with {N + 1} points at {params}"
        return 0

    def _truncated_params(self) -> Tuple[ParamSet, int]:
        config = self.config
        N = config.truncation_n
        if config.even_triple is not None:
            return positive_even_params(*config.even_triple, N), N
        if config.odd_triple is not None:
            return positive_odd_params(*config.odd_triple, N), N
        if config.params is not None and N is not None:
            return config.params, N
        raise ConfigError("grid-table needs --even, --odd, or all four parameters with --N")

    def _write(self, text: str, default: Path) -> None:
        path = self.config.output or default
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        self.output_path = path
        logging.info(f"Wrote {path}")


def _json_text(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _csv_text(rows: List[List[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()
