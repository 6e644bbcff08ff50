"""Command-line interface: reproduce the reference tables as CSV.

Commands
--------
  coeffs    coefficient/amplitude table for n = 0..N plus the sampled grid
            profile and fringe intensity (both sections in one file)
  pattern   just the sampled profile/intensity table
  orders    single-slit and two-slit order spectra per channel
  sweep     covering-ratio sweep of (V, D, V**2 + D**2)
  verify    run the invariant suite and report each check

Output is CSV with one header row per section, values printed with 12
significant digits (lowercase scientific below 1e-4), ``\\n`` line endings,
no timestamps: re-running a command with the same configuration rewrites
byte-identical output.  Flags override config-file values, which override
the built-in defaults.  Exit codes: 0 success, 1 usage error,
2 verification failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import complementarity, scattering, verify
from .grating import AmplitudeTable, GratingSpec, fourier_coefficient, grid_function

__all__ = ["main", "format_number"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_IO = 3

PATTERN_SAMPLES = 401  # over two periods each side of the axis

_CHANNEL_FLAGS = {"t": ("transmitted",), "r": ("reflected",), "both": ("transmitted", "reflected")}
_CONFIG_KEYS = ("a", "order", "phase", "channel", "points", "out", "perturb")

_DEFAULTS = {
    "coeffs": {"a": 0.06, "order": 50, "phase": 0.0, "channel": "t", "points": 0},
    "pattern": {"a": 0.06, "order": 50, "phase": 0.0, "channel": "t", "points": 0},
    "orders": {"a": 0.06, "order": 30, "phase": 0.0, "channel": "both", "points": 0},
    "sweep": {"a": 0.06, "order": 50, "phase": 0.0, "channel": "t", "points": 1001},
    "verify": {"a": 0.06, "order": 2000, "phase": 0.0, "channel": "both", "points": 4096},
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; keep 2 for verification
        raise _UsageError(message)


def format_number(value: float) -> str:
    """Deterministic numeric formatting for CSV cells.

    12 significant digits; values with magnitude below 1e-4 switch to
    lowercase scientific notation, zero prints as ``0``.
    """
    if value == 0.0:
        return "0"
    if abs(value) < 1e-4:
        return f"{value:.11e}"
    return f"{value:.12g}"


@dataclass(frozen=True)
class RunConfig:
    command: str
    cover_ratio: float
    truncation: int
    delta_phi: float
    channels: tuple[str, ...]
    points: int
    out: str | None
    perturb: str | None = None


def _build_parser() -> _Parser:
    parser = _Parser(prog="slitgrid", description="Strip-grating two-slit diffraction tables")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, description in (
        ("coeffs", "coefficient table plus sampled grid profile"),
        ("pattern", "sampled grid profile and fringe intensity"),
        ("orders", "single-slit and two-slit order spectra"),
        ("sweep", "covering-ratio sweep of visibility/distinguishability"),
        ("verify", "run the invariant suite"),
    ):
        cmd = sub.add_parser(name, help=description)
        cmd.add_argument("--a", type=float, default=None, help="covering ratio in [0, 1]")
        cmd.add_argument("--order", type=int, default=None, help="series truncation order")
        cmd.add_argument("--phase", type=float, default=None, help="relative slit phase (radians)")
        cmd.add_argument("--channel", choices=sorted(_CHANNEL_FLAGS), default=None)
        cmd.add_argument(
            "--points", type=int, default=None, help="sweep grid size / quadrature points"
        )
        cmd.add_argument("--out", default=None, help="output path ('-' for stdout)")
        cmd.add_argument("--config", default=None, help="key=value config file")
        if name == "verify":
            cmd.add_argument(
                "--perturb",
                choices=verify.PERTURBATIONS,
                default=None,
                help="bias one amplitude to demonstrate a failing suite",
            )
    return parser


def _load_config_file(path: str) -> dict[str, str]:
    text = Path(path).read_text(encoding="utf-8")  # OSError maps to the I/O exit code
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise _UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        if key not in _CONFIG_KEYS:
            raise _UsageError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value
    return values


def _coerce(key: str, value: str):
    try:
        if key in ("a", "phase"):
            return float(value)
        if key in ("order", "points"):
            return int(value)
    except ValueError:
        raise _UsageError(f"config value for {key!r} is not numeric: {value!r}") from None
    if key == "channel" and value not in _CHANNEL_FLAGS:
        raise _UsageError(f"config channel must be one of {sorted(_CHANNEL_FLAGS)}, got {value!r}")
    if key == "perturb" and value not in verify.PERTURBATIONS:
        raise _UsageError(f"config perturb must be one of {verify.PERTURBATIONS}, got {value!r}")
    return value


def _resolve(args: argparse.Namespace) -> RunConfig:
    """Merge flags over config-file values over per-command defaults."""
    file_values = _load_config_file(args.config) if args.config else {}
    defaults = _DEFAULTS[args.command]

    def pick(key: str):
        flag = getattr(args, key, None)
        if flag is not None:
            return flag
        if key in file_values:
            return _coerce(key, file_values[key])
        return defaults.get(key)

    channel = pick("channel")
    out = pick("out")
    perturb = getattr(args, "perturb", None)
    if perturb is None and "perturb" in file_values and args.command == "verify":
        perturb = _coerce("perturb", file_values["perturb"])
    config = RunConfig(
        command=args.command,
        cover_ratio=pick("a"),
        truncation=pick("order"),
        delta_phi=pick("phase"),
        channels=_CHANNEL_FLAGS[channel],
        points=pick("points"),
        out=out,
        perturb=perturb,
    )
    if not (0.0 <= config.cover_ratio <= 1.0):
        raise _UsageError(f"--a must lie in [0, 1], got {config.cover_ratio}")
    if config.truncation < 1:
        raise _UsageError(f"--order must be >= 1, got {config.truncation}")
    if config.command == "sweep" and config.points < 2:
        raise _UsageError(f"--points must be >= 2 for sweep, got {config.points}")
    return config


def _pattern_section(config: RunConfig) -> list[str]:
    spec = GratingSpec(
        cover_ratio=config.cover_ratio, period=1.0, truncation=config.truncation
    )
    lines = [
        f"# pattern: a={format_number(config.cover_ratio)}"
        f" order={config.truncation} phase={format_number(config.delta_phi)}"
        f" samples={PATTERN_SAMPLES}",
        "x_over_Lambda,G,I",
    ]
    # 401 samples across [-2, 2] grating periods; exact decimals keep the
    # fringe zeros/maxima landing on representable positions
    positions = (np.arange(PATTERN_SAMPLES) - 200) / 100.0
    profile = grid_function(positions, spec)
    fringe = scattering.interference_intensity(positions, config.delta_phi, 1.0)
    for u, g, i in zip(positions, profile, fringe):
        lines.append(f"{format_number(u)},{format_number(g)},{format_number(i)}")
    return lines


def _cmd_coeffs(config: RunConfig) -> list[str]:
    table = AmplitudeTable.build(config.cover_ratio, config.truncation)
    lines = [
        f"# coefficients: a={format_number(config.cover_ratio)} order={config.truncation}",
        "n,c_n,r_n,t_n",
    ]
    for n in range(config.truncation + 1):
        c = fourier_coefficient(n, config.cover_ratio)
        lines.append(
            f"{n},{format_number(c)},{format_number(table.r[n])},{format_number(table.t[n])}"
        )
    lines.append("")
    lines.extend(_pattern_section(config))
    return lines


def _cmd_pattern(config: RunConfig) -> list[str]:
    return _pattern_section(config)


def _cmd_orders(config: RunConfig) -> list[str]:
    spec = GratingSpec(cover_ratio=config.cover_ratio, truncation=config.truncation)
    two_slit = scattering.TwoSlitConfig(spec=spec, delta_phi=config.delta_phi)
    lines: list[str] = []
    for channel in config.channels:
        if lines:
            lines.append("")
        single = scattering.single_slit_spectrum(spec, channel)
        lines.append(
            f"# single-slit {channel}: a={format_number(config.cover_ratio)}"
            f" order={config.truncation}"
        )
        lines.append("n,P")
        for order, p in zip(single.orders, single.probabilities):
            lines.append(f"{int(order)},{format_number(p)}")
        lines.append("")
        paired = scattering.two_slit_spectrum(two_slit, channel)
        lines.append(
            f"# two-slit {channel}: a={format_number(config.cover_ratio)}"
            f" order={config.truncation} phase={format_number(config.delta_phi)}"
        )
        lines.append("m,P")
        for order, p in zip(paired.orders, paired.probabilities):
            lines.append(f"{format_number(order)},{format_number(p)}")
    return lines


def _cmd_sweep(config: RunConfig) -> list[str]:
    grid = np.arange(config.points) / (config.points - 1)
    lines: list[str] = []
    for channel in config.channels:
        if lines:
            lines.append("")
        lines.append(f"# sweep {channel}: points={config.points}")
        lines.append("a,V,D,duality")
        for record in complementarity.complementarity_sweep(grid, channel):
            lines.append(
                f"{format_number(record.cover_ratio)},{format_number(record.visibility)},"
                f"{format_number(record.distinguishability)},{format_number(record.duality)}"
            )
    return lines


def _cmd_verify(config: RunConfig) -> int:
    results = verify.run_verification(
        perturb=config.perturb,
        truncation=config.truncation,
        points=config.points,
    )
    width = max(len(result.name) for result in results)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(
            f"{status}  {result.name:<{width}}  value={result.value:.6e}  "
            f"tolerance={result.tolerance:.6e}  {result.detail}"
        )
    failed = sum(not result.passed for result in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def _write_output(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        config = _resolve(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO

    try:
        if config.command == "verify":
            return _cmd_verify(config)
        builders = {
            "coeffs": _cmd_coeffs,
            "pattern": _cmd_pattern,
            "orders": _cmd_orders,
            "sweep": _cmd_sweep,
        }
        _write_output(builders[config.command](config), config.out)
        return EXIT_OK
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
