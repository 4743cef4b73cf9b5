"""Command-line front-end.

Subcommands: ``region`` (boundary curve / disk data), ``extremal`` (evaluate
one extremal map), ``sample`` (seeded member cloud with membership verdicts),
``verify`` (run verification suites), ``sweep`` (batch region records from a
grid file).  Output formats are CSV, SVG and JSON; every command is a
deterministic function of its flags and seed, and files are written
atomically.

Exit codes: 0 ok, 1 verification failure, 2 usage/domain error, 3 I/O
failure, 4 quadrature non-convergence, 5 containment breach (a sampled member
landed outside the region, which indicates a kernel bug).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .extremal import ConvergenceError, ExtremalSpec, QuadratureConfig, extremal_fprime, extremal_value
from .region import (
    EvalPoint,
    JanowskiParams,
    Verdict,
    boundary_curve,
    contains,
    is_unit_modulus,
    singleton_value,
    variability_disk,
)
from .sampler import ConstrainedSchwarz, member_log_fprime, sample_inner
from .verify import SUITE_NAMES, run_suites

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4
EXIT_CONTAINMENT = 5

_SVG_BANNER = "<!-- varregion: deterministic region rendering -->"
_SVG_SIZE = 800
_SVG_MARGIN = 40  # 5% of the fixed viewport on each side

GRID_KEYS = ("A", "B", "lambda_re", "lambda_im", "z0_re", "z0_im")
GRID_REQUIRED = ("A", "B", "z0_re")


@dataclass
class RunConfig:
    """Resolved settings shared by the rendering/sampling commands."""

    params: JanowskiParams
    point: EvalPoint
    theta_samples: int = 256
    mc_samples: int = 1000
    seed: int = 0
    tol: float = 1e-9
    output_path: str | None = None
    format: str = "csv"

    def __post_init__(self) -> None:
        if self.theta_samples < 3:
            raise ValueError("require theta_samples >= 3")
        if self.mc_samples < 0:
            raise ValueError("require mc_samples >= 0")
        if not self.tol > 0.0:
            raise ValueError("require tol > 0")
        if self.format not in ("csv", "svg", "json"):
            raise ValueError(f"unknown format {self.format!r}")


class GridParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"parse error at line {line_no}: {message}")
        self.line_no = line_no


def parse_complex(text: str) -> complex:
    """Parse 're' or 're,im' into a complex number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")


def _f17(x: float) -> str:
    # x + 0.0 normalizes negative zero so exact-zero fields print as "0"
    return f"{x + 0.0:.17g}"


def _f15(x: float) -> str:
    return f"{x + 0.0:.15g}"


def _pair(w: complex) -> list[float]:
    return [w.real + 0.0, w.imag + 0.0]


def _resolve_out(path_str: str | None) -> Path | None:
    if path_str is None:
        return None
    p = Path(path_str)
    override = os.environ.get("OVERRIDE_OUT_DIR")
    if override:
        p = Path(override) / p.name
    return p


def _resolve_out_dir(dir_str: str) -> Path:
    override = os.environ.get("OVERRIDE_OUT_DIR")
    return Path(override) if override else Path(dir_str)


def _write_text(path: Path | None, text: str) -> None:
    """Write to stdout, or atomically (temp file + rename) to a file."""
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# region records


def _reduce_lambda(z0: complex, lam: complex) -> tuple[complex, float, bool]:
    """Rewrite (z0, lam) with |lam| < 1 into an equivalent frame with real lam.

    The region for coefficient parameter lam at z0 equals the region for
    |lam| at (lam/|lam|) z0 (rotation equivalence), so complex lam reduces to
    the real-parameter closed form without changing the value set.
    """
    if lam.imag == 0.0 and 0.0 <= lam.real < 1.0:
        return z0, lam.real, False
    s = abs(lam)
    if s == 0.0:
        return z0, 0.0, False
    return z0 * (lam / s), s, True


def region_record(params: JanowskiParams, point: EvalPoint, theta_samples: int) -> dict:
    """JSON-ready region record; singleton cases carry an explanatory note."""
    rec: dict = {
        "params": {"A": params.A, "B": params.B},
        "point": {"z0": _pair(point.z0), "lambda": _pair(point.lam)},
    }
    if point.z0 == 0:
        rec.update(center=[0.0, 0.0], radius=0.0, boundary=[],
                   note="z0 = 0: the region is the singleton {0}")
        return rec
    if is_unit_modulus(point.lam):
        v = singleton_value(point, params)
        rec.update(center=_pair(v), radius=0.0, boundary=[],
                   note="|lambda| = 1: the region is a singleton")
        return rec
    z0_eff, lam_eff, reduced = _reduce_lambda(point.z0, point.lam)
    eff = EvalPoint(z0_eff, lam_eff)
    disk = variability_disk(eff, params)
    curve = boundary_curve(eff, params, theta_samples)
    rec.update(
        center=_pair(disk.center),
        radius=disk.radius + 0.0,
        boundary=[[t + 0.0, v.real + 0.0, v.imag + 0.0] for t, v in curve.samples],
    )
    if reduced:
        rec["note"] = "complex lambda reduced to an equivalent real-lambda frame by rotation"
    return rec


def load_region_record(path: Path | str) -> dict:
    """Re-read a region record written by this tool, re-validating its contents."""
    with open(path, "r") as fh:
        rec = json.load(fh)
    if rec.get("rejected"):
        return rec
    params = JanowskiParams(rec["params"]["A"], rec["params"]["B"])
    point = EvalPoint(complex(*rec["point"]["z0"]), complex(*rec["point"]["lambda"]))
    if rec["radius"] < 0:
        raise ValueError("invalid record: negative radius")
    for row in rec["boundary"]:
        if len(row) != 3:
            raise ValueError("invalid record: boundary rows must be [theta, re, im]")
    del params, point
    return rec


def _singleton_of(rec: dict) -> complex | None:
    if rec.get("boundary"):
        return None
    return complex(rec["center"][0], rec["center"][1])


def _region_csv(rec: dict) -> str:
    lines = ["theta,re,im"]
    single = _singleton_of(rec)
    if single is not None:
        lines.append(f"{_f17(0.0)},{_f17(single.real)},{_f17(single.imag)}")
    else:
        for t, re, im in rec["boundary"]:
            lines.append(f"{_f17(t)},{_f17(re)},{_f17(im)}")
    return "\n".join(lines) + "\n"


def _svg_document(boundary: list[complex], cloud: list[complex]) -> str:
    pts = list(boundary) + list(cloud)
    xs = np.array([p.real for p in pts])
    ys = np.array([p.imag for p in pts])
    span = max(float(xs.max() - xs.min()), float(ys.max() - ys.min()), 1e-30)
    usable = _SVG_SIZE - 2 * _SVG_MARGIN
    scale = usable / span

    def to_px(p: complex) -> tuple[float, float]:
        # real axis rightward, imaginary axis upward
        x = _SVG_MARGIN + (p.real - xs.min()) * scale + (usable - (xs.max() - xs.min()) * scale) / 2
        y = _SVG_SIZE - (_SVG_MARGIN + (p.imag - ys.min()) * scale + (usable - (ys.max() - ys.min()) * scale) / 2)
        return x, y

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_SIZE}" height="{_SVG_SIZE}" '
        f'viewBox="0 0 {_SVG_SIZE} {_SVG_SIZE}">',
        _SVG_BANNER,
    ]
    if boundary:
        coords = " ".join("%.3f,%.3f" % to_px(p) for p in boundary)
        parts.append(f'<polygon points="{coords}" fill="none" stroke="black" stroke-width="1"/>')
    for p in cloud:
        x, y = to_px(p)
        parts.append('<circle cx="%.3f" cy="%.3f" r="0.5" fill="black"/>' % (x, y))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _region_svg(rec: dict) -> str:
    single = _singleton_of(rec)
    if single is not None:
        return _svg_document([], [single])
    boundary = [complex(re, im) for _, re, im in rec["boundary"]]
    return _svg_document(boundary, [])


# ---------------------------------------------------------------------------
# commands


def cmd_region(args: argparse.Namespace) -> int:
    params = JanowskiParams(args.A, args.B)
    point = EvalPoint(args.z0, args.lam)
    cfg = RunConfig(params=params, point=point, theta_samples=args.theta_samples,
                    seed=args.seed, tol=args.tol, output_path=args.out, format=args.format)
    rec = region_record(params, point, cfg.theta_samples)
    if "note" in rec:
        print(f"note: {rec['note']}", file=sys.stderr)
    if cfg.format == "json":
        text = _json_text(rec)
    elif cfg.format == "csv":
        text = _region_csv(rec)
    else:
        text = _region_svg(rec)
    _write_text(_resolve_out(cfg.output_path), text)
    return EXIT_OK


def cmd_extremal(args: argparse.Namespace) -> int:
    params = JanowskiParams(args.A, args.B)
    spec = ExtremalSpec(a=args.a, lam=args.lam, params=params)
    z = args.z
    if abs(z) >= 1.0:
        raise ValueError(f"require |z| < 1, got |z| = {abs(z)}")
    cfg = QuadratureConfig(abs_tol=args.quad_tol, max_panels=args.max_panels)
    value = extremal_value(spec, z, cfg)
    deriv = complex(extremal_fprime(spec, z))
    sys.stdout.write(f"{_f15(value.real)} {_f15(value.imag)}\n")
    sys.stdout.write(f"{_f15(deriv.real)} {_f15(deriv.imag)}\n")
    return EXIT_OK


def _sample_rows(cfg: RunConfig) -> tuple[list[tuple[int, complex, str]], list[dict]]:
    rows: list[tuple[int, complex, str]] = []
    breaches: list[dict] = []
    point, params = cfg.point, cfg.params
    degenerate_zero = point.z0 == 0
    unit_lam = is_unit_modulus(point.lam)
    collapsed = singleton_value(point, params) if (degenerate_zero or unit_lam) else None
    for i in range(cfg.mc_samples):
        if collapsed is not None:
            rows.append((i, collapsed, Verdict.BOUNDARY.value))
            continue
        inner = sample_inner(cfg.seed * 1_000_003 + i, complexity=i % 4)
        s = ConstrainedSchwarz(inner=inner, lam=point.lam)
        w = complex(member_log_fprime(s, params, point.z0))
        verdict = contains(w, point, params, cfg.tol)
        rows.append((i, w, verdict.status.value))
        if verdict.status is Verdict.OUTSIDE:
            breaches.append({"seed_index": i, "value": [w.real, w.imag], "slack": verdict.slack})
    return rows, breaches


def cmd_sample(args: argparse.Namespace) -> int:
    params = JanowskiParams(args.A, args.B)
    point = EvalPoint(args.z0, args.lam)
    cfg = RunConfig(params=params, point=point, theta_samples=args.theta_samples,
                    mc_samples=args.mc_samples, seed=args.seed, tol=args.tol,
                    output_path=args.out, format=args.format)
    if cfg.mc_samples < 1:
        raise ValueError("require mc_samples >= 1")
    rows, breaches = _sample_rows(cfg)
    if cfg.format == "csv":
        lines = ["seed_index,re,im,verdict"]
        lines += [f"{i},{_f17(w.real)},{_f17(w.imag)},{v}" for i, w, v in rows]
        text = "\n".join(lines) + "\n"
    elif cfg.format == "json":
        rec = region_record(params, point, cfg.theta_samples)
        rec["samples"] = [[i, w.real + 0.0, w.imag + 0.0, v] for i, w, v in rows]
        text = _json_text(rec)
    else:
        rec = region_record(params, point, cfg.theta_samples)
        boundary = [complex(re, im) for _, re, im in rec["boundary"]]
        text = _svg_document(boundary, [w for _, w, _ in rows])
    _write_text(_resolve_out(cfg.output_path), text)
    if breaches:
        print(f"containment breach: {len(breaches)} sample(s) outside the region", file=sys.stderr)
        for b in breaches[:20]:
            print(f"  witness: {b}", file=sys.stderr)
        return EXIT_CONTAINMENT
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    reports = run_suites(names, seed=args.seed, tol=args.tol)
    text = _json_text([r.to_dict() for r in reports])
    _write_text(_resolve_out(args.out), text)
    if all(r.passed for r in reports):
        return EXIT_OK
    failed = ", ".join(r.suite_name for r in reports if not r.passed)
    print(f"verification failed: {failed}", file=sys.stderr)
    return EXIT_VERIFY_FAIL


def _parse_grid_file(path: Path) -> list[dict[str, float]]:
    blocks: list[dict[str, float]] = []
    current: dict[str, float] = {}
    with open(path, "r") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                if current:
                    blocks.append(current)
                    current = {}
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep:
                raise GridParseError(line_no, f"expected key=value, got {line!r}")
            if key not in GRID_KEYS:
                raise GridParseError(line_no, f"unknown key {key!r}")
            if key in current:
                raise GridParseError(line_no, f"duplicate key {key!r} in block")
            try:
                current[key] = float(value.strip())
            except ValueError:
                raise GridParseError(line_no, f"invalid number {value.strip()!r}") from None
    if current:
        blocks.append(current)
    return blocks


def _block_hash(block: dict[str, float]) -> str:
    canonical = "\n".join(f"{k}={block[k]!r}" for k in sorted(block))
    return hashlib.sha256(canonical.encode()).hexdigest()[:16]


def _sweep_record(block: dict[str, float], theta_samples: int) -> dict:
    for key in GRID_REQUIRED:
        if key not in block:
            return {"rejected": True, "reason": f"missing key {key!r}", "block": block}
    lam = complex(block.get("lambda_re", 0.0), block.get("lambda_im", 0.0))
    z0 = complex(block["z0_re"], block.get("z0_im", 0.0))
    try:
        params = JanowskiParams(block["A"], block["B"])
        point = EvalPoint(z0, lam)
        return region_record(params, point, theta_samples)
    except ValueError as exc:
        return {"rejected": True, "reason": str(exc), "block": block}


def cmd_sweep(args: argparse.Namespace) -> int:
    blocks = _parse_grid_file(Path(args.grid))
    out_dir = _resolve_out_dir(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    index: list[dict] = []
    by_hash: dict[str, dict] = {}
    for block in blocks:
        h = _block_hash(block)
        if h in by_hash:
            by_hash[h]["count"] += 1
            continue
        rec = _sweep_record(block, args.theta_samples)
        fname = f"region-{h}.json"
        _write_text(out_dir / fname, _json_text(rec))
        entry = {
            "hash": h,
            "file": fname,
            "status": "rejected" if rec.get("rejected") else "ok",
            "count": 1,
        }
        by_hash[h] = entry
        index.append(entry)
    _write_text(out_dir / "index.json", _json_text({"records": index}))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p.add_argument("--tol", type=float, default=1e-9, help="membership tolerance (default 1e-9)")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "svg", "json"), default="csv")


def _add_point_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--A", type=float, required=True, help="parameter A (-1 <= A < B)")
    p.add_argument("--B", type=float, required=True, help="parameter B (A < B <= 1, B != 0)")
    p.add_argument("--lambda", dest="lam", type=parse_complex, default=0j,
                   help="coefficient parameter; 're' or 're,im' (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varregion",
        description="Regions of variability of log f' for disk-subordination classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("region", help="boundary curve and disk data of the region")
    _add_point_flags(p)
    p.add_argument("--z0", type=parse_complex, required=True, help="evaluation point, 're,im'")
    p.add_argument("--theta-samples", type=int, default=256)
    _add_common(p)
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("extremal", help="evaluate one extremal map F and F'")
    _add_point_flags(p)
    p.add_argument("--a", type=parse_complex, required=True, help="disk parameter, |a| <= 1")
    p.add_argument("--z", type=parse_complex, required=True, help="evaluation point, |z| < 1")
    p.add_argument("--quad-tol", type=float, default=1e-12)
    p.add_argument("--max-panels", type=int, default=1024)
    _add_common(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("sample", help="seeded cloud of member values with verdicts")
    _add_point_flags(p)
    p.add_argument("--z0", type=parse_complex, required=True)
    p.add_argument("--mc-samples", type=int, default=1000)
    p.add_argument("--theta-samples", type=int, default=256)
    _add_common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), required=True)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="batch region records from a grid file")
    p.add_argument("--grid", required=True, help="grid file of key=value blocks")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--theta-samples", type=int, default=256)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GridParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"error: {exc} (estimate {exc.estimate!r})", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
