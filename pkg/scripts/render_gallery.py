#!/usr/bin/env python3
"""Render an SVG gallery of regions with sampled member clouds.

Sweeps the default parameter sets and a few evaluation points, writing one
SVG per combination plus a gallery index of the disk data.

Usage:
    python scripts/render_gallery.py --out out/gallery [--mc-samples 400]
"""

import argparse
import json
from pathlib import Path

from varregion.cli import main as cli_main
from varregion.verify import DEFAULT_PARAM_SETS


def run(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="out/gallery")
    ap.add_argument("--mc-samples", type=int, default=400)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    index = []
    points = [("0.5,0", "0.5"), ("0.3,0.4", "0.3"), ("-0.7,0", "0.9")]
    for params in DEFAULT_PARAM_SETS:
        for z0, lam in points:
            stem = f"A{params.A}_B{params.B}_z{z0}_l{lam}".replace(",", "_")
            svg = out / f"{stem}.svg"
            # the --flag=value form keeps negative "re,im" pairs parseable
            code = cli_main([
                "sample", f"--A={params.A}", f"--B={params.B}",
                f"--lambda={lam}", f"--z0={z0}",
                "--mc-samples", str(args.mc_samples), "--seed", str(args.seed),
                "--format", "svg", "--out", str(svg),
            ])
            if code != 0:
                raise SystemExit(f"render failed ({code}) for {stem}")
            index.append({"file": svg.name, "A": params.A, "B": params.B,
                          "z0": z0, "lambda": lam})
    (out / "gallery.json").write_text(json.dumps(index, indent=2) + "\n")
    print(f"wrote {len(index)} SVGs to {out}")


if __name__ == "__main__":
    run()
