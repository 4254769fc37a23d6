"""Run every example config under configs/ and report exit codes.

    python3 scripts/run_all.py [--svg] [--out runs]
"""
import argparse
import json
import time
from pathlib import Path

from zitterlab import cli

ROOT = Path(__file__).resolve().parent.parent


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--svg", action="store_true")
    ap.add_argument("--out", default=str(ROOT / "runs"))
    args = ap.parse_args()
    failed = 0
    for cfg in sorted((ROOT / "configs").glob("*.json")):
        command = json.loads(cfg.read_text())["command"]
        out = Path(args.out) / cfg.stem
        argv = [command, "--config", str(cfg), "--out", str(out)]
        if args.svg:
            argv.append("--svg")
        t0 = time.perf_counter()
        status = cli.main(argv)
        failed += status != 0
        print(f"{cfg.name:22s} exit={status}  {time.perf_counter() - t0:6.1f}s  -> {out}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
