"""Recompute every stored reference example and write one JSON report per case.

    python scripts/reproduce_examples.py --out results/examples
"""
import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from nilhecke import cases
from nilhecke.forms import dumps


@dataclass
class Config:
    out: Path = Path("results/examples")
    names: tuple = cases.CASE_NAMES


def main(cfg: Config) -> int:
    cfg.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in cfg.names:
        t = time.perf_counter()
        result = cases.run_case(name)
        result["seconds"] = round(time.perf_counter() - t, 3)
        (cfg.out / f"{name}.json").write_text(dumps(result))
        print(f"{name:14s} {result['status']}  {result['seconds']:.2f}s")
        failed += result["status"] != "PASS"
    return 1 if failed else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=Config.out)
    p.add_argument("names", nargs="*", default=list(cases.CASE_NAMES))
    a = p.parse_args()
    raise SystemExit(main(Config(out=a.out, names=tuple(a.names))))
