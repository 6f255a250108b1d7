"""Time the pruned enumerator and the Deodhar cross-check.

Reports, for the long self-pairing words, how long it takes to certify that
the defect-0 subexpression is unique, and for each small system how long
``deodhar_check`` takes over all words up to a given length.

    python scripts/bench_enumeration.py --deodhar A2:8 B2:7
"""
import argparse
import itertools
import time
from dataclasses import dataclass, field

from nilhecke import cases
from nilhecke.hecke import deodhar_check
from nilhecke.subexpr import EnumerationFilter, Expression, enumerate_subexpressions
from nilhecke.sysfile import load_system


@dataclass
class Config:
    words: tuple = ("ks-s8", "braden-s8", "s12")
    deodhar: list = field(default_factory=lambda: [("A2", 8), ("B2", 7), ("A3", 6)])


def bench_uniqueness(name: str) -> None:
    case = cases.SELF_PAIRING[name]
    S = load_system(case.system)
    w = Expression.parse(S, case.word)
    x = S.element(S.parse_word(case.x))
    for label, filt in (("defect 0", EnumerationFilter(exact_defect=0)),
                        ("defect 0, no D1", EnumerationFilter(no_d1=True, exact_defect=0)),
                        ("defect <= 2", EnumerationFilter(max_defect=2))):
        t = time.perf_counter()
        found = enumerate_subexpressions(w, x, filt)
        print(f"{name:10s} {len(w):3d} letters  {label:16s} {len(found):5d} found  {time.perf_counter() - t:7.2f}s")


def bench_deodhar(name: str, max_length: int) -> None:
    S = load_system(name)
    t = time.perf_counter()
    count = 0
    for m in range(max_length + 1):
        for word in itertools.product(range(S.rank), repeat=m):
            assert deodhar_check(Expression(S, word)).passed
            count += 1
    print(f"deodhar {name} <= {max_length}: {count} words  {time.perf_counter() - t:7.2f}s")


def main(cfg: Config) -> None:
    for name in cfg.words:
        bench_uniqueness(name)
    for name, k in cfg.deodhar:
        bench_deodhar(name, k)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--words", nargs="*", default=list(Config.words))
    p.add_argument("--deodhar", nargs="*", default=None, help="entries like A2:8")
    a = p.parse_args()
    cfg = Config(words=tuple(a.words))
    if a.deodhar is not None:
        cfg.deodhar = [(s.split(":")[0], int(s.split(":")[1])) for s in a.deodhar]
    main(cfg)
