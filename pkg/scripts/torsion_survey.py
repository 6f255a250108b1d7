"""Survey torsion in integral Gram matrices for random words.

For random words over a system, pick an endpoint x, compute the Gram matrix
of defect-0 no-D1 subexpressions (whose entries are integers) and record its
elementary divisors.  Prints a tally of the torsion primes seen.

    python scripts/torsion_survey.py --system D4 --samples 200 --length 9
"""
import argparse
import random
from collections import Counter
from dataclasses import dataclass

from nilhecke.forms import gram_matrix
from nilhecke.coxeter import canonical_word
from nilhecke.subexpr import EnumerationFilter, Expression, decorate, greedy_subexpression, has_D1
from nilhecke.sysfile import load_system


@dataclass
class Config:
    system: str = "D4"
    samples: int = 200
    length: int = 9
    seed: int = 0


def main(cfg: Config) -> Counter:
    S = load_system(cfg.system)
    rng = random.Random(cfg.seed)
    primes: Counter = Counter()
    sizes: Counter = Counter()
    witness = {}
    for _ in range(cfg.samples):
        w = Expression(S, tuple(rng.randrange(S.rank) for _ in range(cfg.length)))
        # endpoint: drop some letters of the greedy subexpression
        bits = tuple(b if rng.random() < 0.6 else 0 for b in greedy_subexpression(w).bits)
        d = decorate(w, bits)
        if has_D1(d):
            continue
        report = gram_matrix(w, d.endpoint, EnumerationFilter(exact_defect=0))
        sizes[len(report.basis)] += 1
        for p in report.torsion_primes or ():
            primes[p] += 1
            witness.setdefault(p, (str(w), S.format_word(canonical_word(d.endpoint))))
    print(f"{cfg.system}, {cfg.samples} samples of length {cfg.length}")
    print("basis sizes:", dict(sorted(sizes.items())))
    print("torsion primes:", dict(sorted(primes.items())) or "none")
    for p, (word, x) in sorted(witness.items()):
        print(f"  p = {p}: word '{word}', x '{x}'")
    return primes


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, v in Config().__dict__.items():
        p.add_argument(f"--{f}", type=type(v), default=v)
    main(Config(**vars(p.parse_args())))
