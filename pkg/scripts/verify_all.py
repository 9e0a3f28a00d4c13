"""Run the oracle suite on the examples and the random test algebras.

    python3 scripts/verify_all.py --bound 4 --seed 1
"""

import sys
import time

from radsq import catalog
from radsq.config import RunConfig
from radsq.harness.verify import corrupted_phi, verify


def main(argv):
    cfg = RunConfig.from_argv(argv, seed=1)
    algebras = {"example 1": catalog.example1(), "example 2": catalog.example2()}
    algebras.update({f"random seed {s}": catalog.random3(s) for s in catalog.RANDOM_SEEDS})
    ok = True
    for name, a in algebras.items():
        t0 = time.perf_counter()
        rep = verify(a, cfg.bound, cfg.seed)
        print(f"== {name} ({time.perf_counter() - t0:.1f} s)")
        print(rep.text())
        ok &= rep.passed
    mutated = verify(catalog.example1(), cfg.bound, cfg.seed, phi_fn=corrupted_phi)
    print("== example 1 with a corrupted Phi (must fail)")
    print(mutated.text())
    ok &= not mutated.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
