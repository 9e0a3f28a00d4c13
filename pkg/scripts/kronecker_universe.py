"""List the indecomposable Kronecker modules over F_p up to a dimension bound.

    python3 scripts/kronecker_universe.py --bound 4
"""

import sys
from collections import Counter

from radsq import catalog
from radsq.config import RunConfig
from radsq.harness.oracle import enumerate_indecomposables


def main(argv):
    cfg = RunConfig.from_argv(argv, bound=2)
    u = enumerate_indecomposables(catalog.kronecker(), cfg.bound, cfg.seed)
    print(f"{len(u)} indecomposables up to total dimension {cfg.bound} "
          f"({'exhaustive' if u.exhaustive else 'sampled'})")
    for dims, k in sorted(Counter(m.dims for m in u).items()):
        print(f"  {dims}: {k}")


if __name__ == "__main__":
    main(sys.argv[1:])
