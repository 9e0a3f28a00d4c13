"""Glue AR(A) for one of the two worked examples and write DOT/JSON.

    python3 scripts/glue_example.py 1 --depth 6
"""

import sys
import time
from pathlib import Path

from radsq import catalog
from radsq.arknit import glue, knit, knit_backward, to_dot
from radsq.artheory import tau_inverse
from radsq.config import RunConfig
from radsq.quivalg import format_quiver, gamma, standard_module
from radsq.repmod.decompose import is_isomorphic


def topological_order(frag):
    indeg = {v.id: len(frag.predecessors(v.id)) for v in frag.vertices}
    ready = sorted(v for v, d in indeg.items() if d == 0)
    order = {}
    while ready:
        v = ready.pop(0)
        order[v] = len(order)
        for w, _ in frag.successors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return order


def main(argv):
    which = argv[0] if argv and not argv[0].startswith("-") else "1"
    cfg = RunConfig.from_argv(argv[1:] if argv and argv[0] == which else argv)
    a = catalog.example1() if which == "1" else catalog.example2()
    g = gamma(a)
    print(f"Gamma(A) for example {which}:")
    print(format_quiver(g))
    t0 = time.perf_counter()
    frag = glue([knit(g, cfg.depth), knit_backward(g, cfg.depth)], a)
    order = topological_order(frag)
    print(f"glued in {time.perf_counter() - t0:.2f} s, {len(frag.vertices)} vertices, "
          f"{len(frag.components())} component(s)")
    for (s, d), k in sorted(frag.edges.items(), key=lambda e: (order[e[0][0]], e)):
        print(f"  {frag.vertex(s).label:>14} {'=' * k}> {frag.vertex(d).label}")
    if which == "1":
        m = frag.vertex(frag.predecessors(frag.find(standard_module(a, "simple", 0)))[0][0]).module
        print("M = A*:", is_isomorphic(m, standard_module(a, "injective", 0)) is not None)
    else:
        print("P_2 = E_1:", is_isomorphic(standard_module(a, "projective", 1), standard_module(a, "injective", 0)) is not None)
        print("U_2 = tU_1:", is_isomorphic(standard_module(a, "simple", 1), tau_inverse(standard_module(a, "simple", 0))) is not None)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / f"example{which}.dot").write_text(to_dot(frag))
    (out / f"example{which}.json").write_text(frag.to_json() + "\n")
    print(f"wrote {out}/example{which}.dot and .json")


if __name__ == "__main__":
    main(sys.argv[1:])
