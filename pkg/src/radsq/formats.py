"""Text formats: module files.

A module file reads::

    module
    dim 1 2
    map a1 1; 0
    map b 0 1

Maps that are omitted are zero; vertices and arrows are those of the
algebra the file is read against.
"""

from __future__ import annotations

from . import exactla as la
from .quivalg import Algebra
from .repmod.rep import Rep


def parse_module(text: str, a: Algebra) -> Rep:
    dims = None
    maps: dict[str, str] = {}
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "module" and not rest:
            seen_header = True
        elif key == "dim":
            try:
                dims = [int(x) for x in rest.split()]
            except ValueError:
                raise ValueError(f"line {lineno}: bad dimension vector {rest!r}") from None
        elif key == "map":
            name, _, mat = rest.partition(" ")
            if not name:
                raise ValueError(f"line {lineno}: map without arrow name")
            if name in maps:
                raise ValueError(f"line {lineno}: map {name!r} given twice")
            maps[name] = mat
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw.strip()!r}")
    if not seen_header or dims is None:
        raise ValueError("module file needs 'module' and 'dim' lines")
    if len(dims) != a.n:
        raise ValueError(f"expected {a.n} dimensions, got {len(dims)}")
    mats = {}
    for name, mat in maps.items():
        try:
            ar = a.arrows[a.arrow_index(name)]
        except KeyError:
            raise ValueError(f"unknown arrow {name!r}") from None
        mats[name] = la.parse_matrix(mat, a.p, dims[ar.target], dims[ar.source])
    return Rep.from_maps(a, dims, mats)


def format_module(m: Rep) -> str:
    lines = ["module", "dim " + " ".join(str(d) for d in m.dims)]
    for ar, f in zip(m.algebra.arrows, m.maps):
        if f.size:
            lines.append(f"map {ar.name} {la.format_matrix(f)}")
    return "\n".join(lines) + "\n"
