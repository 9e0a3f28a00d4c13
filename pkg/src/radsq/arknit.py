"""Knitting Auslander-Reiten components and gluing them into ``AR(A)``.

Knitting runs over a hereditary radical-square-zero algebra (in practice
``Gamma(A)``).  It starts from the indecomposable projectives, with the
edges into ``P`` read off the decomposition of ``rad P``, and then adds one
mesh ``X -> (+) Y -> tau^-1 X`` at a time.  A vertex is processed once all
of its predecessors are; ``tau^-1 X`` comes from the module-level
translate, and the mesh dimension identity is checked each time.

``rank`` is 0 for vertices without predecessors and ``1 + max`` over the
predecessors otherwise; a knit of depth ``d`` keeps the vertices of rank
``< d``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import exactla as la
from .artheory import InjectiveInput, ProjectiveInput, tau, tau_inverse
from .quivalg import Algebra, gamma_labels, standard_module
from .repmod.decompose import decompose, is_isomorphic, iso_indecomposable
from .repmod.rep import Rep, dualize, parts
from .stabfun import phi_inverse

DEFAULT_DEPTH = 8


class KnitError(RuntimeError):
    pass


class GlueError(RuntimeError):
    pass


@dataclass
class ARVertex:
    id: int
    module: Rep
    label: str = ""
    aliases: tuple[str, ...] = ()
    flags: frozenset[str] = frozenset()
    rank: int = 0

    @property
    def dims(self) -> tuple[int, ...]:
        return self.module.dims


@dataclass
class GlueMap:
    mapped: dict[tuple[int, int], int] = field(default_factory=dict)  # (fragment, vertex) -> new id
    deleted: dict[tuple[int, int], str] = field(default_factory=dict)  # (fragment, vertex) -> simple name
    added: dict[int, int] = field(default_factory=dict)  # i -> id of P_i
    accumulated: list[int] = field(default_factory=list)  # P_i whose tU_j coincide for several j


@dataclass
class ARFragment:
    algebra: Algebra
    vertices: list[ARVertex] = field(default_factory=list)
    edges: dict[tuple[int, int], int] = field(default_factory=dict)
    frontier: set[int] = field(default_factory=set)
    complete: bool = True
    glue_map: GlueMap | None = None

    def vertex(self, vid: int) -> ARVertex:
        return self.vertices[vid]

    def find(self, m: Rep) -> int | None:
        for v in self.vertices:
            if v.dims == m.dims and iso_indecomposable(v.module, m) is not None:
                return v.id
        return None

    def add(self, m: Rep, rank: int = 0) -> int:
        vid = len(self.vertices)
        self.vertices.append(ARVertex(vid, m, flags=module_flags(m), rank=rank))
        return vid

    def add_edge(self, src: int, dst: int, mult: int) -> None:
        if mult:
            self.edges[(src, dst)] = self.edges.get((src, dst), 0) + mult

    def predecessors(self, vid: int) -> list[tuple[int, int]]:
        return sorted((s, k) for (s, d), k in self.edges.items() if d == vid)

    def successors(self, vid: int) -> list[tuple[int, int]]:
        return sorted((d, k) for (s, d), k in self.edges.items() if s == vid)

    def by_label(self, name: str) -> ARVertex:
        for v in self.vertices:
            if v.label == name or name in v.aliases:
                return v
        raise KeyError(name)

    def multiplicity(self, src: str | int, dst: str | int) -> int:
        s = src if isinstance(src, int) else self.by_label(src).id
        d = dst if isinstance(dst, int) else self.by_label(dst).id
        return self.edges.get((s, d), 0)

    def components(self) -> list[list[int]]:
        """Connected components of the underlying graph, as sorted id lists."""
        parent = list(range(len(self.vertices)))

        def root(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, d in self.edges:
            parent[root(s)] = root(d)
        groups: dict[int, list[int]] = {}
        for v in range(len(self.vertices)):
            groups.setdefault(root(v), []).append(v)
        return sorted(groups.values())

    def to_json(self) -> str:
        a = self.algebra
        data = {
            "algebra": {
                "field": a.p,
                "vertices": a.n,
                "arrows": [[ar.name, ar.source + 1, ar.target + 1] for ar in a.arrows],
            },
            "vertices": [
                {
                    "id": v.id,
                    "label": v.label,
                    "aliases": list(v.aliases),
                    "dim": list(v.dims),
                    "flags": sorted(v.flags),
                    "maps": {
                        ar.name: la.format_matrix(f)
                        for ar, f in zip(a.arrows, v.module.maps)
                        if f.size
                    },
                }
                for v in self.vertices
            ],
            "edges": [{"src": s, "dst": d, "mult": k} for (s, d), k in sorted(self.edges.items())],
            "frontier": sorted(self.frontier),
            "complete": self.complete,
        }
        if self.glue_map is not None:
            data["glue"] = {
                "projectives": {str(i + 1): vid for i, vid in sorted(self.glue_map.added.items())},
                "deleted": sorted(set(self.glue_map.deleted.values())),
                "accumulated": [i + 1 for i in self.glue_map.accumulated],
            }
        return json.dumps(data, indent=2, ensure_ascii=False)


def module_flags(m: Rep) -> frozenset[str]:
    from .repmod.presentation import min_proj_presentation

    flags = set()
    if not any(min_proj_presentation(m).minus):
        flags.add("projective")
    if not any(min_proj_presentation(dualize(m)).minus):
        flags.add("injective")
    if m.total_dim == 1:
        flags.add("simple")
    return frozenset(flags)


def _rank_of(frag: ARFragment, vid: int) -> int:
    preds = frag.predecessors(vid)
    return 1 + max(frag.vertex(s).rank for s, _ in preds) if preds else 0


def _find_or_add(frag: ARFragment, m: Rep) -> int:
    vid = frag.find(m)
    return vid if vid is not None else frag.add(m)


def knit(b: Algebra, depth: int = DEFAULT_DEPTH, seeds: Iterable[int] | None = None,
         labels: bool = True) -> ARFragment:
    """Preprojective fragment of ``AR(B)`` up to rank ``depth - 1``.

    ``seeds`` restricts the starting projectives to the given vertices,
    which selects the components they belong to.
    """
    if not b.is_hereditary:
        raise ValueError("knitting needs a hereditary algebra (no composable arrows), e.g. Gamma(A)")
    frag = ARFragment(b)
    seeds = list(range(b.n)) if seeds is None else sorted(set(seeds))
    seeds = _close_seeds(b, seeds)
    projs = [_find_or_add(frag, standard_module(b, "projective", v)) for v in seeds]
    for pid in projs:
        rad = parts(frag.vertex(pid).module).rad
        if rad.total_dim == 0:
            continue
        for y, k in decompose(rad).summands:
            yid = frag.find(y)
            if yid is None:
                raise KnitError("radical summand of a projective is not projective")
            frag.add_edge(yid, pid, k)
    # projectives form an acyclic graph; rank them in dependency order
    pending = set(projs)
    while pending:
        ready = [v for v in sorted(pending) if all(s not in pending for s, _ in frag.predecessors(v))]
        for v in ready:
            frag.vertex(v).rank = _rank_of(frag, v)
            pending.discard(v)
    processed: set[int] = set()
    open_: set[int] = set()
    while True:
        todo = [
            v.id for v in frag.vertices
            if v.id not in processed and v.id not in open_
            and all(s in processed or s in open_ for s, _ in frag.predecessors(v.id))
        ]
        if not todo:
            break
        todo.sort(key=lambda vid: (frag.vertex(vid).rank, vid))
        for vid in todo:
            x = frag.vertex(vid)
            if any(s in open_ for s, _ in frag.predecessors(vid)):
                open_.add(vid)
                continue
            if "injective" in x.flags:
                processed.add(vid)
                continue
            middle = frag.successors(vid)
            rank_z = 1 + max((frag.vertex(y).rank for y, _ in middle), default=-1)
            if rank_z >= depth:
                open_.add(vid)
                continue
            z = tau_inverse(x.module)
            expect = [
                sum(k * frag.vertex(y).dims[i] for y, k in middle) - x.dims[i]
                for i in range(b.n)
            ]
            if list(z.dims) != expect:
                raise KnitError(
                    f"mesh at vertex {vid} (dims {x.dims}): tau^-1 has dims {z.dims}, "
                    f"middle term predicts {tuple(expect)}"
                )
            zid = frag.find(z)
            if zid is None:
                zid = frag.add(z, rank_z)
            for y, k in middle:
                frag.add_edge(y, zid, k)
            processed.add(vid)
    unreached = {v.id for v in frag.vertices} - processed
    frag.frontier = unreached
    frag.complete = not unreached
    if labels:
        assign_labels(frag)
    return frag


def _close_seeds(b: Algebra, seeds: list[int]) -> list[int]:
    """Extend ``seeds`` to whole connected components of the quiver."""
    comp = set(seeds)
    grow = True
    while grow:
        grow = False
        for ar in b.arrows:
            if (ar.source in comp) != (ar.target in comp):
                comp |= {ar.source, ar.target}
                grow = True
    return sorted(comp)


def knit_backward(b: Algebra, depth: int = DEFAULT_DEPTH, seeds: Iterable[int] | None = None,
                  labels: bool = True) -> ARFragment:
    """Preinjective fragment: the dual of the preprojective fragment of ``B^op``."""
    op = knit(b.opposite, depth, seeds, labels=False)
    frag = ARFragment(b)
    for v in op.vertices:
        frag.vertices.append(ARVertex(v.id, dualize(v.module), flags=module_flags(dualize(v.module)), rank=v.rank))
    for (s, d), k in op.edges.items():
        frag.edges[(d, s)] = k
    frag.frontier = set(op.frontier)
    frag.complete = op.complete
    if labels:
        assign_labels(frag)
    return frag


def fragment_from_modules(b: Algebra, modules: Sequence[Rep]) -> ARFragment:
    """A fragment with the given vertices and no edges (e.g. tube mouths)."""
    frag = ARFragment(b)
    for m in modules:
        _find_or_add(frag, m)
    assign_labels(frag)
    return frag


# -- labels -------------------------------------------------------------------

def _tau_name(k: int, base: str) -> str:
    if k < 0:
        return f"tau^{k} {base}"
    return f"tau {base}" if k == 1 else f"tau^{k} {base}"


def _is_gamma(b: Algebra) -> bool:
    return b.n % 2 == 0 and b.quiver.labels == gamma_labels(b.n // 2)


def _standard_names(b: Algebra) -> tuple[list, list, list]:
    """``(named, backward_bases, forward_bases)`` for the label table."""
    if _is_gamma(b):
        n = b.n // 2
        named = []
        for i in range(n):
            named.append((f"S+_{i + 1}", standard_module(b, "simple", i)))
        for i in range(n):
            named.append((f"S-_{i + 1}", standard_module(b, "simple", n + i)))
        for j in range(n):
            named.append((f"P-_{j + 1}", standard_module(b, "projective", n + j)))
        for j in range(n):
            named.append((f"E+_{j + 1}", standard_module(b, "injective", j)))
        minus = named[:n] + named[2 * n : 3 * n]
        plus = named[n : 2 * n] + named[3 * n :]
        return named, [(nm, m, 1) for nm, m in minus], [(nm, m, 1) for nm, m in plus]
    n = b.n
    names = [b.label(i) for i in range(n)]
    proj = [(f"P_{names[i]}", standard_module(b, "projective", i)) for i in range(n)]
    inj = [(f"E_{names[i]}", standard_module(b, "injective", i)) for i in range(n)]
    simp = [(f"U_{names[i]}", standard_module(b, "simple", i)) for i in range(n)]
    tus = []
    for i in range(n):
        if b.in_arrows[i]:
            tus.append((f"tU_{names[i]}", tau_inverse(simp[i][1])))
    named = proj + inj + simp + tus
    backward = [(nm, m, 1) for nm, m in proj] + [(nm, m, 2) for nm, m in simp]
    forward = [(nm, m, 1) for nm, m in inj] + [(nm, m, 1) for nm, m in simp]
    return named, backward, forward


def label_table(b: Algebra, max_dim: int, max_steps: int = 32) -> list[tuple[str, Rep]]:
    """Named modules up to ``max_dim``: the standard ones, then ``tau`` powers by step."""
    named, backward, forward = _standard_names(b)
    orbit: list[tuple[int, str, Rep]] = []
    for sign, bases, step in ((-1, backward, tau_inverse), (1, forward, tau)):
        for base, m, start in bases:
            x = m
            for k in range(1, max_steps + 1):
                try:
                    x = step(x)
                except (ProjectiveInput, InjectiveInput, ValueError):
                    break
                if x.total_dim > max_dim:
                    break
                if k >= start:
                    orbit.append((k, _tau_name(sign * k, base), x))
    orbit.sort(key=lambda t: t[0])
    return [(nm, m) for nm, m in named if m.total_dim <= max_dim] + [(nm, m) for _, nm, m in orbit]


def assign_labels(frag: ARFragment) -> None:
    if not frag.vertices:
        return
    max_dim = max(v.module.total_dim for v in frag.vertices)
    table = label_table(frag.algebra, max_dim)
    serial = 0
    for v in frag.vertices:
        names = [nm for nm, m in table if m.dims == v.dims and iso_indecomposable(m, v.module) is not None]
        names = list(dict.fromkeys(names))
        if not names:
            serial += 1
            names = [f"X({','.join(map(str, v.dims))})#{serial}"]
        v.label = names[0]
        v.aliases = tuple(names[1:])


# -- gluing -------------------------------------------------------------------

def glue(fragments: ARFragment | Sequence[ARFragment], a: Algebra) -> ARFragment:
    """``AR(A)`` from fragments of ``AR(Gamma(A))``.

    Simples of ``Gamma`` are deleted, every other vertex ``V`` becomes
    ``Phi^-1(V)``, and each ``P_i`` is inserted with ``h_ij`` edges
    ``U_j -> P_i`` and ``P_i -> tU_j``.
    """
    if isinstance(fragments, ARFragment):
        fragments = [fragments]
    n = a.n
    out = ARFragment(a)
    gmap = GlueMap()
    for fi, frag in enumerate(fragments):
        if frag.algebra.n != 2 * n:
            raise GlueError("fragment is not over Gamma(A)")
        for v in frag.vertices:
            key = (fi, v.id)
            if v.module.total_dim == 1:
                gmap.deleted[key] = v.label or "simple"
                continue
            m = phi_inverse(a, v.module)
            vid = out.find(m)
            if vid is None:
                vid = out.add(m)
            gmap.mapped[key] = vid
            if v.id in frag.frontier:
                out.frontier.add(vid)
        for (s, d), k in frag.edges.items():
            if (fi, s) in gmap.mapped and (fi, d) in gmap.mapped:
                e = (gmap.mapped[(fi, s)], gmap.mapped[(fi, d)])
                out.edges[e] = max(out.edges.get(e, 0), k)
    # vertices reached as interior somewhere are no longer frontier
    interior = {
        gmap.mapped[(fi, v.id)]
        for fi, frag in enumerate(fragments)
        for v in frag.vertices
        if (fi, v.id) in gmap.mapped and v.id not in frag.frontier
    }
    out.frontier -= interior

    def locate(m: Rep, what: str) -> int:
        vid = out.find(m)
        if vid is None:
            raise GlueError(f"{what} is missing from the fragments; knit deeper")
        return vid

    for i in range(n):
        pm = standard_module(a, "projective", i)
        pid = out.find(pm)
        gmap.added[i] = pid if pid is not None else out.add(pm)
    for i in range(n):
        pid = gmap.added[i]
        seen_t: set[int] = set()
        for j in range(n):
            h = a.arrow_count(i, j)
            if not h:
                continue
            u = standard_module(a, "simple", j)
            out.edges[(locate(u, f"U_{j + 1}"), pid)] = h
            tid = locate(tau_inverse(u), f"tU_{j + 1}")
            if tid in seen_t:
                # several tU_j coincide; their multiplicities add up
                gmap.accumulated.append(i)
                out.edges[(pid, tid)] += h
            else:
                out.edges[(pid, tid)] = h
            seen_t.add(tid)
    out.complete = not out.frontier and all(f.complete for f in fragments)
    out.glue_map = gmap
    assign_labels(out)
    return out


def to_dot(frag: ARFragment) -> str:
    if not frag.vertices:
        return "digraph AR { }\n"
    lines = ["digraph AR {", "  rankdir=LR;"]
    for v in frag.vertices:
        parts_ = [v.label or f"v{v.id}", "(" + ",".join(map(str, v.dims)) + ")"]
        if v.flags:
            parts_.append(",".join(sorted(v.flags)))
        text = "\\n".join(parts_).replace('"', '\\"')
        style = ', style=dashed' if v.id in frag.frontier else ""
        lines.append(f'  v{v.id} [label="{text}"{style}];')
    for (s, d), k in sorted(frag.edges.items()):
        attr = f' [label="×{k}"]' if k > 1 else ""
        lines.append(f"  v{s} -> v{d}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def mesh_violations(frag: ARFragment) -> list[int]:
    """Interior non-projective vertices ``Z`` where ``tau Z + Z != sum of predecessors``."""
    bad = []
    for v in frag.vertices:
        if "projective" in v.flags or v.id in frag.frontier:
            continue
        preds = frag.predecessors(v.id)
        if not preds:
            continue
        try:
            tz = tau(v.module)
        except ProjectiveInput:
            continue
        total = [sum(k * frag.vertex(s).dims[i] for s, k in preds) for i in range(frag.algebra.n)]
        if [x + y for x, y in zip(tz.dims, v.dims)] != total:
            bad.append(v.id)
    return bad


__all__ = [
    "ARFragment",
    "ARVertex",
    "DEFAULT_DEPTH",
    "GlueError",
    "GlueMap",
    "KnitError",
    "assign_labels",
    "fragment_from_modules",
    "glue",
    "knit",
    "knit_backward",
    "label_table",
    "mesh_violations",
    "to_dot",
]
