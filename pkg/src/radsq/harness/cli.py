"""Command line interface: ``radsq <command> QUIVER [...]``.

Exit status is 0 on success, 1 when a check fails and 2 for usage or
input errors.  Module files for ``Gamma(A)`` list the vertices as
``1+ .. n+ 1- .. n-`` and reuse the arrow names of ``A``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .. import arknit
from ..artheory import InjectiveInput, ProjectiveInput, ass_simple, tau, tau_inverse
from ..formats import format_module, parse_module
from ..quivalg import Algebra, format_quiver, gamma, parse_quiver, standard_module
from ..repmod.decompose import decompose
from ..repmod.rep import hom_dim
from ..stabfun import flat_hom_dim, phi, phi_inverse, stable_hom_dim
from .oracle import Infeasible, enumerate_indecomposables
from .verify import verify


class UsageError(Exception):
    pass


def _algebra(args) -> Algebra:
    try:
        text = Path(args.quiver).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {args.quiver}: {e.strerror}") from None
    a = parse_quiver(text)
    if args.field is not None:
        a = Algebra(a.quiver, args.field)
    return a


def _module(path: str, a: Algebra):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse_module(text, a)


def _vertex(a: Algebra, j: int) -> int:
    if not 1 <= j <= a.n:
        raise UsageError(f"vertex {j} out of range 1..{a.n}")
    return j - 1


def _write_dot(args, frag) -> None:
    if args.dot:
        Path(args.dot).write_text(arknit.to_dot(frag))


def cmd_species(args, out):
    out.write(format_quiver(gamma(_algebra(args))))
    return 0


def cmd_std(args, out):
    a = _algebra(args)
    kinds = ["projective", "injective", "simple"] if args.kind == "all" else [args.kind]
    verts = [_vertex(a, args.vertex)] if args.vertex else range(a.n)
    letter = {"projective": "P", "injective": "E", "simple": "U"}
    for kind in kinds:
        for i in verts:
            out.write(f"# {letter[kind]}_{i + 1}\n")
            out.write(format_module(standard_module(a, kind, i)))
    return 0


def cmd_phi(args, out):
    a = _algebra(args)
    out.write(format_module(phi(a, _module(args.module, a))))
    return 0


def cmd_phi_inv(args, out):
    a = _algebra(args)
    out.write(format_module(phi_inverse(a, _module(args.module, gamma(a)))))
    return 0


def cmd_tau(args, out):
    a = _algebra(args)
    m = _module(args.module, a)
    out.write(format_module(tau_inverse(m) if args.inverse else tau(m)))
    return 0


def cmd_ass(args, out):
    a = _algebra(args)
    j = _vertex(a, args.simple)
    seq = ass_simple(a, j, "toSimple" if args.dual else "fromSimple")
    for name, m in (("left", seq.left), ("middle", seq.middle), ("right", seq.right)):
        out.write(f"# {name}\n")
        out.write(format_module(m))
    ok = seq.is_exact() and not seq.is_split()
    out.write(f"# exact and non-split: {'yes' if ok else 'no'}\n")
    return 0 if ok else 1


def cmd_knit(args, out):
    a = _algebra(args)
    b = a if args.self else gamma(a)
    fn = arknit.knit_backward if args.backward else arknit.knit
    frag = fn(b, args.depth)
    out.write(frag.to_json() + "\n")
    _write_dot(args, frag)
    return 0


def cmd_glue(args, out):
    a = _algebra(args)
    g = gamma(a)
    frag = arknit.glue([arknit.knit(g, args.depth), arknit.knit_backward(g, args.depth)], a)
    out.write(frag.to_json() + "\n")
    _write_dot(args, frag)
    return 0


def cmd_decompose(args, out):
    a = _algebra(args)
    d = decompose(_module(args.module, a), args.seed)
    for x, k in d.summands:
        out.write(f"# multiplicity {k}\n")
        out.write(format_module(x))
    return 0


def cmd_hom(args, out):
    a = _algebra(args)
    m, n = _module(args.source, a), _module(args.target, a)
    rep = stable_hom_dim(a, m, n)
    out.write(f"hom {hom_dim(m, n)}\n")
    out.write(f"factoring-through-projectives {rep.dimProjFactoring}\n")
    out.write(f"stable {rep.dimStable}\n")
    out.write(f"flat-gamma {flat_hom_dim(phi(a, m), phi(a, n))}\n")
    return 0


def cmd_verify(args, out):
    a = _algebra(args)
    report = verify(a, args.bound, args.seed)
    out.write(report.text())
    return 0 if report.passed else 1


def cmd_enumerate(args, out):
    a = _algebra(args)
    b = gamma(a) if args.gamma else a
    uni = enumerate_indecomposables(b, args.bound, args.seed, "exhaustive" if args.exhaustive else "auto")
    out.write(f"# {len(uni)} indecomposables, bound {args.bound}, "
              f"{'exhaustive' if uni.exhaustive else 'non-exhaustive (sampled)'}\n")
    for m in uni:
        out.write(format_module(m))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("quiver", help="quiver file")
    common.add_argument("--field", type=int, help="override the prime of the quiver file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--bound", type=int, default=4, help="total dimension bound")
    common.add_argument("--depth", type=int, default=arknit.DEFAULT_DEPTH)
    common.add_argument("--dot", metavar="PATH", help="also write a Graphviz file")

    parser = argparse.ArgumentParser(
        prog="radsq",
        description="radical-square-zero algebras and their AR theory",
        epilog="knit and glue cover the preprojective and preinjective components only; regular "
               "components (tubes) are sampled at dimension vectors (1,1)..(d,d) by the oracle, not knitted.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    add("species", cmd_species, "print Gamma(A) as a quiver file")
    p = add("std", cmd_std, "print standard modules")
    p.add_argument("--kind", choices=["projective", "injective", "simple", "all"], default="all")
    p.add_argument("--vertex", type=int)
    add("phi", cmd_phi, "Phi(M)").add_argument("module")
    add("phi-inv", cmd_phi_inv, "Phi^-1(V) for a Gamma-module file").add_argument("module")
    p = add("tau", cmd_tau, "AR translate")
    p.add_argument("module")
    p.add_argument("--inverse", action="store_true")
    p = add("ass", cmd_ass, "almost split sequence with a simple end")
    p.add_argument("--simple", type=int, required=True)
    p.add_argument("--dual", action="store_true", help="the sequence ending in U_j")
    p = add("knit", cmd_knit, "knit AR(Gamma) (or AR(A) with --self)")
    p.add_argument("--backward", action="store_true")
    p.add_argument("--self", action="store_true")
    add("glue", cmd_glue, "glue AR(A) from AR(Gamma)")
    add("decompose", cmd_decompose, "Krull-Schmidt decomposition").add_argument("module")
    p = add("hom", cmd_hom, "hom dimensions")
    p.add_argument("source")
    p.add_argument("target")
    add("verify", cmd_verify, "run the oracle suite")
    p = add("enumerate", cmd_enumerate, "list indecomposables up to --bound")
    p.add_argument("--gamma", action="store_true")
    p.add_argument("--exhaustive", action="store_true", help="fail instead of sampling")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args, out)
    except (UsageError, ValueError, Infeasible) as e:
        if isinstance(e, (ProjectiveInput, InjectiveInput)):
            print(f"error: {e}", file=sys.stderr)
            return 1
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (arknit.KnitError, arknit.GlueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
