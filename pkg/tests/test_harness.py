import io
import itertools
import os

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import algebra, universe
from radsq import exactla as la
from radsq.formats import format_module, parse_module
from radsq.harness import oracle
from radsq.harness.cli import main
from radsq.harness.oracle import Infeasible, count_rref_full_rank, enumerate_indecomposables, rref_full_rank
from radsq.harness.verify import corrupted_phi, verify
from radsq.quivalg import Algebra, Arrow, Quiver, standard_module
from radsq.repmod.decompose import is_isomorphic
from radsq.repmod.rep import encode

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "data")


def q(name):
    return os.path.join(DATA, name + ".quiver")


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_kronecker_bound2():
    u = enumerate_indecomposables(algebra("kronecker"), 2)
    assert u.exhaustive
    assert sorted(m.dims for m in u) == [(0, 1), (1, 0), (1, 1), (1, 1), (1, 1)]


@pytest.mark.parametrize("name", ["ex1", "ex2", "random0", "kronecker"])
def test_bound1_is_simples(name):
    a = algebra(name)
    u = enumerate_indecomposables(a, 1)
    assert sorted(m.dims for m in u) == sorted(standard_module(a, "simple", i).dims for i in range(a.n))


def test_example2_bound2_contents():
    a = algebra("ex2")
    u = enumerate_indecomposables(a, 2)
    for m in (standard_module(a, "simple", 0), standard_module(a, "simple", 1), standard_module(a, "projective", 1)):
        assert u.find(m) is not None


@pytest.mark.parametrize("name", ["ex1", "ex2", "random0"])
def test_universe_restriction(name):
    big, small = universe(name, 4), universe(name, 3)
    assert [encode(m) for m in big.restrict(3)] == [encode(m) for m in small]


@pytest.mark.parametrize("rows,cols,p", [(0, 3, 2), (1, 3, 2), (2, 4, 2), (2, 3, 3), (3, 3, 2), (4, 3, 2)])
def test_rref_full_rank_count(rows, cols, p):
    listed = list(rref_full_rank(rows, cols, p))
    assert len(listed) == count_rref_full_rank(rows, cols, p)
    # brute force: distinct rref forms of full-rank matrices
    forms = set()
    for flat in itertools.product(range(p), repeat=rows * cols):
        m = np.array(flat, dtype=np.int64).reshape(rows, cols)
        r, rk, _ = la.rref(m, p)
        if rk == rows:
            forms.add(r.tobytes())
    assert {m.tobytes() for m in listed} == forms


def test_guard_trips_in_exhaustive_mode():
    a = Algebra(Quiver(2, tuple(Arrow(f"a{k}", 0, 1) for k in range(6))), 2)
    rng = np.random.default_rng(0)
    with pytest.raises(Infeasible):
        oracle._candidates(a, (3, 0), (0, 4), "exhaustive", rng)
    cands, exact = oracle._candidates(a, (3, 0), (0, 4), "auto", rng)
    assert not exact and next(iter(cands))


def test_thread_count_does_not_change_result(monkeypatch):
    a = algebra("ex2")
    outs = []
    for threads in ("1", "2"):
        monkeypatch.setenv("RADSQ_THREADS", threads)
        outs.append([encode(m) for m in enumerate_indecomposables(a, 4)])
    assert outs[0] == outs[1]


def test_verify_example_smoke():
    rep = verify(algebra("ex2"), 3, seed=1)
    assert rep.passed, rep.text()
    assert all(line.startswith("PASS") for line in rep.text().splitlines() if line[:4] in ("PASS", "FAIL"))


def test_mutation_fails_with_replayable_counterexample():
    a = algebra("ex1")
    rep = verify(a, 4, seed=1, phi_fn=corrupted_phi)
    assert not rep.passed
    bad = rep["phi-bijection"]
    assert not bad.passed and bad.counterexample
    from radsq.quivalg import gamma
    for text in bad.counterexample:
        try:
            parse_module(text, a)
        except ValueError:
            parse_module(text, gamma(a))


def test_verify_is_pure():
    a = algebra("ex1")
    from radsq.harness.verify import Suite
    s = Suite(a, 3, 0)
    before = [encode(m) for m in s.ua] + [encode(m) for m in s.ug]
    verify(a, 3, suite=s)
    assert before == [encode(m) for m in s.ua] + [encode(m) for m in s.ug]


def test_module_format_roundtrip():
    for m in universe("ex2"):
        back = parse_module(format_module(m), m.algebra)
        assert encode(back) == encode(m)
    with pytest.raises(ValueError):
        parse_module("module\ndim 1\nmap x 1\n", algebra("ex2"))
    with pytest.raises(ValueError):
        parse_module("module\ndim 1 1\nmap zz 1\n", algebra("ex2"))


# -- CLI ---------------------------------------------------------------------

def test_cli_species():
    code, out = run("species", q("ex1"))
    assert code == 0
    assert "vertex 1 = 1+" in out and out.count("arrow") == 2
    assert "arrow x 2 1" in out and "arrow y 2 1" in out


def test_cli_field_override():
    code, out = run("species", q("ex1"), "--field", "3")
    assert code == 0 and out.startswith("field 3")


def test_cli_usage_errors():
    assert run("species")[0] == 2
    assert run("nosuch", q("ex1"))[0] == 2
    assert run("species", "/nonexistent.quiver")[0] == 2
    assert run("ass", q("ex2"), "--simple", "7")[0] == 2


def test_cli_tau_of_projective_fails(tmp_path):
    mod = tmp_path / "p.mod"
    mod.write_text(format_module(standard_module(algebra("ex1"), "projective", 0)))
    assert run("tau", q("ex1"), str(mod))[0] == 1


def test_cli_roundtrip_phi(tmp_path):
    u = tmp_path / "u.mod"
    u.write_text("module\ndim 1\n")
    code, out = run("phi", q("ex1"), str(u))
    assert code == 0 and "dim 1 2" in out
    v = tmp_path / "v.mod"
    v.write_text(out)
    code, back = run("phi-inv", q("ex1"), str(v))
    a = algebra("ex1")
    assert code == 0 and is_isomorphic(parse_module(back, a), standard_module(a, "simple", 0)) is not None


def test_cli_glue_deterministic(tmp_path):
    d1, d2 = tmp_path / "a.dot", tmp_path / "b.dot"
    c1, o1 = run("glue", q("ex2"), "--depth", "6", "--dot", str(d1))
    c2, o2 = run("glue", q("ex2"), "--depth", "6", "--dot", str(d2))
    assert c1 == c2 == 0 and o1 == o2
    assert d1.read_text() == d2.read_text()
    assert d1.read_text().startswith("digraph AR {")


def test_cli_verify_and_enumerate():
    code, out = run("verify", q("ex1"), "--bound", "3", "--seed", "1")
    assert code == 0 and "FAIL" not in out
    code, out = run("enumerate", q("kronecker"), "--bound", "2")
    assert code == 0 and out.startswith("# 5 indecomposables")


def test_cli_hom_and_ass(tmp_path):
    u = tmp_path / "u.mod"
    u.write_text("module\ndim 1\n")
    code, out = run("hom", q("ex1"), str(u), str(u))
    assert code == 0 and "stable 1" in out and "flat-gamma 1" in out
    code, out = run("ass", q("ex2"), "--simple", "2")
    assert code == 0 and "exact and non-split: yes" in out
