"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``[PASS]`` / ``[FAIL]`` line (visible with ``-s``)
and then asserts. Run with::

    pytest tests/test_acceptance.py -v -s
"""

import tokenize
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

from ptealg import cartan, grassmann, matrix_model, pte, separation, symfunc, weights
from ptealg.linalg import ExactMatrix
from ptealg.poly import SparsePoly

SRC = Path(pte.__file__).resolve().parent


def report(label, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" :: {detail}" if detail not in ("", "[]") else ""))
    assert ok, detail or label


def test_c01_symmetric_function_oracles():
    bad = []
    for n in range(1, 5):
        for t in range(7):
            for lam in symfunc.partitions_of(t, max_parts=n):
                if symfunc.schur_jacobi_trudi(lam, n) != symfunc.schur_alternant(lam, n):
                    bad.append(("schur", lam, n))
    for a in range(7):
        for b in range(7 - a):
            for mu in symfunc.partitions_of(a):
                for nu in symfunc.partitions_of(b):
                    n = max(a + b, 1)
                    lhs = symfunc.schur(mu, n) * symfunc.schur(nu, n)
                    rhs = SparsePoly.zero(n)
                    for lam, c in symfunc.lr_expand(mu, nu).items():
                        rhs = rhs + symfunc.schur(lam, n) * c
                    if lhs != rhs:
                        bad.append(("lr", mu, nu))
    report("1 Schur routes agree; LR matches multiplication", not bad, str(bad[:5]))


def test_c02_no_solutions_at_degree_equal_size():
    ok2 = pte.theorem29_validate(2, 8)
    ok3 = pte.theorem29_validate(3, 5)
    report("2 no non-trivial solution with degree = size", ok2 and ok3, f"size2={ok2} size3={ok3}")


def test_c03_ideal_membership_biconditional():
    bad = []
    for k, n in ((1, 2), (1, 3), (2, 4), (2, 5)):
        for t in range(7):
            for lam in symfunc.partitions_of(t):
                member = cartan.ideal_membership(cartan.schur_in_first_k(lam, k, n), n)
                if member == symfunc.in_box(lam, k, n - k):
                    bad.append((k, n, lam))
    report("3 Schur in ideal iff outside the box", not bad, str(bad[:5]))


def test_c04_free_basis():
    failed = []
    for k, n in ((1, 2), (1, 3), (2, 4), (2, 5)):
        rep = cartan.verify_free_basis(k, n, 5)
        if not rep.passed:
            failed.append((k, n, [c.name for c in rep.failures()]))
    report("4 restricted free-basis checks", not failed, str(failed))


def test_c05_grassmannian_presentation():
    failed = []
    for k, n in ((1, 3), (2, 4), (2, 5), (3, 6)):
        rep = grassmann.verify_presentation(k, n)
        if not rep.passed or not any("sign convention" in note for note in rep.notes):
            failed.append((k, n, [c.name for c in rep.failures()]))
    report("5 Grassmannian presentation", not failed, str(failed))


def test_c06_matrix_model():
    problems = []
    c = matrix_model.casimir(matrix_model.fundamental_rep(2, 1), 2).scalar_value()
    if c != Fraction(3, 2):
        problems.append(("omega1 n=2", c))
    for n in range(2, 6):
        for k in (1, 2):
            if k >= n:
                continue
            val = matrix_model.casimir(matrix_model.fundamental_rep(n, k), 2).scalar_value()
            want = weights.s_functional(weights.weight_to_pattern(weights.fundamental(n, k)), 2)
            if val != want:
                problems.append(("casimir", n, k, val, want))
    a = matrix_model.fundamental_rep(2, 1)
    M = matrix_model.kostant_matrix(a, a, 2)
    for value, mult in ((1, 3), (-3, 1)):
        if (M - ExactMatrix.identity(4).scale(value)).nullity() != mult:
            problems.append(("kostant", value))
    for n in range(2, 5):
        for k in range(1, n):
            for j in range(1, n):
                if not matrix_model.spectrum_verify(n, k, j, 2).passed:
                    problems.append(("spectrum", n, k, j))
    report("6 matrix-model cross-checks", not problems, str(problems))


def test_c07_separation_index():
    wrong_t0, deep = [], []
    for n in range(2, 7):
        for k in range(1, n // 2 + 1):
            for a in product((1, 2), repeat=n - 1):
                t = separation.t0(n, k, a)
                if t != k + 1:
                    wrong_t0.append((n, k, a, t))
                if separation.find_collisions(n, k, a, k + 1):
                    deep.append((n, k, a))
    detail = f"{len(wrong_t0)} cases with t0 != k+1, e.g. {wrong_t0[:3]}; {len(deep)} depth-(k+1) collisions"
    report("7 separation index equals k+1", not wrong_t0 and not deep, detail)


def test_c08_extraction_example():
    X, Y, r, s = pte.extract_from_collision(4, 2, weights.rho(4), (1, 4), (2, 3))
    ok, top = pte.verify(X, Y, 1)
    good = (X, Y, r, s) == ((2, -4), (0, -2), 0, 1) and ok and top == 1
    report("8 extraction from rho in sl_4", good, f"X={X} Y={Y} r={r} s={s}")


def test_c09_ideal_search(tmp_path):
    problems = []
    for k, bound in ((2, 2), (3, 3)):
        sols = pte.ideal_search(k, bound, checkpoint=str(tmp_path / f"ck{k}.json"))
        if not sols:
            problems.append((k, "none"))
        for s in sols:
            ok, top = pte.verify(s.X, s.Y, k - 1)
            X, Y, r, _ = pte.extract_from_collision(
                2 * k, k, s.provenance["nu"], s.provenance["I"], s.provenance["J"]
            )
            if not (ok and top == k - 1 and s.size == k and s.ideal and r == 0):
                problems.append((k, s.X, s.Y))
    report("9 ideal solutions from collisions", not problems, str(problems))


FLOAT_NAMES = {"float", "complex", "float32", "float64", "double", "sqrt", "log", "exp", "pi", "inf", "nan", "isclose"}


def _float_usage(path):
    """Float literals and names that only produce floats, found by tokenizing."""
    hits = []
    with open(path, "rb") as fh:
        toks = list(tokenize.tokenize(fh.readline))
    for tok in toks:
        if tok.type == tokenize.NUMBER:
            body = tok.string.lower().replace("_", "")
            if not body.startswith(("0x", "0o", "0b")) and ("." in body or "e" in body or body.endswith("j")):
                hits.append((path.name, tok.start[0], tok.string))
        elif tok.type == tokenize.NAME and tok.string in FLOAT_NAMES:
            hits.append((path.name, tok.start[0], tok.string))
    return hits


CORE = sorted(p for p in SRC.iterdir() if p.suffix in (".py", ".pyx") and p.name not in ("cli.py", "__main__.py"))


def test_c10_no_floating_point():
    hits = []
    for path in CORE:
        hits.extend(_float_usage(path))
    report("10 no floating-point arithmetic in core modules", not hits, str(hits[:5]))


@pytest.mark.parametrize("snippet", ["x = 1.5\n", "y = float(3)\n", "z = 2e3\n", "from math import sqrt\n"])
def test_c10_scanner_catches_floats(tmp_path, snippet):
    p = tmp_path / "probe.py"
    p.write_text(snippet)
    assert _float_usage(p)
