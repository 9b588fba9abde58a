"""Command-line front end.

Exit status: 0 on success / verified, 1 on a failed verification, 2 on a
usage error. ``--format jsonl`` switches every command to line-delimited
JSON records.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import cartan, grassmann, matrix_model, pte, separation, symfunc, weights
from .report import jsonable

WORKERS_ENV = "PTEALG_WORKERS"


@dataclass
class Config:
    fmt: str = "text"
    workers: int = 1
    budget: int = pte.DEFAULT_BUDGET
    time_budget: int | None = None
    p_bound: int = matrix_model.DEFAULT_P_BOUND

    def __post_init__(self):
        if self.workers < 1 or self.budget < 1 or self.p_bound < 1:
            raise ValueError("workers, budget and p-bound must be positive")
        if self.time_budget is not None and self.time_budget < 1:
            raise ValueError("time budget must be positive")


class UsageError(Exception):
    pass


def int_list(text):
    text = text.strip().strip("[]")
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def partition_arg(text):
    try:
        return symfunc.Partition(int_list(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def pattern_arg(text):
    if text.startswith("a="):
        return weights.weight_to_pattern(weights.parse_weight(text))
    return weights.YoungPattern(int_list(text[2:] if text.startswith("f=") else text))


class Emitter:
    def __init__(self, cfg, out):
        self.cfg = cfg
        self.out = out

    def text(self, line):
        if self.cfg.fmt == "text":
            print(line, file=self.out)

    def record(self, rec):
        if self.cfg.fmt == "jsonl":
            print(json.dumps(jsonable(rec), sort_keys=True), file=self.out)

    def emit(self, line, rec):
        self.text(line)
        self.record(rec)

    def report(self, rep):
        self.text(rep.to_text())
        for rec in rep.to_records():
            self.record(rec)
        return 0 if rep.passed else 1


def _nu(args):
    nu = weights.FundWeight(args.nu)
    if nu.n != args.n:
        raise UsageError(f"--nu needs {args.n - 1} coefficients for n={args.n}")
    return nu


# --- pte -------------------------------------------------------------------


def cmd_pte_verify(args, cfg, em):
    if len(args.x) != len(args.y):
        raise UsageError("--x and --y must have the same length")
    ok, top = pte.verify(args.x, args.y, args.degree)
    word = "verified" if ok else "not verified"
    line = f"{word}, max_degree={top}" if top != pte.TRIVIAL else f"{word}, trivial"
    em.emit(line, {"X": args.x, "Y": args.y, "degree": args.degree, "verified": ok, "max_degree": top})
    return 0 if ok else 1


def cmd_pte_brute(args, cfg, em):
    sols = pte.brute_search(args.size, args.degree, args.bound, budget=cfg.budget)
    for s in sols:
        em.emit(f"{list(s.X)} ={s.degree} {list(s.Y)}", s.to_record())
    em.text(f"{len(sols)} solutions")
    return 0


def cmd_pte_ideal(args, cfg, em):
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            sols = pte.ideal_search(
                args.k, args.bound, cfg.budget, pool.map, args.checkpoint, cfg.time_budget
            )
    else:
        sols = pte.ideal_search(
            args.k, args.bound, cfg.budget, map, args.checkpoint, cfg.time_budget
        )
    for s in sols:
        prov = s.provenance
        em.emit(
            f"{list(s.X)} ={s.degree} {list(s.Y)}  nu={list(prov['nu'])} I={list(prov['I'])} J={list(prov['J'])}",
            s.to_record(),
        )
    em.text(f"{len(sols)} ideal solutions")
    return 0 if sols else 1


def cmd_pte_from_weights(args, cfg, em):
    nu = _nu(args)
    X, Y, r, s = pte.extract_from_collision(args.n, args.k, nu, args.I, args.J)
    em.emit(
        f"X={list(X)} Y={list(Y)} r={r} degree={s}",
        {"X": X, "Y": Y, "r": r, "degree": s, "provenance": {"nu": nu.a, "I": args.I, "J": args.J}},
    )
    return 0


def cmd_pte_theorem29(args, cfg, em):
    ok = pte.theorem29_validate(args.size, args.bound, budget=cfg.budget)
    em.emit(
        f"size={args.size} bound={args.bound}: {'only trivial solutions' if ok else 'COUNTEREXAMPLE'}",
        {"size": args.size, "bound": args.bound, "holds": ok},
    )
    return 0 if ok else 1


# --- weights / symmetric functions -----------------------------------------


def cmd_char_equal(args, cfg, em):
    eq = weights.char_equal(args.p, args.q)
    em.emit(f"char_equal={str(eq).lower()}", {"p": args.p.f, "q": args.q.f, "equal": eq})
    return 0


def cmd_weights_sfun(args, cfg, em):
    for k in range(1, args.k + 1):
        v = weights.s_functional(args.pattern, k)
        em.emit(f"S{k}={v}", {"pattern": args.pattern.f, "k": k, "value": v})
    return 0


def cmd_schur(args, cfg, em):
    fn = symfunc.schur_alternant if args.method == "alternant" else symfunc.schur_jacobi_trudi
    p = fn(args.partition, args.nvars)
    em.emit(str(p), {"partition": list(args.partition), "nvars": args.nvars, "poly": str(p)})
    return 0


def cmd_lr(args, cfg, em):
    coeffs = symfunc.lr_expand(args.mu, args.nu)
    for lam in sorted(coeffs, key=lambda l: tuple(-p for p in l)):
        em.emit(
            f"{symfunc.format_partition(lam)} {coeffs[lam]}",
            {"mu": list(args.mu), "nu": list(args.nu), "lambda": list(lam), "coeff": coeffs[lam]},
        )
    return 0


# --- grassmann / cartan ----------------------------------------------------


def _box_args(args):
    if not 1 <= args.k <= args.n - args.k:
        raise UsageError("need 1 <= k <= n-k")


def cmd_grassmann_mul(args, cfg, em):
    _box_args(args)
    a = grassmann.GrassElement.schubert(args.k, args.n, args.a)
    b = grassmann.GrassElement.schubert(args.k, args.n, args.b)
    prod = grassmann.mul(a, b)
    em.emit(repr(prod), {"k": args.k, "n": args.n, "a": list(args.a), "b": list(args.b), "product": prod.to_record()})
    return 0


def cmd_grassmann_relations(args, cfg, em):
    _box_args(args)
    for s in range(1, args.k + 1):
        f = grassmann.relation_f(s, args.k, args.n, signed=args.signed)
        img = grassmann.reduce_w_poly(f, args.k, args.n)
        em.emit(
            f"f_{s} = {f!r}  ->  {img!r}",
            {"s": s, "k": args.k, "n": args.n, "signed": args.signed, "relation": repr(f), "image": img.to_record()},
        )
    return 0


def cmd_grassmann_verify(args, cfg, em):
    _box_args(args)
    return em.report(grassmann.verify_presentation(args.k, args.n))


def cmd_cartan_verify(args, cfg, em):
    _box_args(args)
    return em.report(cartan.verify_free_basis(args.k, args.n, args.bound))


# --- separation --------------------------------------------------------------


def cmd_sep_decompose(args, cfg, em):
    nu = _nu(args)
    for c in separation.tensor_decompose(args.n, args.k, nu):
        em.emit(
            f"I={c.I} pattern={c.pattern} dim={c.dim}",
            {"I": c.I.elems, "pattern": c.pattern.f, "dim": c.dim},
        )
    return 0


def cmd_sep_t0(args, cfg, em):
    nu = _nu(args)
    t = separation.t0(args.n, args.k, nu)
    em.emit(f"t0={t}", {"n": args.n, "k": args.k, "nu": nu.a, "t0": t})
    return 0


def cmd_sep_collisions(args, cfg, em):
    nu = _nu(args)
    cols = separation.find_collisions(args.n, args.k, nu, args.depth)
    for I, J, vec in cols:
        rec = separation.collision_record(args.n, args.k, nu, args.depth, I, J, vec)
        em.emit(f"I={I} J={J} shared={[str(v) for v in vec]}", rec)
    em.text(f"{len(cols)} collisions")
    return 0


# --- matrix model ------------------------------------------------------------


def cmd_matrix_casimir(args, cfg, em):
    r = matrix_model.fundamental_rep(args.n, args.k)
    m = matrix_model.casimir(r, args.p, cfg.p_bound)
    c = m.scalar_value()
    em.text(str(m))
    em.emit(f"scalar={c}" if c is not None else "not scalar", {"n": args.n, "k": args.k, "p": args.p, "scalar": c, "matrix": m.rows})
    return 0


def cmd_matrix_kostant(args, cfg, em):
    a = matrix_model.fundamental_rep(args.n, args.k)
    b = matrix_model.fundamental_rep(args.n, args.j)
    m = matrix_model.kostant_matrix(a, b, args.p, cfg.p_bound)
    em.emit(str(m), {"n": args.n, "k": args.k, "j": args.j, "p": args.p, "matrix": m.rows})
    return 0


def cmd_matrix_spectrum(args, cfg, em):
    if args.p > cfg.p_bound:
        raise UsageError(f"p={args.p} exceeds --p-bound {cfg.p_bound}")
    return em.report(matrix_model.spectrum_verify(args.n, args.k, args.j, args.p))


# --- parser ------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="ptealg", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "jsonl"), default="text")
    parser.add_argument("--workers", type=int, default=None, help=f"worker processes (env {WORKERS_ENV}, default 1)")
    parser.add_argument("--budget", type=int, default=pte.DEFAULT_BUDGET, help="max candidates for searches")
    parser.add_argument("--time-budget", type=int, default=None, help="seconds for the ideal search")
    parser.add_argument("--p-bound", type=int, default=matrix_model.DEFAULT_P_BOUND)
    top = parser.add_subparsers(dest="group", required=True)

    def nk(p, nu=False):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        if nu:
            p.add_argument("--nu", type=int_list, required=True)

    g = top.add_parser("pte").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("verify")
    p.add_argument("--x", type=int_list, required=True)
    p.add_argument("--y", type=int_list, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_pte_verify)
    p = g.add_parser("brute")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_pte_brute)
    p = g.add_parser("ideal")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--checkpoint", default=None)
    p.set_defaults(func=cmd_pte_ideal)
    p = g.add_parser("from-weights")
    nk(p, nu=True)
    p.add_argument("--I", type=int_list, required=True)
    p.add_argument("--J", type=int_list, required=True)
    p.set_defaults(func=cmd_pte_from_weights)
    p = g.add_parser("size-bound")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_pte_theorem29)

    g = top.add_parser("char").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("equal")
    p.add_argument("--p", type=pattern_arg, required=True)
    p.add_argument("--q", type=pattern_arg, required=True)
    p.set_defaults(func=cmd_char_equal)

    g = top.add_parser("weights").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("sfun")
    p.add_argument("--pattern", type=pattern_arg, required=True, help="f=[..] or a=[..]")
    p.add_argument("--k", type=int, required=True, help="report S_1..S_k")
    p.set_defaults(func=cmd_weights_sfun)

    p = top.add_parser("schur")
    p.add_argument("--partition", type=partition_arg, required=True)
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--method", choices=("jacobi-trudi", "alternant"), default="jacobi-trudi")
    p.set_defaults(func=cmd_schur)

    p = top.add_parser("lr")
    p.add_argument("--mu", type=partition_arg, required=True)
    p.add_argument("--nu", type=partition_arg, required=True)
    p.set_defaults(func=cmd_lr)

    g = top.add_parser("grassmann").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("mul")
    nk(p)
    p.add_argument("--a", type=partition_arg, required=True)
    p.add_argument("--b", type=partition_arg, required=True)
    p.set_defaults(func=cmd_grassmann_mul)
    p = g.add_parser("relations")
    nk(p)
    p.add_argument("--signed", action="store_true")
    p.set_defaults(func=cmd_grassmann_relations)
    p = g.add_parser("verify")
    nk(p)
    p.set_defaults(func=cmd_grassmann_verify)

    g = top.add_parser("cartan").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("verify")
    nk(p)
    p.add_argument("--bound", type=int, default=5)
    p.set_defaults(func=cmd_cartan_verify)

    g = top.add_parser("separation").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("decompose")
    nk(p, nu=True)
    p.set_defaults(func=cmd_sep_decompose)
    p = g.add_parser("t0")
    nk(p, nu=True)
    p.set_defaults(func=cmd_sep_t0)
    p = g.add_parser("collisions")
    nk(p, nu=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_sep_collisions)

    g = top.add_parser("matrix").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("casimir")
    nk(p)
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(func=cmd_matrix_casimir)
    for name, func in (("kostant", cmd_matrix_kostant), ("spectrum", cmd_matrix_spectrum)):
        p = g.add_parser(name)
        nk(p)
        p.add_argument("--j", type=int, required=True)
        p.add_argument("--p", type=int, default=2)
        p.set_defaults(func=func)
    return parser


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    workers = args.workers if args.workers is not None else int(os.environ.get(WORKERS_ENV, "1"))
    try:
        cfg = Config(args.format, workers, args.budget, args.time_budget, args.p_bound)
        return args.func(args, cfg, Emitter(cfg, out))
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except pte.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
