"""Command-line front end.

Exit status is 0 when every requested check passes, 1 when a check
fails and 2 on usage, I/O or schema errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

import numpy as np

from . import bicrossed as bc
from . import cohomology, families, realization
from .braiding import check_compatibility, check_q_multiplicativity, check_theorem_conditions, compute_q
from .errors import AlgebraError
from .io import (
    Dataset,
    dataset_to_dict,
    load_dataset,
    load_matched_pair,
    read_json,
    realization_from_dict,
    realization_to_dict,
    save_dataset,
    write_json,
)
from .matched_pair import validate_matched_pair
from .report import CheckResult, Report, sweep
from .search import search_compatible_data

CHECK_GROUPS = ("basic", "theorem", "cohomology", "antipode", "realization")


class Runner:
    """Collects reports, prints them and tracks the overall verdict."""

    def __init__(self, fail_fast: bool = False, quiet: bool = False):
        self.fail_fast = fail_fast
        self.quiet = quiet
        self.ok = True
        self.stopped = False

    def run(self, make: Callable[[], Report]) -> Report | None:
        if self.stopped:
            return None
        rep = make()
        if not self.quiet:
            print(rep.format())
        if not rep.passed:
            self.ok = False
            self.stopped = self.fail_fast
        return rep


def _basic(ds: Dataset) -> list[Callable[[], Report]]:
    def bialgebra() -> Report:
        R = bc.build_bicrossed(ds.datum, ds.q, validate=False)
        return bc.verify_bialgebra(R)

    return [lambda: validate_matched_pair(ds.datum.mp), ds.datum.validate, bialgebra]


def _theorem(ds: Dataset) -> list[Callable[[], Report]]:
    q = compute_q(ds.datum) if ds.q is None else ds.q
    return [
        lambda: check_theorem_conditions(ds.datum),
        lambda: check_q_multiplicativity(ds.datum.mp, q, ds.conductor),
        lambda: check_compatibility(ds.datum, q),
    ]


def _cohomology(ds: Dataset) -> list[Callable[[], Report]]:
    return [lambda: cohomology.cocycle_verdicts(ds.datum), lambda: cohomology.verify_corollary_q(ds.datum, ds.q)]


def _antipode(ds: Dataset) -> list[Callable[[], Report]]:
    return [lambda: bc.antipode_oracles(bc.build_bicrossed(ds.datum, ds.q, validate=False))]


def _realization(ds: Dataset) -> list[Callable[[], Report]]:
    if ds.realization is None:
        return []
    return [lambda: realization.check_braid_c_chi(ds.datum, ds.realization)]


_GROUPS = {
    "basic": _basic,
    "theorem": _theorem,
    "cohomology": _cohomology,
    "antipode": _antipode,
    "realization": _realization,
}


def _expand(names: Sequence[str]) -> list[str]:
    out: list[str] = []
    for name in names:
        picked = CHECK_GROUPS if name == "all" else (name,)
        for p in picked:
            if p not in _GROUPS:
                raise ValueError(f"unknown check group '{p}' (choose from all, {', '.join(CHECK_GROUPS)})")
            if p not in out:
                out.append(p)
    return out


def run_checks(ds: Dataset, groups: Sequence[str], runner: Runner) -> None:
    for name in _expand(groups):
        for make in _GROUPS[name](ds):
            runner.run(make)


def _flags_line(ds: Dataset) -> str:
    R = bc.build_bicrossed(ds.datum, ds.q, validate=False)
    plain = bc.commutativity_flags(R)
    braided = bc.commutativity_flags(R, braided=True)
    return (f"commutative, cocommutative: {plain[0]}, {plain[1]} "
            f"(braided: {braided[0]}, {braided[1]})")


# ------------------------------------------------------------------ commands


def _build_example(args) -> families.Example:
    kind = args.family
    if kind == "trivial-actions":
        return families.example_trivial_actions(args.p, args.a, args.b)
    if kind == "p4q":
        return families.example_p4q(args.p, args.q, args.r)
    if kind == "cyclic":
        return families.cyclic_direct_product(args.N, args.M, args.omega, args.mu)
    if kind == "kashina":
        return families.kashina(args.n, args.sign)
    return families.example_s3(args.conductor)


def cmd_example(args) -> int:
    ex = _build_example(args)
    ds = Dataset(ex.datum, ex.name, ex.params, None, ex.realization)
    print(f"{ex.name} {ex.params}: dim R = {ex.mp.nG * ex.mp.nF}, conductor {ex.conductor}")
    runner = Runner()
    if args.verify:
        run_checks(ds, [args.verify], runner)
        if args.verify == "all" and ex.closed_q is not None:
            q = compute_q(ex.datum)
            runner.run(lambda: _closed_form_report(q, ex.closed_q, ex.conductor))
        if args.verify == "all":
            print(_flags_line(ds))
    if args.export:
        save_dataset(args.export, ds)
        print(f"wrote {args.export}")
    return 0 if runner.ok else 1


def _closed_form_report(q: np.ndarray, closed: np.ndarray, n: int) -> Report:
    rep = Report("closed form")
    rep.add(sweep("Q equals the closed form", (q - closed) % n != 0, ("g", "h", "x", "y")))
    return rep


def cmd_verify(args) -> int:
    ds = load_dataset(args.input)
    runner = Runner(fail_fast=args.fail_fast)
    run_checks(ds, [c.strip() for c in args.check.split(",") if c.strip()], runner)
    return 0 if runner.ok else 1


def cmd_qtable(args) -> int:
    ds = load_dataset(args.input)
    q = compute_q(ds.datum)
    write_json(args.out, {"conductor": ds.conductor, "layout": "q[g][h][x][y]", "q": q.tolist()})
    print(f"wrote {args.out} ({q.size} entries, {int(np.count_nonzero(q))} nontrivial)")
    return 0


def cmd_realize(args) -> int:
    ds = load_dataset(args.input)
    if args.universal:
        dr = realization.universal_realization(ds.datum, args.orientation, ds.q)
        print(f"universal C invariant factors: {list(dr.C.factors)} (order {dr.C.order})")
    else:
        dr = realization_from_dict(read_json(args.realization), ds.conductor)
    runner = Runner()
    if args.universal and args.orientation == "transposed":
        runner.run(lambda: realization.validate_realization(ds.datum.mp, dr))
    else:
        runner.run(lambda: realization.check_braid_c_chi(ds.datum, dr))
    if args.biproduct and runner.ok:
        R = bc.build_bicrossed(ds.datum, ds.q, validate=False)
        B = realization.build_biproduct(R, dr)
        print(f"R # kC has dimension {B.dim}")
        runner.run(lambda: realization.verify_biproduct(B))
        if args.biproduct_out:
            t = B.tables
            write_json(args.biproduct_out, {
                "conductor": t.conductor,
                "mult": {"index": t.mult_idx.tolist(), "exponent": t.mult_exp.tolist()},
                "comult": {"left": t.co_left.tolist(), "right": t.co_right.tolist(), "exponent": t.co_exp.tolist()},
                "antipode": {"index": t.ant_idx.tolist(), "exponent": t.ant_exp.tolist()},
                "counit": t.counit_mask.astype(int).tolist(),
            })
    if args.out:
        write_json(args.out, realization_to_dict(dr))
        print(f"wrote {args.out}")
    return 0 if runner.ok else 1


def cmd_equiv(args) -> int:
    left, right = load_dataset(args.left), load_dataset(args.right)
    if left.conductor != right.conductor:
        n = int(np.lcm(left.conductor, right.conductor))
        left, right = Dataset(left.datum.with_conductor(n)), Dataset(right.datum.with_conductor(n))
    sols = cohomology.solve_equivalence(left.datum, right.datum)
    if sols is None:
        print("no gauge ν links the two data")
        return 1
    nu = sols.particular
    print(f"ν (exponents mod {sols.conductor}, rows g, columns x): {nu.tolist()}")
    print(f"solution space: particular + span of {len(sols.kernel)} kernel vectors")
    R1 = bc.build_bicrossed(left.datum, validate=False)
    R2 = bc.build_bicrossed(right.datum, validate=False)
    runner = Runner()
    runner.run(lambda: bc.theta_equivalence(R1, R2, nu))
    return 0 if runner.ok else 1


def cmd_search(args) -> int:
    mp = load_matched_pair(args.mp)
    found = 0
    for res in search_compatible_data(mp, args.conductor, args.max_results, args.nontrivial):
        found += 1
        kind = "trivial" if res.braiding_trivial else "nontrivial"
        print(f"#{found}: {kind} braiding, σ nonzero entries {int(np.count_nonzero(res.datum.sigma))}, "
              f"τ nonzero entries {int(np.count_nonzero(res.datum.tau))}")
        if args.out_dir:
            save_dataset(f"{args.out_dir}/datum_{found}.json", Dataset(res.datum, f"search-{found}"))
    print(f"{found} braided compatible data found")
    return 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braided-bicrossed", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("example", help="construct and check one of the example families")
    ex.add_argument("family", choices=["trivial-actions", "p4q", "cyclic", "kashina", "s3"])
    ex.add_argument("--p", type=int, default=3)
    ex.add_argument("--a", type=int, default=1)
    ex.add_argument("--b", type=int, default=1)
    ex.add_argument("--q", type=int, default=2)
    ex.add_argument("--r", type=int, default=1)
    ex.add_argument("--N", type=int, default=4)
    ex.add_argument("--M", type=int, default=2)
    ex.add_argument("--omega", type=int, default=0, help="exponent of ζ_{MN}")
    ex.add_argument("--mu", type=int, default=0, help="exponent of ζ_{MN}")
    ex.add_argument("--n", type=int, default=2)
    ex.add_argument("--sign", type=int, default=1, choices=[1, -1])
    ex.add_argument("--conductor", type=int, default=1)
    ex.add_argument("--verify", choices=["all", *CHECK_GROUPS])
    ex.add_argument("--export", metavar="FILE")
    ex.set_defaults(func=cmd_example)

    ve = sub.add_parser("verify", help="run checks on a dataset file")
    ve.add_argument("--input", required=True)
    ve.add_argument("--check", default="all", help="comma-separated: all, " + ", ".join(CHECK_GROUPS))
    ve.add_argument("--fail-fast", action="store_true")
    ve.set_defaults(func=cmd_verify)

    qt = sub.add_parser("qtable", help="write the braiding exponent table")
    qt.add_argument("--input", required=True)
    qt.add_argument("--out", required=True)
    qt.set_defaults(func=cmd_qtable)

    re_ = sub.add_parser("realize", help="check or construct a diagonal realization")
    src = re_.add_mutually_exclusive_group(required=True)
    src.add_argument("--universal", action="store_true")
    src.add_argument("--realization", metavar="FILE")
    re_.add_argument("--input", required=True)
    re_.add_argument("--orientation", choices=["braiding", "transposed"], default="braiding")
    re_.add_argument("--biproduct", action="store_true")
    re_.add_argument("--biproduct-out", metavar="FILE")
    re_.add_argument("--out", metavar="FILE")
    re_.set_defaults(func=cmd_realize)

    eq = sub.add_parser("equiv", help="search for a gauge equivalence between two data")
    eq.add_argument("--left", required=True)
    eq.add_argument("--right", required=True)
    eq.set_defaults(func=cmd_equiv)

    se = sub.add_parser("search", help="enumerate braided compatible data on a small matched pair")
    se.add_argument("--mp", required=True)
    se.add_argument("--conductor", type=int, required=True)
    se.add_argument("--max-results", type=int, default=10)
    se.add_argument("--nontrivial", action="store_true", help="skip data with trivial braiding")
    se.add_argument("--out-dir", metavar="DIR")
    se.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AlgebraError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
