"""The ``pfq`` command: compute P-functions and related objects as canonical
JSON, and run the verification suites.

Exit status: 0 on success, 1 when a suite reports a failure, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .arith import SparsePoly, TruncSeries, rat_str
from .errors import PfqError
from .kernels import xvars
from .partitions import StrictPartition, parse_parts
from .report import Report
from .sequences import parse_sequence

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# encoding

def encode(v):
    if isinstance(v, (SparsePoly, TruncSeries)):
        return v.to_json()
    if isinstance(v, StrictPartition):
        return list(v.parts)
    if isinstance(v, dict):
        return {k: encode(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode(x) for x in v]
    if isinstance(v, (str, bool, int)) or v is None:
        return v
    return rat_str(v)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


def _poly_out(p, xs, render: bool) -> dict:
    if not isinstance(p, SparsePoly):
        p = SparsePoly.const(p)
    if not p.used_vars() or set(p.used_vars()) <= set(xs):
        p = p.with_vars(xs) if not p.laurent else p
    out = p.to_json()
    if render:
        out["render"] = p.render()
    return out


# option helpers

def _partition(text: str | None, flag: str) -> tuple[int, ...]:
    if text is None:
        raise UsageError(f"missing {flag}")
    try:
        parts = parse_parts(text)
        StrictPartition(parts)
    except (ValueError, PfqError) as e:
        raise UsageError(f"{flag}: {e}") from None
    return parts


def _seq(args):
    try:
        return parse_sequence(args.seq)
    except PfqError as e:
        raise UsageError(f"--seq: {e}") from None


def _vars(args) -> int:
    if args.vars is None or args.vars < 0:
        raise UsageError("--vars must be a nonnegative integer")
    return args.vars


def default_order(needed: int) -> int:
    """Truncation order: PFQ_DEFAULT_ORDER if set, else the needed degree + 2."""
    env = os.environ.get("PFQ_DEFAULT_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError("PFQ_DEFAULT_ORDER must be an integer") from None
    return needed + 2


# subcommands

def cmd_compute(args) -> int:
    from .pfunc import ROUTES, p_function
    F = _seq(args)
    lam = _partition(args.partition, "--partition")
    n = _vars(args)
    if args.route not in ROUTES:
        raise UsageError(f"--route must be one of {', '.join(ROUTES)}")
    print(dumps(_poly_out(p_function(F, lam, n, args.route), xvars(n), args.render)))
    return EXIT_OK


def cmd_dual(args) -> int:
    from .pfunc import dual_p
    F = _seq(args)
    lam = _partition(args.partition, "--partition")
    n = _vars(args)
    D = args.order if args.order is not None else default_order(sum(lam))
    print(dumps(_poly_out(dual_p(F, lam, n, D), xvars(n), args.render)))
    return EXIT_OK


def cmd_skew(args) -> int:
    from .skew import skew_p
    F = _seq(args)
    lam = _partition(args.lambda_, "--lambda")
    mu = _partition(args.mu, "--mu")
    n = _vars(args)
    print(dumps(_poly_out(skew_p(F, lam, mu, args.p, n), xvars(n), args.render)))
    return EXIT_OK


def cmd_pieri(args) -> int:
    from .pieri import pieri_det
    F = _seq(args)
    lam = _partition(args.lambda_, "--lambda")
    mu = _partition(args.mu, "--mu")
    if args.parity not in ("even", "odd"):
        raise UsageError("--parity must be even or odd")
    N = args.order if args.order is not None else default_order(max(sum(lam) - sum(mu), 0))
    print(dumps(pieri_det(F, lam, mu, args.parity, N).to_json()))
    return EXIT_OK


def cmd_pieri_expand(args) -> int:
    from .pieri import pieri_direct
    F = _seq(args)
    mu = _partition(args.mu, "--mu")
    if args.r is None or args.r < 0:
        raise UsageError("--r must be a nonnegative integer")
    n = _vars(args)
    out = pieri_direct(F, mu, args.r, n)
    rows = [[list(lam.parts), encode(c)] for lam, c in sorted(out.items(), key=lambda t: t[0].parts)]
    print(dumps({"mu": list(mu), "r": args.r, "vars": n, "coefficients": rows}))
    return EXIT_OK


def cmd_bcd(args) -> int:
    from .bcd import TYPES, bcd_q, uvars
    if args.type not in TYPES:
        raise UsageError(f"--type must be one of {', '.join(TYPES)}")
    lam = _partition(args.partition, "--partition")
    n = _vars(args)
    if len(lam) > n:
        raise UsageError(f"partition length exceeds --vars {n}")
    q = bcd_q(args.type, lam, n)
    value = q.value_u if args.form == "u" else q.value_laurent
    names = uvars(n) if args.form == "u" else xvars(n)
    print(dumps({"type": args.type, "partition": list(lam), "vars": n, "form": args.form,
                 "value": _poly_out(value, names, args.render)}))
    return EXIT_OK


def report_json(rep: Report, gating: bool) -> dict:
    return {
        "suite": rep.name,
        "gating": gating,
        "cases": len(rep.checks),
        "passed": len(rep.checks) - len(rep.failures),
        "failures": [{"case": c.name, **{k: encode(v) for k, v in c.detail.items()}} for c in rep.failures],
        "notes": [{"case": c.name, **{k: encode(v) for k, v in c.detail.items()}}
                  for c in rep.checks if c.ok and c.detail and not gating],
        "ok": rep.ok,
        "seconds": round(rep.elapsed, 3),
    }


def _run_one(name: str, opts) -> tuple[str, dict]:
    from .suites import SUITES, run_suite
    return name, report_json(run_suite(name, opts), SUITES[name].gating)


def cmd_verify(args) -> int:
    from .suites import SUITES, SuiteOptions
    names = args.suites or list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; see `pfq list-suites`")
    order = args.order
    if order is None and os.environ.get("PFQ_DEFAULT_ORDER"):
        order = default_order(0)
    opts = SuiteOptions(max_weight=args.max_weight, vars=args.vars, order=order, seed=args.seed)
    jobs = max(1, args.jobs or 1)
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = dict(pool.map(_run_one, names, [opts] * len(names)))
    else:
        results = dict(_run_one(name, opts) for name in names)
    reports = [results[name] for name in names]
    # wall times vary between runs; keep them out of the deterministic stream
    if not args.timings:
        for r in reports:
            r.pop("seconds")
    print(dumps({"reports": reports, "ok": all(r["ok"] for r in reports)}))
    return EXIT_OK if all(r["ok"] for r in reports) else EXIT_FAIL


def cmd_list_suites(args) -> int:
    from .suites import SUITES
    print(dumps([{"name": s.name, "criterion": s.criterion, "gating": s.gating,
                  "description": s.description} for s in SUITES.values()]))
    return EXIT_OK


# parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pfq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, *, seq=True, vars_=True, render=True):
        if seq:
            sp.add_argument("--seq", default="monomial",
                            help="monomial, typeB|C|D, factorial:symbolic, factorial:cyclic:a0,a1,a2, factorial:p0,p1,...")
        if vars_:
            sp.add_argument("--vars", type=int)
        if render:
            sp.add_argument("--render", action="store_true", help="add a human-readable rendering")

    sp = sub.add_parser("compute", help="P^F_lambda in n variables")
    common(sp)
    sp.add_argument("--partition")
    sp.add_argument("--route", default="nimmo")
    sp.set_defaults(fn=cmd_compute)

    sp = sub.add_parser("dual", help="dual P-function, truncated at total degree --order")
    common(sp)
    sp.add_argument("--partition")
    sp.add_argument("--order", type=int)
    sp.set_defaults(fn=cmd_dual)

    sp = sub.add_parser("skew", help="skew P-function P_{lambda/mu, p}")
    common(sp)
    sp.add_argument("--lambda", "--outer", dest="lambda_")
    sp.add_argument("--mu", "--inner", dest="mu", default="")
    sp.add_argument("--p", type=int, default=0)
    sp.set_defaults(fn=cmd_skew)

    sp = sub.add_parser("pieri", help="Pieri generating function c^lambda_mu(z)")
    common(sp, vars_=False, render=False)
    sp.add_argument("--mu")
    sp.add_argument("--lambda", dest="lambda_")
    sp.add_argument("--parity", default="even")
    sp.add_argument("--order", type=int)
    sp.set_defaults(fn=cmd_pieri)

    sp = sub.add_parser("pieri-expand", help="expand P_mu q_r in the P^F basis")
    common(sp, render=False)
    sp.add_argument("--mu")
    sp.add_argument("--r", type=int)
    sp.set_defaults(fn=cmd_pieri_expand)

    sp = sub.add_parser("bcd", help="type B/C/D Q-function")
    common(sp, seq=False)
    sp.add_argument("--type")
    sp.add_argument("--partition")
    sp.add_argument("--form", choices=("u", "laurent"), default="laurent")
    sp.set_defaults(fn=cmd_bcd)

    sp = sub.add_parser("verify", help="run verification suites (all when none named)")
    sp.add_argument("suites", nargs="*")
    sp.add_argument("--max-weight", type=int)
    sp.add_argument("--vars", type=int)
    sp.add_argument("--order", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1, help="run several suites in parallel processes")
    sp.add_argument("--timings", action="store_true", help="include wall times in the report")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("list-suites", help="list the suite registry")
    sp.set_defaults(fn=cmd_list_suites)
    return p


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "fn", None):
            raise UsageError("a subcommand is required; see pfq --help")
        return args.fn(args)
    except UsageError as e:
        print(dumps({"error": str(e)}), file=sys.stderr)
        return EXIT_USAGE
    except PfqError as e:
        print(dumps({"error": f"{type(e).__name__}: {e}"}), file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
