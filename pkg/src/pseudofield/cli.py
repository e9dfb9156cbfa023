"""Batch command-line front end.

Every command prints one JSON document (sorted keys) that embeds the run
configuration and the library version.  Exit codes: 0 success, 2 bad input,
3 resource refusal (budget, enumeration or deadline), 4 search failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebraic import (
    AlgebraicWitness,
    verify_witness,
    witness_inverse,
    witness_neg,
    witness_poly_root,
    witness_product,
    witness_sum,
)
from .deadline import Deadline
from .errors import ResourceRefusal, SearchFailure
from .factor import factor_int_poly
from .field import GF
from .modpoly import ModPoly, coprime_lift, factor_mod_l, monic_multiple
from .poly import HomogeneousForm, IntPoly, resultant_cofactors, sylvester_resultant
from .probes import ENUM_CEILING, guarded_transitivity_check, max_threshold, order_axioms, psi_check
from .rational import check_fq_bounds, f_q_fast, f_q_oracle
from .realroots import isolate_real_roots
from .search import CELL_CEILING, MAX_BUDGET, Restriction, VariantSpec, f_variant_oracle
from .units import (
    RationalInterval,
    express_in_ideal,
    ideal_cover,
    res_one_in_interval,
    res_one_partner,
    unit_value_alg_integer,
)

EXIT_OK, EXIT_USAGE, EXIT_REFUSED, EXIT_SEARCH = 0, 2, 3, 4


@dataclass
class RunConfig:
    command: str
    options: dict = field(default_factory=dict)
    max_budget: int = MAX_BUDGET
    cell_ceiling: int = CELL_CEILING
    enum_ceiling: int = ENUM_CEILING
    deadline_secs: float | None = None
    format: str = "json"
    out: str | None = None

    def __post_init__(self):
        if min(self.max_budget, self.cell_ceiling, self.enum_ceiling) <= 0:
            raise ValueError("ceilings must be positive")

    def deadline(self) -> Deadline:
        return Deadline(self.deadline_secs)


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _load_json(arg: str):
    return json.loads(arg if arg.lstrip().startswith("{") else Path(arg).read_text())


def _search_kw(cfg: RunConfig) -> dict:
    return {"max_budget": cfg.max_budget, "cell_ceiling": cfg.cell_ceiling, "deadline": cfg.deadline()}


# --- commands ---------------------------------------------------------------


def cmd_reconstruct(args, cfg):
    F = GF(args.p)
    x = F(args.x)
    if args.kind == "q":
        value, w = f_q_fast(x)
        if args.check_oracle and f_q_oracle(x) != (value, w):
            raise AssertionError("fast search disagrees with the oracle")
        return {"kind": "q", "p": args.p, "x": x.value, "value": value,
                "witness": {"n": w.n, "m": w.m, "sign": w.sign, "text": str(w)}}
    variant = VariantSpec(args.size, args.denominator, args.entries, args.small_bound)
    found = f_variant_oracle(x, args.budget, variant, **_search_kw(cfg))
    return {"kind": args.kind, "p": args.p, "x": x.value, "budget": args.budget,
            "variant": {"size": variant.size.value, "denominator": variant.denominator.value,
                        "entries": variant.entries.value, "small_bound": variant.small_bound},
            "value": None if found is None else found[0],
            "witness": None if found is None else found[1].to_dict()}


def cmd_witness(args, cfg):
    if args.action == "verify":
        w = AlgebraicWitness.from_dict(_load_json(args.witness))
        return {"action": "verify", "valid": verify_witness(w), "cost": w.cost(), "witness": w.to_dict()}
    ws = [AlgebraicWitness.from_dict(_load_json(a)) for a in args.inputs]
    op = args.op
    arity = {"product": 2, "sum": 2, "neg": 1, "inverse": 1}
    if op in arity and len(ws) != arity[op]:
        raise ValueError(f"{op} takes {arity[op]} witness(es)")
    if op == "product":
        out, bound = witness_product(*ws), ws[0].cost() * ws[1].cost()
    elif op == "sum":
        out, bound = witness_sum(*ws), ws[0].cost() * ws[1].cost() + 1
    elif op == "neg":
        out, bound = witness_neg(ws[0]), ws[0].cost()
    elif op == "inverse":
        out, bound = witness_inverse(ws[0]), 2 * ws[0].cost() ** 2 + ws[0].cost()
    else:
        if args.x is None:
            raise ValueError("poly-root needs --x")
        out = witness_poly_root(ws, ws[0].target.field(args.x))
        bound = len(ws)
        for w in ws:
            bound *= w.cost()
    return {"action": "combine", "op": op, "valid": verify_witness(out), "cost": out.cost(),
            "cost_bound": bound, "witness": out.to_dict()}


def cmd_probe(args, cfg):
    F = GF(args.p)
    kw = {"max_budget": cfg.max_budget, "cell_ceiling": cfg.cell_ceiling, "deadline": cfg.deadline()}
    if args.kind == "threshold":
        rep = max_threshold(F, args.d, args.budget, args.complex, ceiling=cfg.enum_ceiling, **kw)
        if cfg.format == "csv":
            return rep.to_csv()
        return json.loads(rep.to_json())
    if args.kind == "order":
        return order_axioms(F)
    if args.kind == "transitivity":
        res = guarded_transitivity_check(F, args.B, args.budget, **kw)
        return asdict(res)
    return {"p": F.p, "n": args.n, "budget": args.budget, "holds": psi_check(F, args.n, args.budget, **kw)}


def cmd_toolkit(args, cfg):
    op = args.op
    if op == "resultant":
        f, g = IntPoly.parse(args.f), IntPoly.parse(args.g)
        a, b = resultant_cofactors(f, g)
        return {"resultant": sylvester_resultant(f, g), "a": a.format(), "b": b.format()}
    if op == "factor":
        c, facs = factor_int_poly(IntPoly.parse(args.f))
        return {"content": c, "factors": [{"poly": g.format(), "multiplicity": m} for g, m in facs]}
    if op == "factor-mod":
        f = ModPoly(args.ell, 1, IntPoly.parse(args.f).coeffs)
        return {"ell": args.ell, "factors": [{"poly": list(g.coeffs), "multiplicity": m} for g, m in factor_mod_l(f, args.ell)]}
    if op == "monic-multiple":
        u = ModPoly(args.ell, args.exponent, IntPoly.parse(args.f).coeffs)
        v = monic_multiple(u)
        w = (ModPoly(args.ell, args.exponent, [1]) + v * args.ell) * u
        return {"v": list(v.coeffs), "product": list(w.coeffs)}
    if op == "coprime-lift":
        w = ModPoly(args.ell, args.exponent, IntPoly.parse(args.f).coeffs)
        r1 = ModPoly(args.ell, 1, IntPoly.parse(args.g).coeffs)
        r2 = ModPoly(args.ell, 1, IntPoly.parse(args.h).coeffs)
        a, b = coprime_lift(w, r1, r2)
        return {"r1": list(a.coeffs), "r2": list(b.coeffs)}
    if op == "roots":
        f = IntPoly.parse(args.f)
        lo = None if args.lo is None else Fraction(args.lo)
        hi = None if args.hi is None else Fraction(args.hi)
        return {"intervals": [{"lo": _frac(a), "hi": _frac(b)} for a, b in isolate_real_roots(f, lo, hi)]}
    if op == "partner":
        f = IntPoly.parse(args.f)
        q = res_one_partner(f)
        return {"q": q.format(), "resultant": sylvester_resultant(f, q)}
    if op == "cover":
        p, q = HomogeneousForm.parse(args.f), HomogeneousForm.parse(args.g)
        return {"cover": [d.to_dict() for d in ideal_cover(p, q)]}
    if op == "express":
        p, q, h = HomogeneousForm.parse(args.f), HomogeneousForm.parse(args.g), HomogeneousForm.parse(args.h)
        a, b = express_in_ideal(h, p, q, ideal_cover(p, q))
        return {"a": a.format(), "b": b.format()}
    if op == "fq-bounds":
        return json.loads(check_fq_bounds(GF(args.ell)).to_json())
    raise ValueError(f"unknown toolkit operation {op}")


def cmd_unitfind(args, cfg):
    polys = [IntPoly.parse(s) for s in args.poly]
    I = RationalInterval(Fraction(args.lo), Fraction(args.hi))
    if args.step == "interval":
        p = polys[0] if polys else IntPoly([1])
        q, (lo, hi) = res_one_in_interval(p, I)
        return {"q": list(q.coeffs), "interval": {"lo": _frac(lo), "hi": _frac(hi)}, "resultant": sylvester_resultant(p, q)}
    return unit_value_alg_integer(polys, I).to_dict()


def cmd_selftest(args, cfg):
    from .acceptance import run_suite

    results = run_suite(args.only or None)
    report = {"criteria": [r.to_dict() for r in results], "passed": all(r.passed for r in results)}
    if args.timings:
        report["timings"] = {str(r.id): round(r.seconds, 3) for r in results}
    for r in results:
        print(r.line(), file=sys.stderr)
    return report


COMMANDS = {
    "reconstruct": cmd_reconstruct,
    "witness": cmd_witness,
    "probe": cmd_probe,
    "toolkit": cmd_toolkit,
    "unitfind": cmd_unitfind,
    "selftest": cmd_selftest,
}


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pseudofield", description="Residue complexity, order probes and unit-value constructions over prime fields.")
    ap.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-budget", type=int, default=MAX_BUDGET)
    common.add_argument("--cell-ceiling", type=int, default=CELL_CEILING)
    common.add_argument("--enum-ceiling", type=int, default=ENUM_CEILING)
    common.add_argument("--deadline", type=float, default=None, help="seconds; overrides PSEUDOFIELD_DEADLINE_SECS")
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reconstruct", parents=[common])
    r.add_argument("--kind", choices=["q", "qbar", "variant"], default="q")
    r.add_argument("--p", type=int, required=True)
    r.add_argument("--x", type=int, required=True)
    r.add_argument("--budget", type=int, default=4)
    r.add_argument("--check-oracle", action="store_true")
    axes = [x.value for x in Restriction]
    for axis in ("size", "denominator", "entries"):
        r.add_argument(f"--{axis}", choices=axes, default="unrestricted")
    r.add_argument("--small-bound", type=int, default=2)

    w = sub.add_parser("witness", parents=[common])
    wsub = w.add_subparsers(dest="action", required=True)
    wv = wsub.add_parser("verify", parents=[common])
    wv.add_argument("witness", help="witness JSON or a path to it")
    wc = wsub.add_parser("combine", parents=[common])
    wc.add_argument("--op", choices=["product", "sum", "neg", "inverse", "poly-root"], required=True)
    wc.add_argument("inputs", nargs="+", help="witness JSON documents or paths (poly-root: a_0 .. a_{d-1})")
    wc.add_argument("--x", type=int, default=None)

    pr = sub.add_parser("probe", parents=[common])
    pr.add_argument("--kind", choices=["threshold", "order", "transitivity", "psi"], default="threshold")
    pr.add_argument("--p", type=int, required=True)
    pr.add_argument("--d", type=int, default=2)
    pr.add_argument("--budget", type=int, default=2)
    pr.add_argument("--complex", action="store_true")
    pr.add_argument("--B", type=int, default=1)
    pr.add_argument("--n", type=int, default=1)

    t = sub.add_parser("toolkit", parents=[common])
    t.add_argument("op", choices=["resultant", "factor", "factor-mod", "monic-multiple", "coprime-lift", "roots",
                                  "partner", "cover", "express", "fq-bounds"])
    t.add_argument("--f", default="")
    t.add_argument("--g", default="")
    t.add_argument("--h", default="")
    t.add_argument("--ell", type=int, default=2)
    t.add_argument("--exponent", type=int, default=1)
    t.add_argument("--lo", default=None)
    t.add_argument("--hi", default=None)

    u = sub.add_parser("unitfind", parents=[common])
    u.add_argument("--poly", action="append", default=[], help="ascending coefficients, e.g. 1,0,1; repeatable")
    u.add_argument("--lo", required=True)
    u.add_argument("--hi", required=True)
    u.add_argument("--step", choices=["alpha", "interval"], default="alpha")

    s = sub.add_parser("selftest", parents=[common])
    s.add_argument("--only", type=int, nargs="*", default=None)
    s.add_argument("--timings", action="store_true", help="include wall times (breaks byte-identical reports)")
    return ap


def _config(args) -> RunConfig:
    skip = {"command", "max_budget", "cell_ceiling", "enum_ceiling", "deadline", "format", "out"}
    options = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    deadline = args.deadline if args.deadline is not None else Deadline.from_env().seconds
    return RunConfig(args.command, options, args.max_budget, args.cell_ceiling, args.enum_ceiling, deadline, args.format, args.out)


def _render(cfg: RunConfig, result) -> str:
    if isinstance(result, str):  # csv reports: provenance goes in a comment line
        head = json.dumps({"config": asdict(cfg), "version": __version__}, sort_keys=True)
        return f"# {head}\n{result}"
    doc = {"config": asdict(cfg), "version": __version__, "result": result}
    if cfg.format == "text":
        return "\n".join(f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(result.items())) + "\n"
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = _config(args)
        result = COMMANDS[args.command](args, cfg)
        code = EXIT_OK
        if args.command == "selftest" and not result["passed"]:
            code = 1
    except ResourceRefusal as e:
        return _fail(EXIT_REFUSED, e)
    except SearchFailure as e:
        return _fail(EXIT_SEARCH, e)
    except (ValueError, ZeroDivisionError, OSError, json.JSONDecodeError, KeyError) as e:
        return _fail(EXIT_USAGE, e)
    text = _render(cfg, result)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def _fail(code: int, err: Exception) -> int:
    doc = {"error": {"type": type(err).__name__, "message": str(err)}, "exit_code": code, "version": __version__}
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
