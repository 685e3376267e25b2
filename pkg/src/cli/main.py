"""Command-line front end: ``verify`` runs suites, ``compute`` prints exact objects.

Exit status is 0 when every non-skipped check passes, 1 when a check fails
and 2 on usage errors (bad flags, malformed matrices or rationals).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from src.cli import suites  # noqa: F401  registers the checks
from src.cli.compute import COMPUTE
from src.cli.parsing import parse_element, parse_operator
from src.cli.registry import SUITES, get_check, run_checks, run_suite
from src.exact.errors import ModHeckeError
from src.hecke import FormValue, act_on_form, hopf_act
from src.models.checks import Report
from src.models.config import RunConfig
from src.models.values import FormValueModel, HeckeElemModel
from src.utils.logger import get_logger, set_level

logger = get_logger(__name__)

ANALYTIC_GROUPS = {
    "periods": ("analytic.half_period", "analytic.lattice", "analytic.character_T"),
    "euler-crosscheck": ("analytic.euler_crosscheck",),
    "m1": ("analytic.m1", "analytic.c_integral"),
}

_CONFIG_FIELDS = ("order", "seed", "max_entry", "triples", "pairs", "samples", "fragment_pairs", "z0")


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--order", type=int, help="q-truncation order (env MODHECKE_ORDER, default 60)")
    common.add_argument("--seed", type=int, help="seed for random samples (env MODHECKE_SEED)")
    common.add_argument("--max-entry", type=int, dest="max_entry", help="entry bound for sampled matrices")
    common.add_argument("--triples", type=int, help="random triples for 2-cocycle identities")
    common.add_argument("--pairs", type=int, help="random pairs for numeric checks")
    common.add_argument("--samples", type=int, help="random elements for Hecke identities")
    common.add_argument(
        "--fragment-pairs",
        type=int,
        dest="fragment_pairs",
        help="random element pairs for the Leibniz and commutator identities (default 50)",
    )
    common.add_argument("--z0", help="base point a+bi of the numeric cocycles")
    common.add_argument("--slow", action="store_true", help="also run checks marked slow")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="plain-text output")
    common.add_argument("--no-progress", action="store_true", help="hide the progress bar")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="modhecke", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("suite", choices=SUITES + ("all",))
    verify.set_defaults(handler=cmd_verify)

    compute = sub.add_parser("compute", parents=[common], help="print one exact object")
    compute.add_argument("object", choices=sorted(COMPUTE))
    compute.add_argument("--series", default="e4", help="qexp: eta4, delta, e2, e4, e6, g2_star, omega4")
    compute.add_argument("--g", help="mu: matrix a,b,c,d")
    compute.add_argument("--g1", help="rho: first matrix a,b,c,d")
    compute.add_argument("--g2", help="rho: second matrix a,b,c,d")
    compute.add_argument("--x", default="0,0", help="dedekind: torsion point x1,x2")
    compute.add_argument("--frac", default="0/1", help="dedekind: cusp m/n")
    compute.add_argument("--n", type=int, default=2, help="T: Hecke index")
    compute.add_argument("--a", default="E4", help="rc1: first element (form tag or JSON)")
    compute.add_argument("--b", default="E6", help="rc1: second element (form tag or JSON)")
    compute.add_argument("--t", default="0", help="perturb-u: t as 0, eta4 or a matrix for mu_g")
    compute.add_argument("--lam", default="1", help="perturb-u: lambda")
    compute.add_argument("--m", default="2,0,0,1", help="perturb-u: m as 0, eta4 or a matrix for mu_g")
    compute.add_argument("--h", default="d1", help="perturb-u: PBW monomial such as 'd1^2 X Y'")
    compute.set_defaults(handler=cmd_compute)

    euler = sub.add_parser("euler", parents=[common], help="the Euler cocycle rho")
    euler_sub = euler.add_subparsers(dest="action", required=True)
    rho = euler_sub.add_parser("rho", parents=[common])
    rho.add_argument("--g1", required=True)
    rho.add_argument("--g2", required=True)
    rho.set_defaults(handler=cmd_euler_rho)
    euler_check = euler_sub.add_parser("check", parents=[common])
    euler_check.set_defaults(handler=cmd_euler_check)

    curve = sub.add_parser("curve", parents=[common], help="identities of the curve y^2 = x^3 + 1")
    curve_sub = curve.add_subparsers(dest="action", required=True)
    curve_sub.add_parser("verify", parents=[common]).set_defaults(handler=cmd_curve_verify)

    analytic = sub.add_parser("analytic", parents=[common], help="floating-point cross-checks")
    analytic.add_argument("group", choices=sorted(ANALYTIC_GROUPS))
    analytic.set_defaults(handler=cmd_analytic)

    hecke = sub.add_parser("hecke", parents=[common], help="operations on Hecke elements")
    hecke_sub = hecke.add_subparsers(dest="action", required=True)
    mul = hecke_sub.add_parser("mul", parents=[common])
    mul.add_argument("--a", required=True)
    mul.add_argument("--b", required=True)
    mul.set_defaults(handler=cmd_hecke_mul)
    act = hecke_sub.add_parser("act", parents=[common])
    act.add_argument("--a", required=True)
    act.add_argument("--form", required=True)
    act.set_defaults(handler=cmd_hecke_act)
    hopf = hecke_sub.add_parser("hopf-act", parents=[common])
    hopf.add_argument("--op", required=True, help="X, Y, d1, d2, d2p or any PBW monomial")
    hopf.add_argument("--a", required=True)
    hopf.set_defaults(handler=cmd_hecke_hopf_act)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    values = {k: getattr(args, k) for k in _CONFIG_FIELDS if getattr(args, k, None) is not None}
    return RunConfig(include_slow=bool(getattr(args, "slow", False)), **values)


def _fmt(args: argparse.Namespace) -> str:
    return getattr(args, "fmt", "json")


def _progress(args: argparse.Namespace) -> bool:
    return not getattr(args, "no_progress", False)


def _emit(args: argparse.Namespace, payload, text: str) -> None:
    if _fmt(args) == "text":
        print(text)
    else:
        print(json.dumps(payload, indent=2))


def _render_report(report: Report) -> str:
    lines = [f"suite {report.suite}"]
    for c in report.checks:
        extra = []
        if c.verified_order is not None:
            extra.append(f"order {c.verified_order}")
        if c.residual is not None:
            extra.append(f"residual {c.residual:.3e} <= {c.tolerance:.0e}" if c.passed else f"residual {c.residual:.3e}")
        if c.detail:
            extra.append(c.detail)
        suffix = f"  [{'; '.join(extra)}]" if extra else ""
        lines.append(f"{c.status.upper():7} {c.check_id}  {c.anchor}{suffix}")
    counts = report.counts()
    lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    return "\n".join(lines)


def _report(args: argparse.Namespace, report: Report) -> int:
    if _fmt(args) == "text":
        print(_render_report(report))
    else:
        print(report.model_dump_json(indent=2))
    return report.exit_code


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    logger.info("verifying %s at order %d with seed %d", args.suite, config.order, config.seed)
    return _report(args, run_suite(args.suite, config, progress=_progress(args)))


def cmd_compute(args: argparse.Namespace, config: RunConfig) -> int:
    args.order = config.order
    payload, text = COMPUTE[args.object](args)
    _emit(args, payload, text)
    return 0


def cmd_euler_rho(args: argparse.Namespace, config: RunConfig) -> int:
    payload, text = COMPUTE["rho"](args)
    _emit(args, payload, text)
    return 0


def _run_ids(name: str, ids, args: argparse.Namespace, config: RunConfig) -> int:
    specs = [get_check(i) for i in ids]
    return _report(args, run_checks(name, specs, config, progress=_progress(args)))


def cmd_euler_check(args: argparse.Namespace, config: RunConfig) -> int:
    return _run_ids("euler", ("euler.cocycle",), args, config)


def cmd_curve_verify(args: argparse.Namespace, config: RunConfig) -> int:
    return _report(args, run_suite("curve", config, progress=_progress(args)))


def cmd_analytic(args: argparse.Namespace, config: RunConfig) -> int:
    return _run_ids(f"analytic {args.group}", ANALYTIC_GROUPS[args.group], args, config)


def cmd_hecke_mul(args: argparse.Namespace, config: RunConfig) -> int:
    F = parse_element(args.a) * parse_element(args.b)
    _emit(args, HeckeElemModel.from_value(F).model_dump(mode="json"), F.render())
    return 0


def cmd_hecke_act(args: argparse.Namespace, config: RunConfig) -> int:
    value = act_on_form(parse_element(args.a), FormValue.form(args.form))
    _emit(args, FormValueModel.from_value(value).model_dump(mode="json"), value.render())
    return 0


def cmd_hecke_hopf_act(args: argparse.Namespace, config: RunConfig) -> int:
    F = hopf_act(parse_operator(args.op), parse_element(args.a))
    _emit(args, HeckeElemModel.from_value(F).model_dump(mode="json"), F.render())
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "verbose", False):
        set_level("DEBUG")
    try:
        config = _config(args)
        return args.handler(args, config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ModHeckeError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return 1


__all__ = ["build_parser", "main"]
