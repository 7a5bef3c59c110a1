# posalg/cli.py

"""
Command-line front end.

Verbs: verify, build, dual, hecke, dilate, census, recover. Reports are
JSON on stdout (or --out); logging goes to stderr.
"""

import os
import sys
import json
import logging
import argparse
from fractions import Fraction

from .algebra import dual
from .config import (DEFAULT_CENSUS_ORDER, EXIT_FAILS, EXIT_HOLDS, EXIT_INCONCLUSIVE, EXIT_USAGE, TOOL_VERSION,
                     get_default_jobs)
from .dilation import a_lambda, coarse_grain_search, lambda_census, strict_dilation_search
from .exceptions import PosalgError, UsageError
from .formats import emit_2alg, emit_monoid, load_2alg
from .hecke import build_gl, build_hecke, group_bialgebra, hecke_two_algebra, iwahori_check
from .models import Report, Status, Verdict
from .scalars import format_rational, parse_rational
from .semigroups import build_member, parse_semigroup_spec, recover_semigroup, semigroup_bialgebra
from .verify import (check_homogeneity, check_involutive, check_positive_2_algebra, check_positivity,
                     is_bialgebra, is_semisimple, run_all, validate_2_algebra)

logger = logging.getLogger('posalg.cli')

CHECKS = {
    "validate": lambda A: [validate_2_algebra(A)],
    "involutive": lambda A: [check_involutive(A)],
    "bialgebra": lambda A: [is_bialgebra(A)],
    "semisimple": lambda A: [is_semisimple(A, "algebra"), is_semisimple(A, "coalgebra")],
    "positivity": lambda A: list(check_positivity(A)),
    "homogeneity": lambda A: [check_homogeneity(A)],
    "positive": lambda A: [check_positive_2_algebra(A)],
}


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so usage errors map to their own exit code"""

    def error(self, message):
        raise UsageError(message)


def resolve_member(text):
    """Group or inverse semigroup from 'group:<kind>:<params>' or 'semigroup:<kind>:<n>'"""
    kind, _, rest = text.partition(":")
    try:
        if kind == "group":
            return build_member(rest)
        if kind == "semigroup":
            return parse_semigroup_spec(rest)
    except ValueError as e:
        raise UsageError(str(e)) from e
    raise UsageError(f"not a group or semigroup address: {text!r}")


def resolve_algebra(text):
    """
    Build the 2-algebra named by an address or read it from a 2ALG file

    Addresses: group:cyclic:4, semigroup:sym_inverse:2, a_lambda:1/3,
    hecke:3:2 (stochastic basis) or hecke:3:2:tau, gl:2:3, dual:<address>.

    Raises:
        UsageError: If the address cannot be parsed
    """
    kind, _, rest = text.partition(":")
    try:
        if kind == "dual":
            return dual(resolve_algebra(rest))
        if kind in ("group", "semigroup"):
            return semigroup_bialgebra(resolve_member(text))
        if kind == "a_lambda":
            return a_lambda(parse_rational(rest))
        if kind == "hecke":
            parts = rest.split(":")
            if len(parts) not in (2, 3):
                raise UsageError(f"expected hecke:n:q[:tau], got {text!r}")
            basis = parts[2] if len(parts) == 3 else "stochastic"
            return hecke_two_algebra(build_hecke(int(parts[0]), parse_rational(parts[1])), basis=basis)
        if kind == "gl":
            n, p = (int(v) for v in rest.split(":"))
            return group_bialgebra(build_gl(n, p))
    except ValueError as e:
        raise UsageError(str(e)) from e
    if os.path.exists(text):
        return load_2alg(text)
    raise UsageError(f"no such file or algebra address: {text!r}")


def exit_code(verdicts):
    statuses = [v.status for v in verdicts]
    if Status.FAILS in statuses:
        return EXIT_FAILS
    if Status.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_HOLDS


def _rational_arg(text):
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="Write the report or 2ALG document to this file instead of stdout")
    common.add_argument("--jobs", type=int, help="Worker processes for searches (default: POSALG_JOBS or CPU count)")
    common.add_argument("--seed", type=int, help="Seed for randomized property runs (searches are deterministic)")
    common.add_argument("--debug", action="store_true", help="Enable debug logging")

    parser = _Parser(prog="posalg", description="Positive 2-algebra and dilation workbench")
    parser.add_argument("--version", action="version", version=f"posalg {TOOL_VERSION}")
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    verify = verbs.add_parser("verify", parents=[common], help="Run axiom checks on a 2-algebra")
    verify.add_argument("algebra", help="2ALG file or algebra address")
    verify.add_argument("--all", action="store_true", help="Run every individual check")
    verify.add_argument("--check", action="append", choices=sorted(CHECKS), help="Run only this check")

    build = verbs.add_parser("build", parents=[common], help="Emit a catalog algebra as 2ALG")
    build.add_argument("algebra", help="Algebra address")
    build.add_argument("--monoid", action="store_true", help="Emit the group or semigroup table instead")

    dual_verb = verbs.add_parser("dual", parents=[common], help="Emit the dual 2-algebra")
    dual_verb.add_argument("algebra", help="2ALG file or algebra address")

    hecke = verbs.add_parser("hecke", parents=[common], help="Hecke algebras and the GL_n(F_p) realisation")
    hecke_verbs = hecke.add_subparsers(dest="action", required=True, parser_class=_Parser)
    hecke_build = hecke_verbs.add_parser("build", parents=[common], help="Emit H_n(q) as 2ALG")
    hecke_build.add_argument("-n", type=int, required=True, help="Rank")
    hecke_build.add_argument("-q", type=_rational_arg, required=True, help="Parameter p/q")
    hecke_build.add_argument("--basis", choices=("stochastic", "tau"), default="stochastic")
    iwahori = hecke_verbs.add_parser("iwahori", parents=[common], help="Match H_n(p) with Borel double cosets")
    iwahori.add_argument("-n", type=int, required=True, help="Matrix size")
    iwahori.add_argument("-p", type=int, required=True, help="Prime")

    dilate = verbs.add_parser("dilate", parents=[common], help="Search for dilations")
    dilate_verbs = dilate.add_subparsers(dest="mode", required=True, parser_class=_Parser)
    strict = dilate_verbs.add_parser("strict", parents=[common], help="Strict dilations into the catalog")
    strict.add_argument("--target", required=True, help="2ALG file or algebra address")
    strict.add_argument("--max-order", type=int, default=8, help="Largest group order (default: 8)")
    strict.add_argument("--no-semigroups", action="store_true", help="Search groups only")
    coarse = dilate_verbs.add_parser("coarse", parents=[common], help="Coarse grains of abelian character tables")
    target = coarse.add_mutually_exclusive_group(required=True)
    target.add_argument("--lambda", dest="lam", type=_rational_arg, help="λ of the target A_λ")
    target.add_argument("--target", help="Bicommutative 2ALG file or algebra address")
    coarse.add_argument("--max-order", type=int, default=8, help="Largest group order (default: 8)")

    census = verbs.add_parser("census", parents=[common], help="Tabulate achieved λ against the predicate")
    census.add_argument("--max-order", type=int, default=DEFAULT_CENSUS_ORDER,
                        help=f"Largest group order (default: {DEFAULT_CENSUS_ORDER})")
    census.add_argument("--semigroups", action="store_true", help="Include I_n and matrix-unit semigroups")

    recover = verbs.add_parser("recover", parents=[common], help="Recover the inverse semigroup of a bialgebra")
    recover.add_argument("algebra", help="2ALG file or algebra address")
    return parser


# -- verbs ---------------------------------------------------------------------

def _verify(args, report):
    A = resolve_algebra(args.algebra)
    if args.check:
        verdicts = [v for name in args.check for v in CHECKS[name](A)]
    elif args.all:
        verdicts = run_all(A)
    else:
        verdicts = [check_positive_2_algebra(A)]
    for verdict in verdicts:
        report.add_result(verdict)
    report.extra["algebra"] = {"dim": A.dim, "labels": A.labels, "weakened": A.weakened}
    return exit_code(verdicts), report


def _build(args, report):
    if args.monoid:
        return EXIT_HOLDS, emit_monoid(resolve_member(args.algebra))
    return EXIT_HOLDS, emit_2alg(resolve_algebra(args.algebra))


def _dual(args, report):
    return EXIT_HOLDS, emit_2alg(dual(resolve_algebra(args.algebra)))


def _hecke(args, report):
    if args.action == "build":
        return EXIT_HOLDS, emit_2alg(hecke_two_algebra(build_hecke(args.n, args.q), basis=args.basis))
    verdict = iwahori_check(args.n, args.p)
    report.add_result(verdict)
    if verdict and verdict.payload:
        report.extra["match"] = {key: value for key, value in verdict.payload.items() if key != "induced"}
    return exit_code([verdict]), report


def _dilate(args, report):
    if args.mode == "strict":
        target = resolve_algebra(args.target)
        witnesses = strict_dilation_search(target, args.max_order, include_semigroups=not args.no_semigroups,
                                           jobs=args.jobs)
        report.witnesses = [w.to_dict() for w in witnesses]
        check = "strict_dilation_search"
    else:
        target = args.lam if args.lam is not None else resolve_algebra(args.target)
        witness = coarse_grain_search(target, args.max_order)
        report.witnesses = [witness.to_dict()] if witness else []
        check = "coarse_grain_search"
    report.extra["target"] = args.target if args.target else f"a_lambda:{format_rational(args.lam)}"
    report.extra["bounds"] = {"max_order": args.max_order}
    if report.witnesses:
        verdict = Verdict.holds(check, notes=f"{len(report.witnesses)} witness(es), each re-verified")
    else:
        verdict = Verdict.fails(check, {"reason": "no witness within bounds", "max_order": args.max_order},
                                notes="absence within the catalog bounds, not a proof of nonexistence")
    report.add_result(verdict)
    return exit_code([verdict]), report


def _census(args, report):
    result = lambda_census(args.max_order, include_semigroups=args.semigroups, jobs=args.jobs)
    report.extra["census"] = result.to_dict()
    report.discrepancies = result.discrepancies
    unpredicted = [format_rational(lam) for lam, witnesses in result.strict.items()
                   if witnesses and not result.predictions[lam].predicted]
    if unpredicted:
        verdict = Verdict.fails("lambda_census", {"unpredicted": unpredicted})
    else:
        verdict = Verdict.holds("lambda_census", notes=f"{len(result.strict)} λ values, all predicted")
    report.add_result(verdict)
    return exit_code([verdict]), report


def _recover(args, report):
    S = recover_semigroup(resolve_algebra(args.algebra))
    report.extra["semigroup"] = json.loads(emit_monoid(S))
    report.add_result(Verdict.holds("recover_semigroup", notes=f"inverse semigroup of order {S.size}"))
    return EXIT_HOLDS, report


VERBS = {"verify": _verify, "build": _build, "dual": _dual, "hecke": _hecke, "dilate": _dilate,
         "census": _census, "recover": _recover}


def run(argv):
    """
    Execute one command line

    Args:
        argv (list of str): Arguments without the program name

    Returns:
        tuple: (exit code, Report or document text or None)
    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE, None
    if args.debug:
        logging.getLogger('posalg').setLevel(logging.DEBUG)
    if args.jobs is None:
        args.jobs = get_default_jobs()
    command = {key: (format_rational(value) if isinstance(value, Fraction) else value)
               for key, value in sorted(vars(args).items()) if key not in ("out", "debug")}
    report = Report(command)
    try:
        code, output = VERBS[args.verb](args, report)
    except PosalgError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE, None
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_USAGE, None
    text = output if isinstance(output, str) else json.dumps(output.to_dict(), indent=2, ensure_ascii=False) + "\n"
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info(f"Wrote {args.out}")
    else:
        sys.stdout.write(text)
    return code, output


def main(argv=None):
    """Main function"""
    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    code, _ = run(sys.argv[1:] if argv is None else argv)
    sys.exit(code)


if __name__ == "__main__":
    main()
