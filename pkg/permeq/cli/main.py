"""
permeq/cli/main.py

Command-line entry point: ``python -m permeq <command>`` or ``permeq``.

Commands
--------
  solve      all solutions of α∘y∘α⁻¹ = y^k, or of α∘x = x∘α∘x∘α
  certify    triviality certificates for α (or the n-cycle, --cyclic N)
  construct  B1 instances (--n --p [--target]), B2 solutions (--n --s),
             admissible parameters (--list N)
  roots      all square roots of σ
  survey     one row per cycle type of S_n, as JSON or CSV

Reports go to stdout; logs and error messages go to stderr.

Exit status
-----------
  0  success
  2  input error (bad notation, failed precondition, unwritable path,
     invalid PERM_EQ_* configuration)
  3  a search guard was exceeded
  4  internal verification failure
"""
from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

import structlog
from pydantic import BaseModel, ValidationError

from permeq.certify.certifier import certify
from permeq.cli import render
from permeq.cli.survey import SURVEY_FORMATS, dump_survey, run_survey, write_survey
from permeq.config import get_settings
from permeq.construct.b1 import b1_construct, b1_parameters
from permeq.construct.b2 import b2_parameters, b2_solution
from permeq.construct.transport import NoSolution, conjugacy_transporter, transport_solution
from permeq.core.notation import infer_degree, parse_cycles
from permeq.core.permutation import Permutation, cyclic
from permeq.exceptions import GuardExceededError, InputError, PreconditionError, VerificationError
from permeq.log import configure_logging
from permeq.models.schemas import (
    B1InstanceOut,
    B1ParameterOut,
    B2SolutionOut,
    CertifyReport,
    SolutionSetOut,
    TransportOut,
)
from permeq.search.roots import even_length_parity, square_roots_all
from permeq.search.solver import SOLVER_REGISTRY, solve_starstar
from permeq.search.star import solve_star

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_GUARD = 3
EXIT_VERIFY = 4


def read_permutation(text: str, n: int | None) -> Permutation:
    """Parse cycle notation; the degree is the largest point unless *n* is given."""
    degree = n if n is not None else infer_degree(text)
    return parse_cycles(text, degree)


def _emit(args: argparse.Namespace, model: BaseModel, text: str) -> None:
    print(model.model_dump_json(indent=2) if args.json else text)


# ── Commands ─────────────────────────────────────────────

def cmd_solve(args: argparse.Namespace) -> int:
    alpha = read_permutation(args.alpha, args.n)
    if args.eq == "star":
        if args.k != 2:
            raise InputError("--k applies to --eq starstar only.")
        result = solve_star(alpha, args.strategy, workers=args.workers)
    else:
        result = solve_starstar(alpha, args.k, args.strategy, workers=args.workers)
    out = SolutionSetOut.from_domain(result)
    _emit(args, out, render.solution_set(out))
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    alpha = cyclic(args.cyclic) if args.cyclic is not None else read_permutation(args.alpha, args.n)
    report = CertifyReport.from_domain(alpha, certify(alpha))
    _emit(args, report, render.certify_report(report))
    return EXIT_OK


def _construct_list(args: argparse.Namespace) -> int:
    pairs = b1_parameters(args.list)
    if args.json:
        print("[" + ", ".join(B1ParameterOut(n=n, p=p).model_dump_json() for n, p in pairs) + "]")
    else:
        print("\n".join(f"n={n} p={p}" for n, p in pairs))
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    if args.list is not None:
        return _construct_list(args)
    if args.n is None:
        raise InputError("construct needs --n (or --list N).")
    target = read_permutation(args.target, args.n) if args.target else None

    if args.s is not None:
        alpha = target if target is not None else cyclic(args.n)
        p, m = b2_parameters(args.n)
        y = b2_solution(alpha, 1, args.s)
        out = B2SolutionOut(n=args.n, p=p, m=m, s=args.s, alpha=str(alpha), solution=str(y))
        _emit(args, out, render.b2_solution(out))
        return EXIT_OK

    if args.p is None:
        raise InputError("construct needs --p (B1 instance) or --s (B2 solution).")
    instance = b1_construct(args.n, args.p)
    transport = None
    if target is not None:
        witness = conjugacy_transporter(instance.beta, target)
        if isinstance(witness, NoSolution):
            raise PreconditionError("target is a single n-cycle")
        z = transport_solution(instance.beta, instance.y, target)
        transport = TransportOut.from_domain(witness, z)
    out = B1InstanceOut.from_domain(instance, transport)
    _emit(args, out, render.b1_instance(out))
    return EXIT_OK


def cmd_roots(args: argparse.Namespace) -> int:
    sigma = read_permutation(args.sigma, args.n)
    result = square_roots_all(sigma)
    out = SolutionSetOut.from_domain(result)
    odd_counts = even_length_parity(sigma)
    reason = ", ".join(
        f"{count} cycle(s) of even length {length}" for length, count in odd_counts.items()
    )
    if reason:
        reason = f"sigma has {reason}; each even length must occur an even number of times"
    _emit(args, out, render.solution_set(out, reason))
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    rows = run_survey(args.n, workers=args.workers)
    if args.output is None:
        sys.stdout.write(dump_survey(rows, args.format))
        return EXIT_OK
    write_survey(rows, args.output, args.format)
    nontrivial = sum(1 for r in rows if r.solution_count > 1)
    print(f"{len(rows)} cycle types of S_{args.n} ({nontrivial} with non-trivial solutions) -> {args.output}")
    return EXIT_OK


# ── Parser ───────────────────────────────────────────────

def _positive(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{raw}'") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permeq",
        description="Solve and certify α∘y∘α⁻¹ = y² in the symmetric group S_n.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level to stderr")
    parser.add_argument("--log-json", action="store_true", help="render logs as JSON lines")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="all solutions of the conjugate equation")
    solve.add_argument("--alpha", required=True, help='cycle notation, e.g. "(1,2,3)(4,5)"')
    solve.add_argument("--n", type=_positive, help="degree (default: largest point)")
    solve.add_argument("--eq", choices=("starstar", "star"), default="starstar")
    solve.add_argument("--k", type=_positive, default=2, help="exponent of y^k (starstar only)")
    solve.add_argument("--strategy", choices=sorted(SOLVER_REGISTRY), default="auto")
    solve.add_argument("--workers", type=_positive, default=None)
    solve.add_argument("--json", action="store_true")
    solve.set_defaults(handler=cmd_solve)

    cert = sub.add_parser("certify", help="triviality certificates")
    source = cert.add_mutually_exclusive_group(required=True)
    source.add_argument("--alpha", help="cycle notation")
    source.add_argument("--cyclic", type=_positive, metavar="N", help="the n-cycle (1,...,N)")
    cert.add_argument("--n", type=_positive)
    cert.add_argument("--json", action="store_true")
    cert.set_defaults(handler=cmd_certify)

    cons = sub.add_parser("construct", help="explicit non-trivial solutions")
    cons.add_argument("--n", type=_positive)
    cons.add_argument("--p", type=int, help="odd prime with p | n and p | 2^(n/p) - 1")
    cons.add_argument("--s", type=int, help="B2 parameter in 1..p-1")
    cons.add_argument("--target", help="n-cycle to carry the solution onto")
    cons.add_argument("--list", type=_positive, metavar="N", help="list admissible (n, p) up to N")
    cons.add_argument("--json", action="store_true")
    cons.set_defaults(handler=cmd_construct)

    roots = sub.add_parser("roots", help="all y with y∘y = sigma")
    roots.add_argument("sigma", help="cycle notation")
    roots.add_argument("--n", type=_positive)
    roots.add_argument("--json", action="store_true")
    roots.set_defaults(handler=cmd_roots)

    survey = sub.add_parser("survey", help="solution counts for every cycle type of S_n")
    survey.add_argument("--n", type=_positive, required=True)
    survey.add_argument("--output", type=Path, default=None, help="file to write (default: stdout)")
    survey.add_argument("--format", choices=SURVEY_FORMATS, default="json")
    survey.add_argument("--workers", type=_positive, default=None)
    survey.set_defaults(handler=cmd_survey)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = get_settings()
        configure_logging(
            "DEBUG" if args.verbose else config.log_level,
            json=args.log_json or config.log_json,
        )
    except ValueError as exc:
        # pydantic ValidationError is a ValueError too
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INPUT
    logger.debug("command_started", command=args.command)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (VerificationError, ValidationError) as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
