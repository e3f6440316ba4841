"""Command-line front end: a thin client over the shared handler layer.

Every subcommand builds the same pydantic request models the HTTP service
accepts and calls the same handlers in process.  Exit codes: 0 success,
1 verification failures, 2 usage errors, 3 domain or convergence errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from pydantic import ValidationError

from . import api
from .config import GlobalConfig
from .errors import DomainError, NotConvergedError
from .jsonio import canonical_json

__all__ = ["main", "build_parser"]

_TEXT_DIGITS = 12


def _fmt(x: float) -> str:
    return format(x, f".{_TEXT_DIGITS}g")


def build_parser(defaults: GlobalConfig) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catseries",
        description=(
            "Evaluate and cross-verify the reciprocal-Catalan series family "
            "g_m(z), its generating-function relatives, and their golden-ratio "
            "weighted sums."
        ),
    )
    parser.add_argument("--abs-tol", type=float, default=defaults.abs_tol,
                        help="default series tolerance (env CSL_ABS_TOL)")
    parser.add_argument("--max-terms", type=int, default=defaults.max_terms,
                        help="summation term cap (env CSL_MAX_TERMS)")
    parser.add_argument("--quad-order", type=int, default=defaults.quad_order,
                        help="default quadrature order (env CSL_QUAD_ORDER)")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("eval", help="closed-form evaluation")
    p.add_argument("--what", required=True,
                   choices=["g", "f", "gtrig", "sprugnoli", "integrated"])
    p.add_argument("--m", type=int, default=0, help="power weight (g) or variant (gtrig)")
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("poly", help="exact polynomial coefficients")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", choices=["p1", "p2", "q"], default="p1")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("sum", help="direct summation with certified tail bound")
    p.add_argument("--spec", required=True,
                   help="weight-spec JSON, e.g. '{\"kind\":\"power\",\"m\":2,\"z\":0.5}'")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("fib", help="golden-ratio weighted closed forms")
    p.add_argument("--theorem", type=int, required=True, choices=[1, 2, 3])
    p.add_argument("--kind", required=True, choices=["F", "L"])
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--r", type=int, default=2, help="even subscript stride (theorem 3)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("integrate", help="finite-interval integral route")
    p.add_argument("--what", required=True, choices=["g", "f"])
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("mellin", help="Bessel-kernel integral route")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--cutoff", type=float, default=None, help="outer truncation point")
    p.add_argument("--order", type=int, default=None, help="nodes per panel")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run the identity registry")
    p.add_argument("--filter", default=None, help="tag (s1..s6) or id glob")
    p.add_argument("--format", choices=["json", "csv", "markdown"], default="json")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true", help="force --format json")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _emit(response, as_json: bool, text_lines) -> None:
    if as_json:
        sys.stdout.write(canonical_json(response.model_dump()))
    else:
        for line in text_lines(response):
            sys.stdout.write(line + "\n")


def _run_command(args: argparse.Namespace, config: GlobalConfig) -> int:
    if args.command == "eval":
        resp = api.handle_eval(api.EvalRequest(what=args.what, m=args.m, z=args.z), config)
        _emit(resp, args.json, lambda r: [_fmt(r.value)])
        return 0
    if args.command == "poly":
        resp = api.handle_poly(api.PolyRequest(m=args.m, family=args.family), config)
        if args.format == "json":
            sys.stdout.write(canonical_json(resp.model_dump()))
        else:
            sys.stdout.write(
                f"{resp.family}[m={resp.m}]({resp.variable}), degree {resp.degree}, "
                "coefficients lowest power first:\n"
            )
            sys.stdout.write(" ".join(resp.coefficients) + "\n")
        return 0
    if args.command == "sum":
        try:
            doc = json.loads(args.spec)
        except json.JSONDecodeError as exc:
            raise _UsageError(f"--spec is not valid JSON: {exc}")
        if not isinstance(doc, dict):
            raise _UsageError("--spec must be a JSON object")
        doc.setdefault("tol", config.abs_tol)
        doc.setdefault("max_terms", config.max_terms)
        resp = api.handle_sum(api.SumRequest(**doc), config)
        _emit(
            resp,
            args.json,
            lambda r: [
                _fmt(r.value),
                f"tail_bound={_fmt(r.tail_bound)} terms={r.terms_used} converged={r.converged}",
            ],
        )
        return 0 if resp.converged else 3
    if args.command == "fib":
        resp = api.handle_fib(
            api.FibRequest(theorem=args.theorem, kind=args.kind, s=args.s, r=args.r), config
        )
        _emit(resp, args.json, lambda r: [_fmt(r.value), r.expression])
        return 0
    if args.command == "integrate":
        resp = api.handle_integrate(
            api.IntegrateRequest(what=args.what, m=args.m, z=args.z, order=args.order), config
        )
        _emit(
            resp,
            args.json,
            lambda r: [
                _fmt(r.value),
                f"estimated_error={_fmt(r.estimated_error)} nodes={r.nodes_used}",
            ],
        )
        return 0
    if args.command == "mellin":
        resp = api.handle_mellin(
            api.MellinRequest(m=args.m, z=args.z, cutoff=args.cutoff, order=args.order), config
        )
        _emit(resp, args.json, lambda r: [_fmt(r.value)])
        return 0
    if args.command == "verify":
        fmt = "json" if args.json else args.format
        resp = api.handle_verify(api.VerifyRequest(filter=args.filter, format=fmt, jobs=args.jobs), config)
        if args.out is not None:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(resp.rendered)
            summary = resp.summary
            sys.stdout.write(
                f"wrote {args.out}: total {summary['total']}, pass {summary['pass']}, "
                f"fail {summary['fail']}, paper-discrepancy {summary['paper_discrepancy']}\n"
            )
        else:
            sys.stdout.write(resp.rendered)
        if resp.summary["paper_discrepancy"]:
            print(
                f"note: {resp.summary['paper_discrepancy']} PAPER-DISCREPANCY case(s); "
                "the flagged statement, not this build, disagrees numerically",
                file=sys.stderr,
            )
        return 0 if resp.passed else 1
    if args.command == "serve":
        import uvicorn

        uvicorn.run("catseries.app:app", host=args.host, port=args.port)
        return 0
    raise _UsageError("a subcommand is required (see --help)")


class _UsageError(Exception):
    pass


def main(argv: Optional[List[str]] = None) -> int:
    env_defaults = GlobalConfig.from_env()
    parser = build_parser(env_defaults)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    config = GlobalConfig(
        abs_tol=args.abs_tol,
        max_terms=args.max_terms,
        quad_order=args.quad_order,
        output_format=env_defaults.output_format,
    )
    try:
        return _run_command(args, config)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, NotConvergedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
