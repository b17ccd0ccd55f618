"""Command line interface.

Exit codes: 0 success (all checks pass, or ``eq`` true), 1 a check failed or
``eq`` is false, 2 usage or syntax error, 3 a resource bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Any, Callable, Sequence

from . import suites
from .algebra import Element, canonical, equals, expand_to_level, grade
from .config import Config, load_config, require_within
from .crossed import from_cuntz
from .errors import AlgebraError, ResourceBoundError
from .maps import get_map
from .parser import ExpressionSyntaxError, parse_expression
from .report import Report
from .rfs import car_generator
from .serialize import element_to_json
from .uhf import norm_gauge_invariant, norm_lower_bound, to_matrix_level

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BOUND = 3

CHECKS = ("cuntz", "rfs", "car", "transfer", "covariance", "crossed-roundtrip",
          "condition-star", "matrix", "fa", "all")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would call sys.exit(2) itself
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cuntzcar", description="Exact computations in O_2, the CAR algebra "
                "and the crossed product A_C x Z.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--config", help="key = value file with resource bounds")
    p.add_argument("--d", type=int, default=None, help="number of generators (default: inferred)")
    p.add_argument("--max-car-index", type=int)
    p.add_argument("--max-level", type=int)
    p.add_argument("--max-depth", type=int)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("normalize", help="canonical form of an expression")
    s.add_argument("expr")
    s.add_argument("--level", type=int, help="expand every monomial to this |J| level")

    s = sub.add_parser("eq", help="decide equality in O_d")
    s.add_argument("left")
    s.add_argument("right")

    s = sub.add_parser("grade", help="split into gauge-degree components")
    s.add_argument("expr")

    s = sub.add_parser("car", help="the n-th CAR generator as a polynomial in O_2")
    s.add_argument("n", type=int)

    s = sub.add_parser("apply", help="apply rho, zeta, delta or delta-star")
    s.add_argument("map", choices=("rho", "phi", "zeta", "delta", "delta-star"))
    s.add_argument("expr")

    s = sub.add_parser("decompose", help="coefficients in the crossed product")
    s.add_argument("expr")

    s = sub.add_parser("matrix", help="UHF matrix of a gauge-invariant element")
    s.add_argument("expr")
    s.add_argument("--level", type=int, required=True)

    s = sub.add_parser("norm", help="C*-norm, or a lower bound for non-gauge-invariant input")
    s.add_argument("expr")
    s.add_argument("--lower-bound-depth", type=int)

    s = sub.add_parser("check", help="run a verification suite")
    s.add_argument("suite", choices=CHECKS)
    s.add_argument("size", type=int, nargs="?", help="N for 'car', K for 'fa'")
    s.add_argument("--seed", type=int)
    return p


def _config(args: argparse.Namespace) -> Config:
    cfg = load_config(args.config)
    overrides = {k: getattr(args, k) for k in ("max_car_index", "max_level", "max_depth")
                 if getattr(args, k) is not None}
    return replace(cfg, **overrides)


def _parse(text: str, args: argparse.Namespace) -> Element:
    return parse_expression(text, args.d)


def _emit(args: argparse.Namespace, human: str, data: Any) -> None:
    print(json.dumps(data, indent=2) if args.json else human)


def _cmd_normalize(args, cfg: Config) -> int:
    x = _parse(args.expr, args)
    if args.level is not None:
        require_within("level", args.level, cfg.max_level)
        y = expand_to_level(x, args.level)
    else:
        y = canonical(x)
    _emit(args, str(y), {"expression": str(y), "element": element_to_json(y)})
    return EXIT_OK


def _cmd_eq(args, cfg: Config) -> int:
    x, y = _parse(args.left, args), _parse(args.right, args)
    if x.d != y.d:
        d = max(x.d, y.d)
        x, y = parse_expression(args.left, d), parse_expression(args.right, d)
    same = equals(x, y)
    _emit(args, "true" if same else "false", {"equal": same})
    return EXIT_OK if same else EXIT_FAIL


def _cmd_grade(args, cfg: Config) -> int:
    parts = {k: canonical(v) for k, v in grade(_parse(args.expr, args)).items()}
    human = "\n".join(f"degree {k}: {v}" for k, v in parts.items()) or "0"
    _emit(args, human, {str(k): str(v) for k, v in parts.items()})
    return EXIT_OK


def _cmd_car(args, cfg: Config) -> int:
    g = car_generator(args.n, cfg.max_car_index)
    _emit(args, str(g.value), {"n": args.n, "expression": str(g.value),
                               "element": element_to_json(g.value)})
    return EXIT_OK


def _cmd_apply(args, cfg: Config) -> int:
    y = canonical(get_map(args.map)(_parse(args.expr, args)))
    _emit(args, str(y), {"map": args.map, "expression": str(y), "element": element_to_json(y)})
    return EXIT_OK


def _cmd_decompose(args, cfg: Config) -> int:
    # the coefficient map is the natural output here, so it is JSON either way
    print(json.dumps(from_cuntz(_parse(args.expr, args)).to_text()))
    return EXIT_OK


def _cmd_matrix(args, cfg: Config) -> int:
    m = to_matrix_level(_parse(args.expr, args), args.level, cfg.max_level)
    _emit(args, str(m), {"level": m.level, "size": m.size,
                         "rows": [[str(v) for v in row] for row in m.to_rows()]})
    return EXIT_OK


def _cmd_norm(args, cfg: Config) -> int:
    x = _parse(args.expr, args)
    out: dict[str, Any] = {}
    if x.is_gauge_invariant():
        require_within("level", x.max_level(), cfg.max_level)
        out["norm"] = norm_gauge_invariant(x)
    depth = args.lower_bound_depth
    if depth is None and "norm" not in out:
        depth = cfg.max_depth
    if depth is not None:
        out["lower_bound"] = norm_lower_bound(x, depth, cfg.max_depth)
        out["depth"] = depth
    human = "\n".join(f"{k}: {v}" for k, v in out.items())
    _emit(args, human, out)
    return EXIT_OK


def run_check(name: str, size: int | None, seed: int, cfg: Config) -> list[Report]:
    if name == "car":
        n = 6 if size is None else size
        require_within("CAR index", n, cfg.max_car_index)
        return [suites.car_suite(n)]
    if name == "fa":
        k = 3 if size is None else size
        require_within("level", k, cfg.max_level)
        return [suites.fa_suite(k)]
    if size is not None:
        raise _UsageError(f"check {name} takes no size argument")
    table: dict[str, Callable[[], Report]] = {
        "cuntz": suites.cuntz_suite,
        "rfs": lambda: suites.rfs_suite(min(3, cfg.max_basis_level)),
        "transfer": lambda: suites.transfer_suite(seed, basis_level=cfg.max_basis_level),
        "covariance": lambda: suites.covariance_suite(seed),
        "crossed-roundtrip": lambda: suites.crossed_roundtrip_suite(seed),
        "condition-star": lambda: suites.condition_star_suite(seed, config=cfg),
        "matrix": lambda: suites.matrix_suite(seed),
    }
    if name == "all":
        return suites.all_suites(seed, cfg)
    return [table[name]()]


def _cmd_check(args, cfg: Config) -> int:
    seed = cfg.seed if args.seed is None else args.seed
    reports = run_check(args.suite, args.size, seed, cfg)
    ok = all(r.passed for r in reports)
    human = "\n".join(r.format() for r in reports)
    human += f"\n{'ALL PASS' if ok else 'FAILURES'} (seed {seed})"
    _emit(args, human, {"passed": ok, "seed": seed, "reports": [r.to_dict() for r in reports]})
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS: dict[str, Callable[[argparse.Namespace, Config], int]] = {
    "normalize": _cmd_normalize, "eq": _cmd_eq, "grade": _cmd_grade, "car": _cmd_car,
    "apply": _cmd_apply, "decompose": _cmd_decompose, "matrix": _cmd_matrix,
    "norm": _cmd_norm, "check": _cmd_check,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg)
    except ResourceBoundError as exc:
        print(f"resource bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ExpressionSyntaxError, AlgebraError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
