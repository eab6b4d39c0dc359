"""Command-line front end: coefficient queries and verification drivers.

Every command prints JSON by default (TSV for tabular output via
--format tsv) and is deterministic for a fixed --seed.  Exit codes:
0 all checks passed, 1 a mathematical identity failed, 2 usage or
resource errors.  Resource caps come from the environment:
BLOCKREP_MAX_DEGREE, BLOCKREP_MAX_LEVEL and BLOCKREP_MAX_SIZE.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .ghat import BandEscapeError, commutator_formula_check, search_report
from .lr import lr_coefficient, tensor_decompose
from .partitions import (SemidominantWeight, negative_weight,
                         parse_half_weight, parse_partition, positive_weight)
from .polymodel import (cauchy_character_check, det_products_span_check,
                        singular_space_report)
from .reciprocity import (induced_multiplicity, kac_radul_report,
                          random_triples, reciprocity_check)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _cap(name: str, default: int) -> int:
    try:
        return int(os.environ.get(name, default))
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer")


def _check_cap(value: int, name: str, default: int) -> None:
    cap = _cap(name, default)
    if value > cap:
        raise UsageError(f"requested {value} exceeds cap {cap} "
                         f"(raise {name} to override)")


def _emit(data, fmt: str, tsv_rows=None) -> None:
    if fmt == "tsv" and tsv_rows is not None:
        for row in tsv_rows:
            print("\t".join(str(x) for x in row))
    else:
        print(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid rational number: {text!r}") from exc


def _parse_weight_vector(text: str) -> tuple[int, ...]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid weight syntax: {text!r}") from exc
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise UsageError(f"weight must be an integer list: {text!r}")
    return tuple(data)


def _parse_chi(args) -> SemidominantWeight:
    chi1 = parse_partition(args.chi1) if args.chi1 else ()
    chi2 = parse_partition(args.chi2) if args.chi2 else ()
    return SemidominantWeight(negative_weight(chi1), positive_weight(chi2))


def cmd_lr(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    _check_cap(lam.size + mu.size, "BLOCKREP_MAX_SIZE", 14)
    if args.nu is not None:
        nu = parse_partition(args.nu)
        value = lr_coefficient(lam, mu, nu)
        _emit({"lambda": str(lam), "mu": str(mu), "nu": str(nu),
               "coefficient": value}, args.format,
              [[str(lam), str(mu), str(nu), value]])
        return EXIT_OK
    return _emit_table(lam, mu, args)


def cmd_decompose(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    _check_cap(lam.size + mu.size, "BLOCKREP_MAX_SIZE", 14)
    return _emit_table(lam, mu, args)


def _emit_table(lam, mu, args) -> int:
    table = tensor_decompose(lam, mu, row_bound=args.row_bound)
    _emit({"lambda": str(lam), "mu": str(mu), "table": table.to_json()},
          args.format, [[str(nu), c] for nu, c in sorted(table.items())])
    return EXIT_OK


def cmd_cauchy(args) -> int:
    _check_cap(args.dmax, "BLOCKREP_MAX_DEGREE", 10)
    report = cauchy_character_check(args.n, args.dmax)
    _emit(report, args.format,
          [[r["degree"], r["lhs_dim"], r["rhs_dim"]] for r in report["rows"]])
    return EXIT_OK if report["pass"] else EXIT_CHECK_FAILED


def cmd_singular_poly(args) -> int:
    _check_cap(args.d, "BLOCKREP_MAX_DEGREE", 10)
    report = singular_space_report(args.n, args.d)
    report["span_check"] = det_products_span_check(args.n, args.d)
    _emit(report, args.format)
    ok = (report["kernel_dim"] == report["expected_kernel_dim"]
          and report["span_check"])
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_singular_ghat(args) -> int:
    _check_cap(args.level_max, "BLOCKREP_MAX_LEVEL", 10)
    chi = _parse_chi(args)
    if chi.chi1.body.size > 2 or chi.chi2.body.size > 2:
        raise UsageError("chi support is limited to at most 2 boxes per side")
    report = search_report(chi, _parse_fraction(args.c), args.level_max,
                           band=args.band)
    _emit(report, args.format)
    return EXIT_OK


def cmd_commutator_check(args) -> int:
    chi = _parse_chi(args)
    report = commutator_formula_check(args.k, args.l, chi,
                                      _parse_fraction(args.c))
    _emit(report, args.format)
    return EXIT_OK if report["match"] else EXIT_CHECK_FAILED


def cmd_multiplicity(args) -> int:
    chi = _parse_chi(args)
    nu1 = parse_half_weight(args.nu1)
    nu2 = parse_half_weight(args.nu2)
    value = induced_multiplicity(chi, nu1, nu2)
    _emit({"chi": chi.to_json(), "nu1": nu1.to_json(), "nu2": nu2.to_json(),
           "multiplicity": value}, args.format)
    return EXIT_OK


def _run_reciprocity_case(nu, lam_minus, mu_plus, n_list) -> dict:
    report = reciprocity_check(nu, lam_minus, mu_plus, n_list)
    return report.to_json()


def cmd_reciprocity(args) -> int:
    if args.batch:
        return _reciprocity_batch(args)
    if args.random:
        return _reciprocity_random(args)
    if not (args.nu and args.lambda_minus and args.mu_plus and args.n_list):
        raise UsageError("need --nu, --lambda-minus, --mu-plus and --N-list "
                         "(or --batch/--random)")
    nu = _parse_weight_vector(args.nu)
    lam_minus = parse_half_weight(args.lambda_minus)
    mu_plus = parse_half_weight(args.mu_plus)
    n_list = [int(x) for x in args.n_list.split(",")]
    data = _run_reciprocity_case(nu, lam_minus, mu_plus, n_list)
    _emit(data, args.format)
    return EXIT_OK if data["holds"] else EXIT_CHECK_FAILED


def _reciprocity_batch(args) -> int:
    results = []
    invalid = failed = 0
    with open(args.batch) as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                case = json.loads(line)
                nu = tuple(case["nu"])
                lam_minus = negative_weight(case["lambda_minus"]["body"])
                mu_plus = positive_weight(case["mu_plus"]["body"])
                data = _run_reciprocity_case(nu, lam_minus, mu_plus,
                                             [int(n) for n in case["N_list"]])
                if not data["holds"]:
                    failed += 1
                results.append({"line": lineno, **data})
            except (KeyError, TypeError, ValueError,
                    json.JSONDecodeError) as exc:
                invalid += 1
                results.append({"line": lineno, "error": str(exc)})
    for entry in results:
        print(json.dumps(entry, sort_keys=True, separators=(",", ":")))
    if invalid:
        return EXIT_USAGE
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _reciprocity_random(args) -> int:
    _check_cap(args.size_bound, "BLOCKREP_MAX_SIZE", 14)
    cases = random_triples(args.random, args.size_bound, args.seed)
    results = []
    failed = 0
    for nu, lam_minus, mu_plus, n_list in cases:
        data = _run_reciprocity_case(nu, lam_minus, mu_plus, n_list)
        if not data["holds"]:
            failed += 1
        results.append(data)
    _emit({"seed": args.seed, "count": len(results), "failed": failed,
           "cases": results}, args.format)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_kac_radul(args) -> int:
    nu = _parse_weight_vector(args.nu)
    _check_cap(args.size_bound, "BLOCKREP_MAX_SIZE", 14)
    report = kac_radul_report(nu, args.n, args.size_bound)
    _emit(report, args.format,
          [[e["lambda_body"], e["mu_body"], e["multiplicity"]]
           for e in report["entries"]])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockrep",
        description="Exact tensor coefficients and singular vector searches "
                    "for block matrix algebras.")
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized suites")
    # the same flags are accepted after the subcommand as well
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"),
                        default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: argparse.ArgumentParser(
                                    parents=[common], **kw))

    p = sub.add_parser("lr", help="single coefficient or full tensor table")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu", nargs="?")
    p.add_argument("--row-bound", type=int, default=None)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("decompose", help="full tensor product table")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("--row-bound", type=int, default=None)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("cauchy", help="graded dimension identity check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("singular-poly",
                       help="joint raising kernel of the polynomial model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_singular_poly)

    p = sub.add_parser("singular-ghat",
                       help="singular vector search in an induced module")
    p.add_argument("--c", required=True, help="central charge (rational)")
    p.add_argument("--chi1", default=None,
                   help="negative-side body partition, e.g. [1]")
    p.add_argument("--chi2", default=None,
                   help="positive-side body partition")
    p.add_argument("--level-max", type=int, required=True)
    p.add_argument("--band", type=int, default=None)
    p.set_defaults(func=cmd_singular_ghat)

    p = sub.add_parser("commutator-check",
                       help="closed commutator formula vs generic action")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--chi1", default=None)
    p.add_argument("--chi2", default=None)
    p.set_defaults(func=cmd_commutator_check)

    p = sub.add_parser("multiplicity",
                       help="induced-module block multiplicity")
    p.add_argument("--chi1", default=None)
    p.add_argument("--chi2", default=None)
    p.add_argument("--nu1", required=True, help='{"kind":"-","body":[...]}')
    p.add_argument("--nu2", required=True, help='{"kind":"+","body":[...]}')
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("reciprocity",
                       help="two-sided coefficient identity checks")
    p.add_argument("--nu", default=None, help="dominant weight, e.g. [1,0,-1]")
    p.add_argument("--lambda-minus", default=None)
    p.add_argument("--mu-plus", default=None)
    p.add_argument("--N-list", dest="n_list", default=None,
                   help="comma-separated ranks, e.g. 4,5,6")
    p.add_argument("--batch", default=None,
                   help="JSON-lines file of triples")
    p.add_argument("--random", type=int, default=None,
                   help="run COUNT seeded random triples")
    p.add_argument("--size-bound", type=int, default=4)
    p.set_defaults(func=cmd_reciprocity)

    p = sub.add_parser("kac-radul",
                       help="branching table of a mixed-weight module")
    p.add_argument("--nu", required=True)
    p.add_argument("--N", dest="n", type=int, required=True)
    p.add_argument("--size-bound", type=int, required=True)
    p.set_defaults(func=cmd_kac_radul)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BandEscapeError as exc:
        print(f"error: {exc}; retry with a larger --band", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
