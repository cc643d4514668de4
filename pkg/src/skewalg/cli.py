"""Command-line front end.

Exit codes: 0 success/pass, 1 mathematical fail (a claim did not hold or a
polynomial is not a member), 2 usage error, 3 resource limit exceeded.
Config fields can come from SKEWALG_* environment variables; flags win.
"""

import argparse
import json
import sys

from .config import Config, ResourceLimitError
from .family import basea_count, fm, n_bound
from .poly import (MultiPoly, ParseError, format_poly, parse_identity_file,
                   parse_poly, parse_word)
from .symmetrize import skew
from .variety import builtin_variety, component_dimension, is_member
from .verify import CHECKS, DESK_SUITE, Report, verify
from .words import format_word

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _parse_multidegree(text: str) -> dict:
    try:
        exps = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError("multidegree must be ints like 3,1,1")
    if not exps or any(e < 1 for e in exps):
        raise argparse.ArgumentTypeError("multidegree entries must be positive")
    return {i + 1: e for i, e in enumerate(exps)}


def _load_variety(args):
    if args.variety == "custom":
        if not getattr(args, "identities", None):
            raise SystemExit2("--variety custom needs --identities FILE")
        with open(args.identities) as fh:
            polys = parse_identity_file(fh.read())
        return builtin_variety("custom", polys)
    return builtin_variety(args.variety)


class SystemExit2(Exception):
    """Usage-level error discovered after argparse."""


def _emit(args, text_line: str, payload: dict):
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        print(text_line)


def _report_lines(report: Report) -> str:
    extras = ", ".join(f"{k}={v}" for k, v in report.details.items())
    params = " ".join(f"{k}={v}" for k, v in sorted(report.params.items()))
    head = f"{report.verdict:14s} {report.check} {params}".rstrip()
    return f"{head}  ({report.elapsed_ms} ms)" + (f"  [{extras}]" if extras else "")


def cmd_fm(args, config):
    p = fm(args.m)
    _emit(args, format_poly(p), {"command": "fm", "m": args.m,
                                 "polynomial": format_poly(p),
                                 "terms": len(p), "n_bound_hint": n_bound(args.m)})
    return EXIT_OK


def cmd_skew(args, config):
    w = parse_word(args.word)
    p = skew(MultiPoly.monomial(w))
    _emit(args, format_poly(p), {"command": "skew", "word": args.word,
                                 "polynomial": format_poly(p), "terms": len(p)})
    return EXIT_OK


def cmd_dim(args, config):
    variety = _load_variety(args)
    d = component_dimension(variety, args.multideg, config)
    _emit(args, str(d), {"command": "dim", "variety": variety.name,
                         "multidegree": {f"x{v}": e for v, e in sorted(args.multideg.items())},
                         "dimension": d})
    return EXIT_OK


def cmd_member(args, config):
    variety = _load_variety(args)
    with open(args.input) as fh:
        p = parse_poly(fh.read())
    result = is_member(p, variety, config)
    payload = {"command": "member", "variety": variety.name,
               "member": result.member}
    if result.member:
        cert_paths = []
        if args.certify:
            docs = [c.to_json(variety) for c in result.certificates]
            if len(docs) == 1:
                paths = [args.certify]
            else:
                stem = args.certify.removesuffix(".json")
                paths = [f"{stem}-{i}.json" for i in range(len(docs))]
            for path, doc in zip(paths, docs):
                with open(path, "w") as fh:
                    json.dump(doc, fh, indent=1)
            cert_paths = paths
        payload["certificates"] = cert_paths
        _emit(args, "member", payload)
        return EXIT_OK
    payload["witness"] = format_word(result.witness)
    _emit(args, f"not a member (witness word {payload['witness']})", payload)
    return EXIT_FAIL


def cmd_basis_count(args, config):
    n = basea_count(args.degree)
    _emit(args, str(n), {"command": "basis-count", "degree": args.degree,
                         "count": n})
    return EXIT_OK


def _verdict_exit(reports) -> int:
    if any(r.verdict == "fail" for r in reports):
        return EXIT_FAIL
    if any(r.verdict == "resource_limit" for r in reports):
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_verify(args, config):
    if args.all_desk:
        reports = []
        for name, params in DESK_SUITE:
            report = verify(name, params, config)
            reports.append(report)
            if args.format != "json":
                print(_report_lines(report))
        if args.format == "json":
            print(json.dumps([r.to_json() for r in reports], indent=1))
        return _verdict_exit(reports)
    if not args.check:
        raise SystemExit2("verify needs a CHECK name or --all-desk")
    if args.check not in CHECKS:
        raise SystemExit2(f"unknown check {args.check!r}; known: {', '.join(sorted(CHECKS))}")
    params = {}
    for key in ("m", "k", "d", "degree_bound"):
        val = getattr(args, key, None)
        if val is None:
            continue
        if key not in CHECKS[args.check].defaults:
            raise SystemExit2(f"check {args.check!r} does not take --{key.replace('_', '-')}")
        params[key] = val
    report = verify(args.check, params, config)
    _emit(args, _report_lines(report), report.to_json())
    return _verdict_exit([report])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skewalg",
        allow_abbrev=False,
        description="Exact computations with skew-symmetric identities in "
                    "free nonassociative algebras.")
    ap.add_argument("--format", choices=("text", "json"), default=None,
                    help="output format (default text)")
    ap.add_argument("--threads", type=int, default=None, metavar="N",
                    help="worker cap; results are independent of it")
    ap.add_argument("--max-ambient", type=int, default=None, metavar="N",
                    help="largest allowed ambient component dimension")
    ap.add_argument("--max-generators", type=int, default=None, metavar="N",
                    help="largest allowed consequence-generator stream")
    ap.add_argument("--seed", type=int, default=None, metavar="N",
                    help="seed for sampled checks")
    ap.add_argument("--cert-dir", default=None, metavar="DIR",
                    help="directory for certificate files")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fm", help="print the alternating family member of degree M")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_fm)

    p = sub.add_parser("skew", help="skew-symmetrize a one-variable word")
    p.add_argument("--word", required=True, metavar="W",
                   help="for example '((x1*x1)*x1)'")
    p.set_defaults(func=cmd_skew)

    p = sub.add_parser("dim", help="dimension of a relatively free component")
    p.add_argument("--variety", required=True,
                   choices=("assoc", "alt", "flex", "ncj_cor1", "free", "custom"))
    p.add_argument("--multideg", required=True, type=_parse_multidegree,
                   metavar="D", help="comma exponents, for example 3,1,1")
    p.add_argument("--identities", metavar="FILE",
                   help="identity file for --variety custom")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("member", help="T-ideal membership with certificate")
    p.add_argument("--variety", required=True,
                   choices=("assoc", "alt", "flex", "ncj_cor1", "free", "custom"))
    p.add_argument("--input", required=True, metavar="FILE",
                   help="polynomial file in the text grammar")
    p.add_argument("--certify", metavar="PATH",
                   help="write the certificate JSON here")
    p.add_argument("--identities", metavar="FILE")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("basis-count",
                       help="catalogue count for one-generator elements")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_basis_count)

    p = sub.add_parser("verify", help="run a named check or the desk suite")
    p.add_argument("check", nargs="?", metavar="CHECK",
                   help=f"one of: {', '.join(sorted(CHECKS))}")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--degree-bound", type=int, dest="degree_bound")
    p.add_argument("--all-desk", action="store_true",
                   help="run the full desk-scale acceptance suite")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        config = Config.from_env(
            output_format=args.format,
            thread_count=args.threads,
            max_ambient_dimension=args.max_ambient,
            max_generators=args.max_generators,
            random_seed=args.seed,
            certificate_directory=args.cert_dir,
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.format is None:
        args.format = config.output_format
    try:
        return args.func(args, config)
    except SystemExit2 as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
