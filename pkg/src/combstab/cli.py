"""Command-line front end.

Exit codes: 0 when the analysis ran (whatever the verdict), 2 on a
validation error, 3 when the instance file cannot be read or parsed.
"""

import argparse
import json
import sys

from .errors import ParseError, ValidationError
from .instance import parse_instance
from .report import feasibility_summary, grid_report, render_table, run_analyze, SCHEMA_VERSION

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PARSE = 3


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="combstab",
        description="Catalog-relative polarized stability of syzygy bundles on comb-like curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one instance")
    p.add_argument("file")
    p.add_argument("--oracle-denominator", type=_positive_int, metavar="D",
                   help="cross-check with the grid oracle at denominator D")
    p.add_argument("--format", choices=("table", "machine"), default="table")
    p.add_argument("--certificate", action="store_true",
                   help="list every certificate term in the table output")

    p = sub.add_parser("feasibility", help="print the feasibility status only")
    p.add_argument("file")

    p = sub.add_parser("grid", help="run the grid oracle alone")
    p.add_argument("file")
    p.add_argument("--denominator", type=_positive_int, required=True, metavar="D")
    return parser


def _dump(obj):
    return json.dumps(obj, indent=2)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        instance = parse_instance(args.file)
        if args.command == "analyze":
            if args.oracle_denominator is not None and args.oracle_denominator < instance.curve.n:
                raise ValidationError(f"must be at least n = {instance.curve.n}",
                                      "--oracle-denominator")
            report = run_analyze(instance, args.oracle_denominator)
            if args.format == "machine":
                print(_dump(report))
            else:
                sys.stdout.write(render_table(report, certificate=args.certificate))
        elif args.command == "feasibility":
            print(_dump(feasibility_summary(instance)))
        else:
            if args.denominator < instance.curve.n:
                raise ValidationError(f"must be at least n = {instance.curve.n}",
                                      "--denominator")
            out = {"schema_version": SCHEMA_VERSION}
            out.update(grid_report(instance, args.denominator))
            print(_dump(out))
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
