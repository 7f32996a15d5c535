"""Command line front end.

Subcommands: ``verify`` runs the identity registry, ``chars`` prints the
exponent/coefficient table of any character generator, ``hw`` tabulates
highest weights, ``branch`` tabulates decomposition multiplicities.

Output formats are text (default), json and csv; the environment variable
PARACHAR_FORMAT changes the default.  Exponents are serialized as exact
rationals in lowest terms ("9" or "5/3"), coefficients as decimal integer
strings of arbitrary length.

Exit status: 0 on success, 1 if a requested identity failed, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import characters as chars
from . import qseries as qs
from . import verify

FORMATS = ("text", "json", "csv")

# anomaly-restoring exponent shift -c/24 at c = -10, applied in output only
ANOMALY_SHIFT = Fraction(5, 12)

_CHAR_GENERATORS = {
    # which -> via -> (callable, parameter names)
    "N-sl2": {
        "ct": (lambda a, o: chars.ch_para_sl2_ct(o), ()),
        "theta": (lambda a, o: chars.ch_para_sl2_theta(o), ()),
        "lemma21": (lambda a, o: chars.ch_para_sl2_tripleprod(o), ()),
        "qhyp": (lambda a, o: chars.ch_para_sl2_qhyp(o), ()),
        "dec": (lambda a, o: chars.ch_para_sl2_w23sum(o), ()),
    },
    "N-2s": {
        "ct": (lambda a, o: chars.ch_para_sl2_mod_ct(a.s, o), ("s",)),
        "theta": (lambda a, o: chars.ch_para_sl2_mod_theta(a.s, o), ("s",)),
    },
    "T": {
        "product": (lambda a, o: chars.ch_w23_product(a.m, a.n, o), ("m", "n")),
        "weylsum": (lambda a, o: chars.ch_w23_weylsum(a.m, a.n, o), ("m", "n")),
    },
    "W0": {
        "bkmz": (lambda a, o: chars.ch_para_sl3_minsum(o), ()),
        "sgn": (lambda a, o: chars.ch_para_sl3_signed(o), ()),
        "branch": (lambda a, o: chars.ch_para_sl3_branch(o), ()),
    },
    "W2": {
        "sum": (lambda a, o: chars.ch_octuplet(o), ()),
    },
    "phi": {
        "sum": (lambda a, o: qs.false_theta(a.m, o), ("m",)),
    },
}

_DEFAULT_VIA = {
    "N-sl2": "theta",
    "N-2s": "theta",
    "T": "product",
    "W0": "bkmz",
    "W2": "sum",
    "phi": "sum",
}


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(kind: str, order, rows: list[dict], columns: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"kind": kind, "order": order, "rows": rows}, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row.get(c)) for c in columns])
        sys.stdout.write(buf.getvalue())
    else:
        widths = [
            max(len(c), max((len(_text_cell(r.get(c))) for r in rows), default=0))
            for c in columns
        ]
        print("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
        for row in rows:
            print(
                "  ".join(
                    _text_cell(row.get(c)).ljust(w) for c, w in zip(columns, widths)
                ).rstrip()
            )


def _csv_cell(v) -> str:
    return "" if v is None else str(v)


def _text_cell(v) -> str:
    return "-" if v is None else str(v)


def _frac_str(x) -> str:
    return str(Fraction(x))


def cmd_verify(args) -> int:
    if args.order < 1:
        return _usage_error("--order must be >= 1")
    known = {identity.id for identity in verify.registry()}
    selected = args.id if args.id else None
    if selected:
        unknown = [i for i in selected if i not in known]
        if unknown:
            return _usage_error(f"unknown identity id(s): {', '.join(unknown)}")
    rows = []
    any_fail = False
    for identity in verify.registry():
        if selected and identity.id not in selected:
            continue
        report = verify.run(identity, args.order, args.grid)
        any_fail = any_fail or report.status == "fail"
        mm = report.first_mismatch
        rows.append(
            {
                "id": report.id,
                "status": report.status,
                "order": report.order,
                "case": mm.case if mm and mm.case else None,
                "mismatch_exponent": (
                    _frac_str(mm.exponent) if mm and mm.exponent is not None else None
                ),
                "lhs": str(mm.lhs) if mm else None,
                "rhs": str(mm.rhs) if mm else None,
                "elapsed_ms": round(report.elapsed * 1000, 3),
            }
        )
    columns = ["id", "status", "order", "mismatch_exponent", "lhs", "rhs", "elapsed_ms"]
    if args.format == "text":
        columns = ["id", "status", "order", "case"] + columns[3:]
    _emit("verify", args.order, rows, columns, args.format)
    return 1 if any_fail else 0


def _series_rows(series: qs.QSeries, anomaly: bool) -> list[dict]:
    shift = ANOMALY_SHIFT if anomaly else 0
    return [
        {"exponent": _frac_str(e + shift), "coefficient": str(c)}
        for e, c in series.terms()
    ]


def cmd_chars(args) -> int:
    table = _CHAR_GENERATORS[args.which]
    via = args.via or _DEFAULT_VIA[args.which]
    if via not in table:
        return _usage_error(
            f"--via {via} not available for --which {args.which} "
            f"(choose from {', '.join(sorted(table))})"
        )
    if args.order < 1:
        return _usage_error("--order must be >= 1")
    fn, needed = table[via]
    for name in needed:
        if getattr(args, name) is None:
            return _usage_error(f"--which {args.which} requires --{name}")
    if args.which != "phi":
        for name in needed:
            if getattr(args, name) < 0:
                return _usage_error(f"--{name} must be >= 0")
    try:
        series = fn(args, args.order)
    except ValueError as exc:
        return _usage_error(str(exc))
    _emit("chars", args.order, _series_rows(series, args.anomaly),
          ["exponent", "coefficient"], args.format)
    return 0


def cmd_hw(args) -> int:
    if args.p < 1:
        return _usage_error("--p must be >= 1")
    max_m = args.max_m if args.max_m is not None else args.max
    max_n = args.max_n if args.max_n is not None else args.max
    if max_m < 0 or max_n < 0:
        return _usage_error("--max/--max-m/--max-n must be >= 0")
    rows = []
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            hw = chars.highest_weight(args.p, m, n)
            rows.append(
                {"m": m, "n": n, "h": _frac_str(hw.h), "beta": _frac_str(hw.beta)}
            )
    _emit("hw", args.p, rows, ["m", "n", "h", "beta"], args.format)
    return 0


def cmd_branch(args) -> int:
    if args.order < 1:
        return _usage_error("--order must be >= 1")
    rows = []
    if args.target == "N-sl2":
        # diagonal modules (m, m), multiplicity one, h = 2m(m+1)
        m = 0
        while 2 * m * (m + 1) < args.order:
            hw = chars.highest_weight(2, m, m)
            rows.append((hw.h, m, m, 1, hw.beta))
            m += 1
    else:  # W0
        m = 0
        while chars.highest_weight(2, m, 0).h < args.order:
            n = m % 3
            while True:
                hw = chars.highest_weight(2, m, n)
                if hw.h >= args.order:
                    break
                rows.append((hw.h, m, n, min(m + 1, n + 1), hw.beta))
                n += 3
            m += 1
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    out = [
        {
            "m": m,
            "n": n,
            "multiplicity": mult,
            "h": _frac_str(h),
            "beta": _frac_str(beta),
        }
        for h, m, n, mult, beta in rows
    ]
    _emit("branch", args.order, out, ["m", "n", "multiplicity", "h", "beta"],
          args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parachar",
        description="Exact q-series characters for parafermion cosets and "
        "W(2,3) modules at central charge -10.",
    )
    default_format = os.environ.get("PARACHAR_FORMAT", "text")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the identity registry")
    p_verify.add_argument("--order", type=int, default=60,
                          help="exclusive q-truncation order (default 60)")
    p_verify.add_argument("--id", action="append",
                          help="run only this identity (repeatable)")
    p_verify.add_argument("--grid", type=int, default=None,
                          help="override the per-identity family/grid bound")
    p_verify.add_argument("--format", choices=FORMATS, default=default_format)
    p_verify.set_defaults(func=cmd_verify)

    p_chars = sub.add_parser("chars", help="print a character coefficient table")
    p_chars.add_argument("--which", required=True,
                         choices=sorted(_CHAR_GENERATORS))
    p_chars.add_argument("--via", default=None,
                         help="formula to use: ct|theta|lemma21|qhyp|dec|"
                         "product|weylsum|bkmz|sgn|branch")
    p_chars.add_argument("--m", type=int, default=None)
    p_chars.add_argument("--n", type=int, default=None)
    p_chars.add_argument("--s", type=int, default=None)
    p_chars.add_argument("--order", type=int, default=20)
    p_chars.add_argument("--anomaly", action="store_true",
                         help="shift displayed exponents by -c/24 = 5/12 "
                         "(formatting only)")
    p_chars.add_argument("--format", choices=FORMATS, default=default_format)
    p_chars.set_defaults(func=cmd_chars)

    p_hw = sub.add_parser("hw", help="tabulate highest weights (h, beta)")
    p_hw.add_argument("--p", type=int, default=2)
    p_hw.add_argument("--max", type=int, default=5,
                      help="table both m and n up to this bound")
    p_hw.add_argument("--max-m", type=int, default=None, dest="max_m")
    p_hw.add_argument("--max-n", type=int, default=None, dest="max_n")
    p_hw.add_argument("--format", choices=FORMATS, default=default_format)
    p_hw.set_defaults(func=cmd_hw)

    p_branch = sub.add_parser(
        "branch", help="tabulate decomposition multiplicities below an order"
    )
    p_branch.add_argument("--target", required=True, choices=("W0", "N-sl2"))
    p_branch.add_argument("--order", type=int, default=20)
    p_branch.add_argument("--format", choices=FORMATS, default=default_format)
    p_branch.set_defaults(func=cmd_branch)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format not in FORMATS:
        return _usage_error(f"invalid format {args.format!r}")
    return args.func(args)


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
