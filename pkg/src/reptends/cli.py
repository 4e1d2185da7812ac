"""Command-line surface: period tables, cycles, series, searches, cross-base.

Every command emits one of three formats (table, csv, json) on stdout;
progress chatter goes to stderr so machine-readable output stays clean.
Identical invocations produce byte-identical stdout regardless of --jobs.

Exit codes: 0 success, 2 usage error, 3 checkpoint mismatch, 4 internal
invariant violation.
"""

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

from .crossbase import (
    FORMULA_VARIANTS,
    alternating_formula_disagreements,
    cross_render,
    empirical_related_bases,
    related_bases_alternating,
    related_bases_formula,
    shared_suffix_length,
)
from .cyclic_search import (
    CheckpointError,
    enumerate_subcyclic_primes,
    search_with_checkpoint,
)
from .digits import ALPHABET, DigitString, from_integer
from .primality import DEFAULT_ROUNDS, SMALL_PRIMES
from .reptend import multiplicative_order, reptend_profile
from .series import enumerate_series, residual

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CHECKPOINT = 3
EXIT_INTERNAL = 4

DEFAULT_ELIDE = 1000


@dataclass(frozen=True)
class OutputConfig:
    """Common output knobs shared by every command."""

    format: str = "table"
    elide_above_digits: int = DEFAULT_ELIDE
    rounds: int = DEFAULT_ROUNDS


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _print_table(columns, rows, out):
    widths = [len(c) for c in columns]
    rendered = []
    for row in rows:
        cells = [_cell(row.get(c)) for c in columns]
        widths = [max(w, len(s)) for w, s in zip(widths, cells)]
        rendered.append(cells)
    header = "  ".join(c.ljust(w) for c, w in zip(columns, widths))
    print(header.rstrip(), file=out)
    for cells in rendered:
        print("  ".join(s.ljust(w) for s, w in zip(cells, widths)).rstrip(), file=out)


def _emit(config: OutputConfig, command: str, params: dict, columns, rows, out=None):
    out = out or sys.stdout
    if config.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "params": params,
            "rows": rows,
        }
        print(json.dumps(doc, sort_keys=True), file=out)
    elif config.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row.get(c)) for c in columns])
    else:
        _print_table(columns, rows, out)


def _elided(digits: DigitString | None, first_digit: int, digit_count: int,
            elide_above: int) -> str:
    if digits is not None and digit_count <= elide_above:
        return str(digits)
    return f"{ALPHABET[first_digit]}…({digit_count} digits)"


def _pad_digits(value: int, base: int, length: int) -> DigitString:
    digits = from_integer(value, base).digits
    if len(digits) < length:
        digits = (0,) * (length - len(digits)) + digits
    return DigitString(base, digits)


# ---------------------------------------------------------------- commands


def cmd_period(args, config: OutputConfig) -> int:
    if args.base_min < 2 or args.base_max < args.base_min:
        raise ValueError("base range must satisfy 2 <= base-min <= base-max")
    if args.primes_max > SMALL_PRIMES[-1]:
        raise ValueError(f"primes-max above {SMALL_PRIMES[-1]} is not supported")
    primes = [p for p in SMALL_PRIMES if p <= args.primes_max]
    bases = list(range(args.base_min, args.base_max + 1))
    rows = []
    for p in primes:
        for b in bases:
            period = multiplicative_order(b, p)
            rows.append(
                {
                    "p": p,
                    "base": b,
                    "period": period,
                    "full_reptend": period == p - 1,
                }
            )
    params = {"primes_max": args.primes_max, "base_min": args.base_min,
              "base_max": args.base_max}
    if config.format == "table":
        columns = ["p"] + [str(b) for b in bases]
        matrix = []
        for p in primes:
            row = {"p": p}
            for entry in rows:
                if entry["p"] != p:
                    continue
                mark = "*" if entry["full_reptend"] else ""
                row[str(entry["base"])] = (
                    "" if entry["period"] is None else f"{entry['period']}{mark}"
                )
            matrix.append(row)
        _print_table(columns, matrix, sys.stdout)
    else:
        _emit(config, "period", params, ["p", "base", "period", "full_reptend"], rows)
    return EXIT_OK


def cmd_cyclic(args, config: OutputConfig) -> int:
    profile = reptend_profile(args.p, args.base)
    if profile.period is None:
        raise ValueError(f"1/{args.p} has no period in base {args.base}")
    rows = []
    for index, rep in enumerate(profile.cycle_representatives):
        rows.append({"kind": "cycle", "index": index, "k": None, "value": str(rep)})
    if profile.level == 1 and args.p > 2:
        cyclic = profile.cycle_representatives[0]
        value = 0
        for d in cyclic.digits:
            value = value * args.base + d
        for k in range(1, args.p):
            product = _pad_digits(k * value, args.base, profile.period)
            rows.append({"kind": "multiple", "index": None, "k": k,
                         "value": str(product)})
    params = {"p": args.p, "base": args.base, "period": profile.period,
              "level": profile.level}
    _emit(config, "cyclic", params, ["kind", "index", "k", "value"], rows)
    return EXIT_OK


def cmd_series(args, config: OutputConfig) -> int:
    specs = enumerate_series(args.p, args.base, args.max_length, config.rounds)
    rows = []
    for spec in specs:
        rem = residual(spec, args.k_terms)
        rows.append(
            {
                "length": spec.length,
                "s": spec.s,
                "r": spec.r,
                "s_is_prime": spec.s_is_prime,
                "residual": f"{rem.numerator}/{rem.denominator}",
            }
        )
    params = {"p": args.p, "base": args.base, "max_length": args.max_length,
              "k_terms": args.k_terms}
    _emit(config, "series", params,
          ["length", "s", "r", "s_is_prime", "residual"], rows)
    return EXIT_OK


def _search_rows(records, elide_above):
    rows = []
    for rec in records:
        rows.append(
            {
                "digit_count": rec.digit_count,
                "rotation_numerator": rec.rotation_numerator,
                "cycle_index": rec.cycle_index,
                "first_digit": rec.first_digit,
                "status": rec.verdict.status,
                "witness_rounds": rec.verdict.witness_rounds,
                "value": _elided(rec.value_digits, rec.first_digit,
                                 rec.digit_count, elide_above),
            }
        )
    return rows


def cmd_search(args, config: OutputConfig) -> int:
    def on_level(ndigits, records):
        for rec in records:
            print(
                f"found: digits={rec.digit_count} first={ALPHABET[rec.first_digit]}"
                f" numerator={rec.rotation_numerator} status={rec.verdict.status}",
                file=sys.stderr,
            )

    records = search_with_checkpoint(
        args.p,
        args.base,
        args.max_digits,
        rounds=config.rounds,
        checkpoint_path=args.checkpoint,
        jobs=args.jobs,
        elide_above=config.elide_above_digits,
        on_level=on_level,
    )
    params = {"p": args.p, "base": args.base, "max_digits": args.max_digits,
              "rounds": config.rounds}
    _emit(
        config,
        "search",
        params,
        ["digit_count", "rotation_numerator", "cycle_index", "first_digit",
         "status", "witness_rounds", "value"],
        _search_rows(records, config.elide_above_digits),
    )
    return EXIT_OK


def cmd_subcyclic(args, config: OutputConfig) -> int:
    values = enumerate_subcyclic_primes(args.p, args.base, config.rounds)
    rows = [{"value": v} for v in values]
    params = {"p": args.p, "base": args.base}
    _emit(config, "subcyclic", params, ["value"], rows)
    return EXIT_OK


def cmd_crossbase_render(args, config: OutputConfig) -> int:
    records = search_with_checkpoint(
        args.p, args.anchor_base, args.max_digits,
        rounds=config.rounds, jobs=args.jobs,
        elide_above=config.elide_above_digits,
    )
    rows = []
    for rec in records:
        rendered = cross_render(rec, args.target_base)
        rows.append(
            {
                "digit_count": rec.digit_count,
                "value": _elided(rec.value_digits, rec.first_digit,
                                 rec.digit_count, config.elide_above_digits),
                "target_digit_count": len(rendered),
                "rendered": (
                    str(rendered)
                    if len(rendered) <= config.elide_above_digits
                    else _elided(None, rendered.digits[0], len(rendered), 0)
                ),
            }
        )
    params = {"p": args.p, "anchor_base": args.anchor_base,
              "target_base": args.target_base, "max_digits": args.max_digits}
    _emit(config, "crossbase-render", params,
          ["digit_count", "value", "target_digit_count", "rendered"], rows)
    return EXIT_OK


def cmd_crossbase_suffix(args, config: OutputConfig) -> int:
    report = shared_suffix_length(args.value, args.p, args.target_base)
    rows = [
        {
            "value": report.value,
            "target_base": report.target_base,
            "matched_digits": report.matched_digits,
            "matched_rotation": report.matched_rotation,
        }
    ]
    params = {"p": args.p, "target_base": args.target_base}
    _emit(config, "crossbase-suffix", params,
          ["value", "target_base", "matched_digits", "matched_rotation"], rows)
    return EXIT_OK


def cmd_crossbase_related(args, config: OutputConfig) -> int:
    group = related_bases_alternating(args.anchor_base, args.count)
    rows = []
    for i, member in enumerate(group.members):
        formula = related_bases_formula(args.anchor_base, i, args.variant)
        rows.append({"i": i, "member": member, "formula": formula,
                     "agree": member == formula})
    disagreements = alternating_formula_disagreements(
        args.anchor_base, args.count, args.variant
    )
    if disagreements:
        i, member, formula = disagreements[0]
        print(
            f"warning: closed form '{args.variant}' diverges from the "
            f"alternating ladder at i={i} ({formula} vs {member})",
            file=sys.stderr,
        )
    params = {"anchor_base": args.anchor_base, "count": args.count,
              "variant": args.variant}
    _emit(config, "crossbase-related", params,
          ["i", "member", "formula", "agree"], rows)
    return EXIT_OK


def cmd_crossbase_sweep(args, config: OutputConfig) -> int:
    results = empirical_related_bases(
        args.p,
        args.anchor_base,
        args.base_limit,
        min_suffix=args.min_suffix,
        max_digits=args.max_digits,
        rounds=config.rounds,
        jobs=args.jobs,
    )
    rows = []
    for base, evidence in results:
        for report in evidence:
            direction = "up" if report.target_base == args.anchor_base else "down"
            rows.append(
                {
                    "base": base,
                    "direction": direction,
                    "target_base": report.target_base,
                    "value": report.value,
                    "matched_digits": report.matched_digits,
                    "matched_rotation": report.matched_rotation,
                }
            )
    params = {"p": args.p, "anchor_base": args.anchor_base,
              "base_limit": args.base_limit, "min_suffix": args.min_suffix,
              "max_digits": args.max_digits}
    _emit(config, "crossbase-sweep", params,
          ["base", "direction", "target_base", "value", "matched_digits",
           "matched_rotation"], rows)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def _add_common(parser):
    parser.add_argument("--format", choices=("table", "csv", "json"),
                        default="table", help="output format")
    parser.add_argument("--rounds", type=int, default=DEFAULT_ROUNDS,
                        help="witness rounds for probabilistic verdicts")
    parser.add_argument("--elide-above", type=int, default=DEFAULT_ELIDE,
                        dest="elide_above",
                        help="print digit strings longer than this as "
                             "'<first digit>…(<n> digits)'")


def _add_jobs(parser):
    parser.add_argument("--jobs", type=int, default=os.cpu_count(),
                        help="worker processes for primality classification")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reptends",
        description="Full reptend primes, cyclic numbers, geometric series "
                    "decompositions of 1/p, and cyclic prime searches.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_period = sub.add_parser("period", help="period table of 1/p per base")
    p_period.add_argument("--primes-max", type=int, default=31, dest="primes_max")
    p_period.add_argument("--base-min", type=int, default=2, dest="base_min")
    p_period.add_argument("--base-max", type=int, default=14, dest="base_max")
    _add_common(p_period)
    p_period.set_defaults(handler=cmd_period)

    p_cyclic = sub.add_parser("cyclic", help="cycle blocks and rotation multiples")
    p_cyclic.add_argument("p", type=int)
    p_cyclic.add_argument("base", type=int)
    _add_common(p_cyclic)
    p_cyclic.set_defaults(handler=cmd_cyclic)

    p_series = sub.add_parser("series", help="geometric series decompositions")
    p_series.add_argument("p", type=int)
    p_series.add_argument("base", type=int)
    p_series.add_argument("--max-length", type=int, default=7, dest="max_length")
    p_series.add_argument("--k-terms", type=int, default=3, dest="k_terms")
    _add_common(p_series)
    p_series.set_defaults(handler=cmd_series)

    p_search = sub.add_parser("search", help="enumerate cyclic primes")
    p_search.add_argument("p", type=int)
    p_search.add_argument("base", type=int)
    p_search.add_argument("--max-digits", type=int, required=True,
                          dest="max_digits")
    p_search.add_argument("--checkpoint", default=None,
                          help="JSON checkpoint path for resumable runs")
    _add_jobs(p_search)
    _add_common(p_search)
    p_search.set_defaults(handler=cmd_search)

    p_sub = sub.add_parser("subcyclic", help="primes inside one period")
    p_sub.add_argument("p", type=int)
    p_sub.add_argument("base", type=int)
    _add_common(p_sub)
    p_sub.set_defaults(handler=cmd_subcyclic)

    p_cross = sub.add_parser("crossbase", help="cross-base relationships")
    cross_sub = p_cross.add_subparsers(dest="crossbase_command", required=True)

    c_render = cross_sub.add_parser("render", help="catalog rendered in another base")
    c_render.add_argument("p", type=int)
    c_render.add_argument("anchor_base", type=int)
    c_render.add_argument("target_base", type=int)
    c_render.add_argument("--max-digits", type=int, default=35, dest="max_digits")
    _add_jobs(c_render)
    _add_common(c_render)
    c_render.set_defaults(handler=cmd_crossbase_render)

    c_suffix = cross_sub.add_parser("suffix", help="trailing-digit stream match")
    c_suffix.add_argument("value", type=int)
    c_suffix.add_argument("p", type=int)
    c_suffix.add_argument("target_base", type=int)
    _add_common(c_suffix)
    c_suffix.set_defaults(handler=cmd_crossbase_suffix)

    c_related = cross_sub.add_parser("related", help="related-base ladder")
    c_related.add_argument("anchor_base", type=int)
    c_related.add_argument("--count", type=int, default=5)
    c_related.add_argument("--variant", choices=FORMULA_VARIANTS,
                           default="three_four")
    _add_common(c_related)
    c_related.set_defaults(handler=cmd_crossbase_related)

    c_sweep = cross_sub.add_parser("sweep", help="empirical related-base sweep")
    c_sweep.add_argument("p", type=int)
    c_sweep.add_argument("anchor_base", type=int)
    c_sweep.add_argument("--base-limit", type=int, required=True, dest="base_limit")
    c_sweep.add_argument("--min-suffix", type=int, default=None, dest="min_suffix")
    c_sweep.add_argument("--max-digits", type=int, default=130, dest="max_digits")
    _add_jobs(c_sweep)
    _add_common(c_sweep)
    c_sweep.set_defaults(handler=cmd_crossbase_sweep)

    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(max(sys.get_int_max_str_digits(), 50000))
    parser = build_parser()
    args = parser.parse_args(argv)
    config = OutputConfig(args.format, args.elide_above, args.rounds)
    if config.rounds < 1 or config.elide_above_digits < 1:
        parser.error("--rounds and --elide-above must be at least 1")
    try:
        return args.handler(args, config)
    except CheckpointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECKPOINT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - invariant violations
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
