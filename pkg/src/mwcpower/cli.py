"""Command-line entry point: ``mwcpower {analyze,derive,verify,trace,atlas}``.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 size caps.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import atlas as atlas_mod
from .analysis import analyze
from .core import (
    MwcSet,
    ResourceLimitError,
    ValidationError,
    WeightedGame,
    format_rational,
)
from .direct import banzhaf_scores, shapley_shubik, trace
from .games import derive_mwc
from .oracle import MAX_ORACLE_VOTERS, TooManyVotersForOracle, oracle_banzhaf, oracle_ssi
from .validation import check_system, parse_document, system_document

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_LIMIT = 0, 1, 2, 3

MAX_VERIFY_ATLAS = 5


def decimal_str(value: Fraction | int, digits: int) -> str:
    """Round-half-up decimal rendering; display only."""
    value = Fraction(value)
    scale = 10**digits
    scaled = abs(value) * scale
    rounded = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    sign = "-" if value < 0 and rounded else ""
    whole, frac = divmod(rounded, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def _load(path: str):
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON in {path}: {exc}") from exc
    return parse_document(doc)


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _render_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[k]) for r in rows)) for k, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows)
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    system = check_system(_load(args.input))
    report = analyze(system, args.budget, args.jobs)
    if args.json:
        doc = system_document(system)
        doc["power"] = report.to_dict()
        _emit_json(doc)
        return EXIT_OK
    headers = ["voter", "BS", "PBP", "PBI", "SSI", "DP", "HP"]
    rows = []
    for w, name in enumerate(system.voters.names):
        row = [name, str(report.bs[w])]
        for kind in ("pbp", "pbi", "ssi", "dp", "hp"):
            value = report.profile(kind)[w]
            row.append(f"{format_rational(value)} ({decimal_str(value, args.precision)})")
        rows.append(row)
    print(f"{system.n} voters, {system.m} minimal winning coalitions")
    print(_render_table(headers, rows))
    return EXIT_OK


def cmd_derive(args) -> int:
    game = _load(args.input)
    if not isinstance(game, WeightedGame):
        raise ValidationError("derive needs a weighted document (weights + quota)")
    system = derive_mwc(game)
    if args.json:
        _emit_json(system_document(system))
    else:
        for names in system.as_names():
            print("{" + ", ".join(names) + "}")
    return EXIT_OK


def _compare(system: MwcSet, budget, jobs) -> tuple[bool, bool]:
    if system.n > MAX_ORACLE_VOTERS:
        raise TooManyVotersForOracle(
            f"TooManyVotersForOracle: {system.n} voters, oracle supports at most "
            f"{MAX_ORACLE_VOTERS}"
        )
    bs_ok = banzhaf_scores(system, budget, jobs) == oracle_banzhaf(system)
    ssi_ok = shapley_shubik(system, budget, jobs) == oracle_ssi(system)
    return bs_ok, ssi_ok


def cmd_verify(args) -> int:
    if args.atlas is not None:
        if args.atlas > MAX_VERIFY_ATLAS:
            raise atlas_mod.AtlasSizeExceeded(
                f"AtlasSizeExceeded: verify --atlas supports n <= {MAX_VERIFY_ATLAS}"
            )
        systems = list(atlas_mod.enumerate_antichains(args.atlas))
    else:
        systems = [check_system(_load(args.input))]
    bs_pass = ssi_pass = 0
    for system in systems:
        bs_ok, ssi_ok = _compare(system, args.budget, args.jobs)
        bs_pass += bs_ok
        ssi_pass += ssi_ok
    total = len(systems)
    for label, passed in (("BS", bs_pass), ("SSI", ssi_pass)):
        verdict = "PASS" if passed == total else "FAIL"
        print(f"{label}: {verdict} ({passed}/{total} systems)")
    return EXIT_OK if bs_pass == ssi_pass == total else EXIT_MISMATCH


def cmd_trace(args) -> int:
    system = check_system(_load(args.input))
    w = system.voters.index(args.voter)
    report = trace(system, w, args.kind, args.budget)
    if args.json:
        values = [
            str(v) if args.kind == "bs" else format_rational(v) for v in report.partial_sums
        ]
        _emit_json({"voter": args.voter, "kind": args.kind, "partial_sums": values})
        return EXIT_OK
    rows = []
    for r, value in enumerate(report.partial_sums, start=1):
        shown = str(value) if args.kind == "bs" else format_rational(value)
        rows.append([str(r), shown])
    print(f"{args.kind.upper()} of {args.voter}, cumulative after sub-families of size <= r")
    print(_render_table(["r", "partial sum"], rows))
    return EXIT_OK


def cmd_atlas(args) -> int:
    n = args.n
    kinds = []
    if args.profiles:
        kinds = list(atlas_mod.PROFILE_KINDS) if args.profiles == "all" else [args.profiles]
    if n > atlas_mod.MAX_ATLAS_VOTERS:
        raise atlas_mod.AtlasSizeExceeded(
            f"AtlasSizeExceeded: n={n}, counting supports n <= {atlas_mod.MAX_ATLAS_VOTERS}"
        )
    if (kinds or args.dump) and n > atlas_mod.MAX_PROFILE_VOTERS:
        raise atlas_mod.AtlasSizeExceeded(
            f"AtlasSizeExceeded: n={n}, profiles and dumps support n <= "
            f"{atlas_mod.MAX_PROFILE_VOTERS}"
        )
    if not kinds and not args.dump:
        print(f"{atlas_mod.count_antichains(n)} systems")
        return EXIT_OK

    tallies = {kind: atlas_mod.ProfileAtlas(n, kind) for kind in kinds}
    total = 0
    dump = open(args.dump, "w", encoding="utf-8") if args.dump else None
    try:
        for entry in atlas_mod.atlas_entries(n, args.budget):
            total += 1
            if dump is not None:
                record = {"mwc": [[i for i in range(n) if v >> i & 1] for v in entry.system]}
                record.update(entry.report.to_dict())
                dump.write(json.dumps(record) + "\n")
            for kind, tally in tallies.items():
                profile = entry.report.profile(kind)
                tally.systems += 1
                tally.ordered[profile] += 1
                tally.unordered[tuple(sorted(profile, reverse=True))] += 1
    finally:
        if dump is not None:
            dump.close()
    print(f"{total} systems")
    for kind, tally in tallies.items():
        print(f"{kind}: {len(tally.unordered)} distinct unordered profiles, "
              f"{len(tally.ordered)} distinct ordered profiles")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mwcpower",
        description="Power indices of voting systems from their minimal winning coalitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="max MWC sub-families to visit (default 2**30)")
    common.add_argument("--jobs", type=int, default=None, help="worker processes")

    def with_input(p, required=True):
        p.add_argument("input", nargs=None if required else "?", default="-",
                       help="system document (JSON file, '-' for stdin)")
        return p

    p = with_input(sub.add_parser("analyze", parents=[common], help="all indices"))
    p.add_argument("--json", action="store_true")
    p.add_argument("--precision", type=int, default=6, help="decimal digits shown")
    p.set_defaults(func=cmd_analyze)

    p = with_input(sub.add_parser("derive", parents=[common], help="MWCs of a weighted game"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_derive)

    p = with_input(sub.add_parser("verify", parents=[common], help="direct formulas vs oracle"),
                   required=False)
    p.add_argument("--atlas", type=int, metavar="N", help="verify every system on N voters")
    p.set_defaults(func=cmd_verify)

    p = with_input(sub.add_parser("trace", parents=[common], help="step-by-step partial sums"))
    p.add_argument("--voter", required=True)
    p.add_argument("--kind", choices=["bs", "ssi"], default="bs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("atlas", parents=[common], help="enumerate all systems on n voters")
    p.add_argument("n", type=int)
    p.add_argument("--profiles", choices=[*atlas_mod.PROFILE_KINDS, "all"])
    p.add_argument("--dump", metavar="FILE", help="write one JSON line per system")
    p.set_defaults(func=cmd_atlas)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "precision", 0) < 0:
        print("error: --precision must be nonnegative", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
