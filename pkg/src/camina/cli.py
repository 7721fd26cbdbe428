"""Command line interface.

Exit codes: 0 success with no violations, 1 usage error, 2 when any
VIOLATION report was produced, 3 on cap overruns and IO errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

from .catalog import (
    ParseError,
    UnknownLabel,
    builtin,
    builtin_catalog,
    format_cycles,
    parse_group_file,
)
from .conditions import (
    equal_order_coset,
    is_camina_pair,
    satisfies_CI,
    satisfies_F,
    satisfies_Fpm,
    satisfies_O,
)
from .grouptable import CapExceeded, ElementSet, GroupTable, closure_indices
from .reports import cached_character_table, persist_reports
from .structure import (
    center,
    commutator_subgroup,
    conjugacy_classes,
    exponent,
    is_nilpotent,
    is_simple,
    is_solvable,
    small_generating_set,
    subgroups,
)
from .verify import ALL_CLAIMS, VIOLATION, VerificationReport, summarize, sweep_single

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_CAPS_IO = 3

VERSION = "0.1.0"

DEFAULT_GENERATION_CAP = 20_000
DEFAULT_SUBGROUP_CAP = 50_000

_CONDITIONS = ("camina", "f", "fpm", "ci", "o", "equal-order")

CLAIM_ALIASES = {"lemmas": [c for c in ALL_CLAIMS if c.startswith("lemma_")]}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we need exit code 1
        raise UsageError(message)


def build_parser() -> _Parser:
    p = _Parser(prog="camina", description="Exact coset-conjugacy workbench for small groups")
    p.add_argument("--order-cap", type=int, default=None, help="group order cap (generation and character tables)")
    p.add_argument("--class-cap", type=int, default=None, help="conjugacy class cap for character tables")
    p.add_argument("--subgroup-cap", type=int, default=None, help="subgroup enumeration cap")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for verify")
    p.add_argument("--cache-dir", default=".camina-cache", help="character table cache directory")
    sub = p.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="catalog operations")
    cat.add_argument("action", choices=["list"])

    info = sub.add_parser("info", help="structural summary of one group")
    info.add_argument("--group", required=True)

    chartab = sub.add_parser("chartab", help="print the exact character table")
    chartab.add_argument("--group", required=True)

    subs = sub.add_parser("subgroups", help="list all subgroups in canonical order")
    subs.add_argument("--group", required=True)

    check = sub.add_parser("check", help="check one condition on one (G, H) pair")
    check.add_argument("--group", required=True)
    which = check.add_mutually_exclusive_group(required=True)
    which.add_argument("--subgroup-order", type=int)
    which.add_argument("--subgroup-index", type=int)
    which.add_argument("--subgroup-file")
    check.add_argument("--condition", required=True, choices=_CONDITIONS)

    search = sub.add_parser("search", help="list all subgroups satisfying a condition")
    search.add_argument("--group", required=True)
    search.add_argument("--condition", required=True, choices=_CONDITIONS)

    verify = sub.add_parser("verify", help="sweep theorem/lemma claims over a catalog")
    verify.add_argument("--catalog", default="builtin", help="'builtin' or a directory of group files")
    verify.add_argument("--max-order", type=int, default=96)
    verify.add_argument("--claims", default="all", help="comma list (theorem1,...,lemma_a..lemma_m,claim9,cor2,covering,lemmas,all)")
    verify.add_argument("--out", default=None, help="write a JSON-lines report file")
    return p


def _resolve_group(label: str, cap: int) -> tuple[str, GroupTable]:
    if Path(label).is_file():
        entry = parse_group_file(label)
    else:
        entry = builtin(label)
    return entry.label, entry.group(cap=cap)


def _subgroup_by_file(G: GroupTable, path: str) -> ElementSet:
    entry = parse_group_file(path)
    if entry.degree != G.degree:
        raise UsageError(f"subgroup file degree {entry.degree} != group degree {G.degree}")
    ids = []
    for gen in entry.generators:
        idx = G.index_of.get(gen.images)
        if idx is None:
            raise UsageError(f"generator {format_cycles(gen)} is not an element of the group")
        ids.append(idx)
    return ElementSet(G, closure_indices(G, ids))


def _condition_verdict(G: GroupTable, H: ElementSet, condition: str, args) -> object:
    if condition == "camina":
        return is_camina_pair(G, H)
    if condition == "f":
        return satisfies_F(G, H)
    if condition == "fpm":
        return satisfies_Fpm(G, H)
    if condition == "ci":
        caps = {}
        if args.order_cap is not None:
            caps["order_cap"] = args.order_cap
        if args.class_cap is not None:
            caps["class_cap"] = args.class_cap
        return satisfies_CI(G, H, **caps)
    if condition == "o":
        return satisfies_O(G, H)
    if condition == "equal-order":
        return equal_order_coset(G, H)
    raise UsageError(f"unknown condition {condition!r}")


def _print_verdict(G: GroupTable, H: ElementSet, index: int | None, verdict) -> None:
    gens = [format_cycles(G.elements[i]) for i in small_generating_set(G, H.members)]
    where = f"subgroup index={index} " if index is not None else ""
    print(f"{where}order={len(H)} gens={' '.join(gens) or '()'}")
    if verdict.holds:
        print(f"condition {verdict.condition}: holds")
    else:
        w = verdict.witness
        parts = [f"condition {verdict.condition}: fails"]
        if w is not None:
            if w.x is not None:
                parts.append(f"x={format_cycles(G.elements[w.x])}")
            if w.h is not None:
                parts.append(f"h={format_cycles(G.elements[w.h])}")
            parts.append(f"({w.detail})")
        print(" ".join(parts))


def _cmd_catalog(args) -> int:
    for entry in builtin_catalog():
        G = entry.group()
        print(f"{entry.label:12s} order={G.order:4d} degree={G.degree}")
    return EXIT_OK


def _cmd_info(args) -> int:
    label, G = _resolve_group(args.group, args.order_cap or DEFAULT_GENERATION_CAP)
    classes = conjugacy_classes(G)
    print(f"group {label}")
    print(f"order {G.order}")
    print(f"degree {G.degree}")
    print(f"exponent {exponent(G)}")
    print(f"generators {' '.join(format_cycles(G.elements[i]) for i in G.generator_ids) or '()'}")
    print(f"classes {classes.count} sizes {list(classes.sizes)}")
    print(f"center order {len(center(G))}")
    print(f"derived subgroup order {len(commutator_subgroup(G))}")
    print(f"solvable {is_solvable(G)}")
    print(f"nilpotent {is_nilpotent(G)}")
    print(f"simple {is_simple(G)}")
    return EXIT_OK


def _cmd_chartab(args) -> int:
    label, G = _resolve_group(args.group, args.order_cap or DEFAULT_GENERATION_CAP)
    caps = {}
    if args.order_cap is not None:
        caps["order_cap"] = args.order_cap
    if args.class_cap is not None:
        caps["class_cap"] = args.class_cap
    table = cached_character_table(G, args.cache_dir, **caps)
    classes = conjugacy_classes(G)
    print(f"character table of {label} (order {G.order}, {classes.count} classes)")
    reps = [format_cycles(G.elements[r]) for r in classes.reps]
    print("class reps:  " + "  ".join(reps))
    print("class sizes: " + "  ".join(str(s) for s in classes.sizes))
    for i, chi in enumerate(table.irreducibles):
        print(f"chi_{i}: " + "  ".join(str(v) for v in chi.values))
    print("degree sequence: " + ",".join(str(d) for d in table.degree_sequence))
    return EXIT_OK


def _cmd_subgroups(args) -> int:
    label, G = _resolve_group(args.group, args.order_cap or DEFAULT_GENERATION_CAP)
    for idx, H in enumerate(subgroups(G, args.subgroup_cap or DEFAULT_SUBGROUP_CAP)):
        gens = [format_cycles(G.elements[i]) for i in small_generating_set(G, H.members)]
        flags = []
        if H.is_normal():
            flags.append("normal")
        print(f"index={idx} order={len(H)} gens={' '.join(gens) or '()'} {' '.join(flags)}".rstrip())
    return EXIT_OK


def _cmd_check(args) -> int:
    label, G = _resolve_group(args.group, args.order_cap or DEFAULT_GENERATION_CAP)
    targets: list[tuple[int | None, ElementSet]] = []
    if args.subgroup_file is not None:
        targets.append((None, _subgroup_by_file(G, args.subgroup_file)))
    else:
        subs = subgroups(G, args.subgroup_cap or DEFAULT_SUBGROUP_CAP)
        if args.subgroup_index is not None:
            if not 0 <= args.subgroup_index < len(subs):
                raise UsageError(f"subgroup index {args.subgroup_index} out of range (0..{len(subs) - 1})")
            targets.append((args.subgroup_index, subs[args.subgroup_index]))
        else:
            targets = [(i, H) for i, H in enumerate(subs) if len(H) == args.subgroup_order]
            if not targets:
                raise UsageError(f"no subgroup of order {args.subgroup_order}")
    for index, H in targets:
        try:
            verdict = _condition_verdict(G, H, args.condition, args)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _print_verdict(G, H, index, verdict)
    return EXIT_OK


def _cmd_search(args) -> int:
    label, G = _resolve_group(args.group, args.order_cap or DEFAULT_GENERATION_CAP)
    found = 0
    for idx, H in enumerate(subgroups(G, args.subgroup_cap or DEFAULT_SUBGROUP_CAP)):
        try:
            verdict = _condition_verdict(G, H, args.condition, args)
        except ValueError:
            continue  # precondition not met (trivial or improper H)
        if verdict.holds:
            found += 1
            _print_verdict(G, H, idx, verdict)
    print(f"{found} subgroup(s) satisfy {args.condition}")
    return EXIT_OK


def _parse_claims(text: str) -> list[str]:
    if text.strip() == "all":
        return list(ALL_CLAIMS)
    claims: list[str] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if token in CLAIM_ALIASES:
            claims.extend(CLAIM_ALIASES[token])
        elif token in ALL_CLAIMS:
            claims.append(token)
        else:
            raise UsageError(f"unknown claim {token!r}")
    if not claims:
        raise UsageError("no claims selected")
    return claims


def _catalog_entries(source: str) -> list[tuple[str, str]]:
    """(kind, payload) pairs a worker can rebuild a group from."""
    if source == "builtin":
        return [("builtin", e.label) for e in builtin_catalog()]
    directory = Path(source)
    if not directory.is_dir():
        raise UsageError(f"--catalog must be 'builtin' or a directory, got {source!r}")
    return [("file", str(f)) for f in sorted(directory.iterdir()) if f.is_file()]


def _sweep_payload(item, max_order, claims, char_order_cap, char_class_cap, subgroup_cap, generation_cap):
    kind, payload = item
    entry = builtin(payload) if kind == "builtin" else parse_group_file(payload)
    G = entry.group(cap=generation_cap)
    if G.order > max_order:
        return []
    reports = sweep_single(entry.label, G, claims, char_order_cap, char_class_cap, subgroup_cap)
    return [
        (r.group_label, r.group_order, r.subgroup_index, r.subgroup_order, r.claim, r.status, r.details)
        for r in reports
    ]


def _worker(args_tuple):
    return _sweep_payload(*args_tuple)


def _cmd_verify(args) -> int:
    claims = _parse_claims(args.claims)
    items = _catalog_entries(args.catalog)
    char_order_cap = args.order_cap
    char_class_cap = args.class_cap
    subgroup_cap = args.subgroup_cap or DEFAULT_SUBGROUP_CAP
    generation_cap = args.order_cap or DEFAULT_GENERATION_CAP
    payloads = [
        (item, args.max_order, claims, char_order_cap, char_class_cap, subgroup_cap, generation_cap)
        for item in items
    ]
    raw: list[tuple] = []
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for chunk in pool.map(_worker, payloads):
                raw.extend(chunk)
    else:
        for payload in payloads:
            raw.extend(_sweep_payload(*payload))
    reports = [VerificationReport(*t) for t in raw]
    reports.sort(key=lambda r: (r.group_label, r.subgroup_index, r.claim, str(sorted(r.details.items()))))
    summary = summarize(reports)
    for claim in sorted(summary["claims"]):
        c = summary["claims"][claim]
        print(
            f"{claim:12s} PASS={c['PASS']:5d} VACUOUS={c['VACUOUS']:5d} "
            f"VIOLATION={c['VIOLATION']:3d} SKIPPED={c['SKIPPED']:3d} fired={c['fired']}"
        )
    print(f"total reports: {summary['total']}")
    print(f"violations: {summary['violations']}")
    if "theorem1" in claims:
        print(f"non-normal subgroups satisfying (F): {summary['nonnormal_f_pairs']}")
    for r in reports:
        if r.status == VIOLATION:
            print(f"VIOLATION {r.group_label} subgroup_index={r.subgroup_index} {r.claim}: {r.details}")
    if args.out:
        timestamp = datetime.now(timezone.utc).isoformat()
        persist_reports(reports, args.out, VERSION, timestamp)
        print(f"wrote {len(reports)} reports to {args.out}")
    return EXIT_VIOLATION if summary["violations"] else EXIT_OK


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    handlers = {
        "catalog": _cmd_catalog,
        "info": _cmd_info,
        "chartab": _cmd_chartab,
        "subgroups": _cmd_subgroups,
        "check": _cmd_check,
        "search": _cmd_search,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownLabel as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPS_IO
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPS_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPS_IO


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
