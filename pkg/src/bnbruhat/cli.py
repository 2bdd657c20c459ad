"""Command-line front door.

Thin shell over the library modules: degree queries, cover and descent
inspection, graph export, enumeration and the verify runner. Exit codes:
0 success (all verify checks passed), 1 a verify check failed, 2 bad
usage or unparseable input. Machine output (``--json``) is line-delimited
JSON with deterministic field order, byte-identical for any ``--jobs``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import extremal, graphs, order, signed
from .signed import ParseError, SignedPermutation

VERIFY_SUITES = ("bounds", "classification", "lemmas", "oracle", "all")
_LEMMA_SAMPLE_RANK6 = 10_000
_ORACLE_SAMPLE = 2_000
_R_SAMPLE = 300


def _windows_for_check(n: int, limit: int, seed_offset: int) -> tuple[list[tuple[int, ...]], bool]:
    """All windows when the group is small enough, else a seeded sample."""
    if extremal.group_order(n) <= limit:
        return list(extremal._all_windows(n)), False
    sample_size = min(limit, _ORACLE_SAMPLE)
    return (
        extremal.random_windows(n, sample_size, extremal.DEFAULT_SAMPLE_SEED + seed_offset),
        True,
    )


def _check(suite: str, check: str, n: int, expected, actual, skip: bool = False) -> dict:
    status = "skip" if skip else ("pass" if expected == actual else "fail")
    return {
        "suite": suite,
        "check": check,
        "n": n,
        "expected": expected,
        "actual": actual,
        "status": status,
    }


_scan_cache: dict = {}


def _scan(n: int, statistic: str, jobs: Optional[int]):
    # bounds and classification share scans within one verify invocation
    key = (n, statistic, jobs)
    if key not in _scan_cache:
        _scan_cache[key] = extremal.max_statistic(n, statistic, jobs=jobs)
    return _scan_cache[key]


def _verify_bounds(n: int, jobs: Optional[int]) -> list[dict]:
    out = []
    for stat, expected in (
        ("down", extremal.max_down_value(n)),
        ("up", extremal.max_down_value(n)),
        ("total", extremal.max_total_value(n)),
    ):
        report = _scan(n, stat, jobs)
        out.append(_check("bounds", f"max_{stat}", n, expected, report.max_value))
    return out


def _verify_classification(n: int, jobs: Optional[int]) -> list[dict]:
    out = []
    down = _scan(n, "down", jobs)
    expected_down = [list(p.window) for p in extremal.claimed_maximizers(n, "down")]
    out.append(
        _check(
            "classification",
            "down_maximizers",
            n,
            expected_down,
            [list(p.window) for p in down.maximizers],
        )
    )
    total = _scan(n, "total", jobs)
    out.append(
        _check(
            "classification",
            "total_maximizer_count",
            n,
            extremal.claimed_total_maximizer_count(n),
            len(total.maximizers),
        )
    )
    family = extremal.claimed_maximizers(n, "total")
    if family is None:
        out.append(
            _check("classification", "total_maximizers", n, None, None, skip=True)
        )
    else:
        out.append(
            _check(
                "classification",
                "total_maximizers",
                n,
                [list(p.window) for p in family],
                [list(p.window) for p in total.maximizers],
            )
        )
    return out


def _verify_lemmas(n: int, jobs: Optional[int]) -> list[dict]:
    if not 2 <= n <= 6:
        return [_check("lemmas", "structural_bounds", n, None, None, skip=True)]
    sample = _LEMMA_SAMPLE_RANK6 if n >= 6 else None
    report = extremal.lemma_suite(n, sample=sample)
    out = []
    for name in extremal.LEMMA_CHECKS:
        if name == "deficiency_disjunction" and n < 4:
            out.append(_check("lemmas", name, n, None, None, skip=True))
        else:
            out.append(_check("lemmas", name, n, 0, report.violations[name]))
    return out


def _verify_oracle(n: int, jobs: Optional[int]) -> list[dict]:
    out = []

    if n <= 4:
        table = signed.word_lengths_by_bfs(n)
        mismatches = sum(
            1 for p, d in table.items() if signed.coxeter_length(p) != d
        )
        out.append(_check("oracle", "length_vs_word_search", n, 0, mismatches))
    else:
        out.append(_check("oracle", "length_vs_word_search", n, None, None, skip=True))

    ws, _ = _windows_for_check(n, 10_000, seed_offset=1)
    bad = 0
    for w in ws:
        p = SignedPermutation._unchecked(w)
        ds = order.descent_set(p)
        if ds != order.descent_set_oracle(p):
            bad += 1
            continue
        if order.down_degree(p) != len(ds):
            bad += 1
            continue
        if graphs.total_weight(graphs.build_graph(p, "alpha")) != len(ds):
            bad += 1
    out.append(_check("oracle", "cover_oracle_agreement", n, 0, bad))

    ws, sampled = _windows_for_check(n, 10_000, seed_offset=2)
    bad = 0
    seen = set()
    for w in ws:
        p = SignedPermutation._unchecked(w)
        ds = order.descent_set(p)
        seen.add(ds)
        try:
            if order.reconstruct_from_descents(ds, n) != p:
                bad += 1
        except order.NotADescentSetError:
            bad += 1
        if order.up_degree(p) != order.down_degree(signed.negate(p)):
            bad += 1
    out.append(_check("oracle", "descent_roundtrip", n, 0, bad))
    if not sampled:
        out.append(_check("oracle", "descent_injectivity", n, len(ws), len(seen)))
    else:
        out.append(_check("oracle", "descent_injectivity", n, None, None, skip=True))

    ws, _ = _windows_for_check(n, 5_000, seed_offset=3)
    if len(ws) > _R_SAMPLE and extremal.group_order(n) > 5_000:
        ws = ws[:_R_SAMPLE]
    bad = 0
    from itertools import combinations

    for w in ws:
        p = SignedPermutation._unchecked(w)
        values = list(p.window)
        subsets = [()] + [(a,) for a in values] + list(combinations(values, 2))
        for s in subsets:
            if graphs.r_statistic(p, s) != graphs.r_statistic_by_rectangles(p, s):
                bad += 1
        gb = graphs.build_graph(p, "beta")
        total = order.total_degree(p)
        for a in values:
            lhs = total
            rhs = (
                order.total_degree(graphs.flatten(p, (a,)))
                + graphs.vertex_degree(gb, a)
                - graphs.r_statistic(p, (a,))
            )
            if lhs != rhs:
                bad += 1
    out.append(_check("oracle", "deficiency_consistency", n, 0, bad))
    return out


def _run_verify(n: int, suite: str, jobs: Optional[int]) -> tuple[int, list[dict]]:
    checks: list[dict] = []
    if suite in ("bounds", "all"):
        checks += _verify_bounds(n, jobs)
    if suite in ("classification", "all"):
        checks += _verify_classification(n, jobs)
    if suite in ("lemmas", "all"):
        checks += _verify_lemmas(n, jobs)
    if suite in ("oracle", "all"):
        checks += _verify_oracle(n, jobs)
    code = 1 if any(c["status"] == "fail" for c in checks) else 0
    return code, checks


def _format_check(c: dict) -> str:
    if c["status"] == "skip":
        return f"SKIP [{c['suite']}] {c['check']} n={c['n']}"
    return (
        f"{c['status'].upper():4} [{c['suite']}] {c['check']} n={c['n']}: "
        f"expected={c['expected']} actual={c['actual']}"
    )


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="line-delimited JSON output")
    common.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker processes for enumeration (default: BNBRUHAT_JOBS or all cores)",
    )

    ap = argparse.ArgumentParser(
        prog="bnbruhat",
        description="Strong Bruhat order on signed permutations: degrees, covers, "
        "descent sets, degree graphs, extremal enumeration.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degree", parents=[common], help="degree of one element")
    p.add_argument("--window", required=True, help="window, e.g. '[1,2,-4,-3]'")
    p.add_argument("--kind", required=True, choices=("down", "up", "total"))

    p = sub.add_parser("covers", parents=[common], help="elements covered by one element")
    p.add_argument("--window", required=True)

    p = sub.add_parser("descents", parents=[common], help="strong descent set")
    p.add_argument("--window", required=True)

    p = sub.add_parser("reconstruct", parents=[common], help="element from its descent set")
    p.add_argument("--n", required=True, type=int)
    p.add_argument(
        "--descents",
        required=True,
        help="pairs 'a,b' joined by ';' (use --descents=... when the value starts with '-')",
    )

    p = sub.add_parser("graph", parents=[common], help="alpha or beta degree graph")
    p.add_argument("--window", required=True)
    p.add_argument("--kind", required=True, choices=("alpha", "beta"))
    p.add_argument("--format", default="dot", choices=("dot", "json"))

    p = sub.add_parser("enumerate", parents=[common], help="scan all of B_n")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--stat", required=True, choices=("down", "up", "total"))
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--max", action="store_true", help="maximum and all maximizers")
    g.add_argument("--histogram", action="store_true", help="value counts")

    p = sub.add_parser("verify", parents=[common], help="check enumeration against the recorded values")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--suite", required=True, choices=VERIFY_SUITES)

    return ap


def _cmd_degree(args) -> tuple[int, list[str]]:
    p = signed.parse_window(args.window)
    fn = {"down": order.down_degree, "up": order.up_degree, "total": order.total_degree}
    value = fn[args.kind](p)
    if args.json:
        payload = {"window": list(p.window), "kind": args.kind, "degree": value}
        return 0, [json.dumps(payload, separators=(",", ":"))]
    return 0, [str(value)]


def _cmd_covers(args) -> tuple[int, list[str]]:
    p = signed.parse_window(args.window)
    entries = order.covers_down(p)
    if args.json:
        payload = {
            "window": list(p.window),
            "covers": [
                {"reflection": [lab.a, lab.b], "window": list(q.window)}
                for lab, q in entries
            ],
        }
        return 0, [json.dumps(payload, separators=(",", ":"))]
    return 0, [f"{lab} -> {q}" for lab, q in entries]


def _cmd_descents(args) -> tuple[int, list[str]]:
    p = signed.parse_window(args.window)
    ds = order.descent_set(p)
    if args.json:
        payload = {
            "window": list(p.window),
            "descents": [[lab.a, lab.b] for lab in sorted(ds)],
        }
        return 0, [json.dumps(payload, separators=(",", ":"))]
    return 0, [order.descents_to_text(ds)]


def _cmd_reconstruct(args) -> tuple[int, list[str]]:
    labels = order.parse_descents(args.descents)
    p = order.reconstruct_from_descents(labels, args.n)
    if args.json:
        payload = {
            "n": args.n,
            "descents": [[lab.a, lab.b] for lab in sorted(labels)],
            "window": list(p.window),
        }
        return 0, [json.dumps(payload, separators=(",", ":"))]
    return 0, [str(p)]


def _cmd_graph(args) -> tuple[int, list[str]]:
    p = signed.parse_window(args.window)
    g = graphs.build_graph(p, args.kind)
    return 0, [graphs.export_graph(g, args.format).rstrip("\n")]


def _cmd_enumerate(args) -> tuple[int, list[str]]:
    if args.max:
        report = extremal.max_statistic(args.n, args.stat, jobs=args.jobs)
        if args.json:
            return 0, [json.dumps(report.to_dict(), separators=(",", ":"))]
        lines = [
            f"max {args.stat} degree for n={args.n}: {report.max_value}",
            f"maximizers: {len(report.maximizers)}",
        ]
        lines += [str(p) for p in report.maximizers]
        if report.matches_family is not None:
            lines.append(f"matches reference classification: {report.matches_family}")
        return 0, lines
    hist = extremal.degree_histogram(args.n, args.stat, jobs=args.jobs)
    if args.json:
        payload = {
            "n": args.n,
            "statistic": args.stat,
            "histogram": [[k, v] for k, v in hist.items()],
        }
        return 0, [json.dumps(payload, separators=(",", ":"))]
    return 0, [f"{k} {v}" for k, v in hist.items()]


def _cmd_verify(args) -> tuple[int, list[str]]:
    code, checks = _run_verify(args.n, args.suite, args.jobs)
    if args.json:
        return code, [json.dumps(c, separators=(",", ":")) for c in checks]
    lines = [_format_check(c) for c in checks]
    failed = sum(1 for c in checks if c["status"] == "fail")
    passed = sum(1 for c in checks if c["status"] == "pass")
    skipped = sum(1 for c in checks if c["status"] == "skip")
    lines.append(f"checks: {passed} passed, {failed} failed, {skipped} skipped")
    return code, lines


_HANDLERS = {
    "degree": _cmd_degree,
    "covers": _cmd_covers,
    "descents": _cmd_descents,
    "reconstruct": _cmd_reconstruct,
    "graph": _cmd_graph,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        code, lines = _HANDLERS[args.command](args)
    except (ParseError, order.NotADescentSetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
