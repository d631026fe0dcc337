"""Command-line surface: single-family reports, closed-form verification
sweeps, the catalog-wide conjecture scan, and checks of user-supplied
Cayley tables and edge lists.

Exit codes: 0 success, 1 usage error, 2 validation failure, 3 conjecture
violation found.  Output is deterministic: identical invocations produce
byte-identical CSV/JSON regardless of --jobs.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .build import (
    DEFAULT_ORDER_CAP,
    CatalogEntry,
    FamilySpec,
    FamilyError,
    OrderCapError,
    CayleyFormatError,
    _FAMILY_PARAM_NAMES,
    build_family,
    catalog,
    ingest_cayley,
)
from .formulas import crosscheck, registry_for
from .grp import AbelianGroupError, FiniteGroup, GroupTableError
from .zagreb import (
    GraphFormatError,
    Verdict,
    conjecture_verdict,
    group_report,
    read_edge_list,
    zagreb_complement,
    zagreb_direct,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_VIOLATION = 3

CSV_HEADER = (
    "label,family,params,order,center,vertices,edges_c,m1_c,m2_c,"
    "edges_nc,m1_nc,m2_nc,verdict_c,verdict_nc,gap_c,gap_nc,formula_diffs"
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass(frozen=True)
class ScanRow:
    label: str
    family: str
    params: tuple[int, ...]
    order: int
    center: int
    vertices: int
    edges_c: int
    m1_c: int
    m2_c: int
    edges_nc: int
    m1_nc: int
    m2_nc: int
    verdict_c: str
    verdict_nc: str
    gap_c: str
    gap_nc: str
    formula_diffs: int

    def sort_key(self):
        return (self.order, self.family, self.params, self.label)

    def params_str(self) -> str:
        return ";".join(str(p) for p in self.params)

    def csv_fields(self) -> list:
        return [
            self.label, self.family, self.params_str(), self.order, self.center,
            self.vertices, self.edges_c, self.m1_c, self.m2_c,
            self.edges_nc, self.m1_nc, self.m2_nc,
            self.verdict_c, self.verdict_nc, self.gap_c, self.gap_nc,
            self.formula_diffs,
        ]

    def json_dict(self) -> dict:
        return {
            "label": self.label,
            "family": self.family,
            "params": list(self.params),
            "order": self.order,
            "center": self.center,
            "vertices": self.vertices,
            "edges_c": self.edges_c,
            "m1_c": self.m1_c,
            "m2_c": self.m2_c,
            "edges_nc": self.edges_nc,
            "m1_nc": self.m1_nc,
            "m2_nc": self.m2_nc,
            "verdict_c": self.verdict_c,
            "verdict_nc": self.verdict_nc,
            "gap_c": self.gap_c,
            "gap_nc": self.gap_nc,
            "formula_diffs": self.formula_diffs,
        }


def _row_for_group(G: FiniteGroup, family: str, params: tuple[int, ...]) -> ScanRow:
    rep = group_report(G)
    # emission-time self check: complement formulas must reproduce the NC side
    nc_again = zagreb_complement(rep.c)
    if nc_again != rep.nc:  # pragma: no cover - group_report already enforces this
        raise AssertionError(f"{G.label}: NC report mismatch at emission")
    diffs = 0
    for app in registry_for(G):
        diffs += len(crosscheck(app.entry, app.params, report=rep).diffs)
    return ScanRow(
        label=G.label,
        family=family,
        params=params,
        order=G.order,
        center=rep.center_size,
        vertices=rep.c.vertices,
        edges_c=rep.c.edges,
        m1_c=rep.c.m1,
        m2_c=rep.c.m2,
        edges_nc=rep.nc.edges,
        m1_nc=rep.nc.m1,
        m2_nc=rep.nc.m2,
        verdict_c=rep.verdict_c.status.value,
        verdict_nc=rep.verdict_nc.status.value,
        gap_c=rep.verdict_c.gap_string(),
        gap_nc=rep.verdict_nc.gap_string(),
        formula_diffs=diffs,
    )


def _scan_worker(args: tuple[CatalogEntry, int]) -> ScanRow:
    entry, order_cap = args
    G = entry.build(order_cap=order_cap)
    return _row_for_group(G, entry.family, entry.params)


def _emit_rows(rows: list[ScanRow], fmt: str, summary: dict | None = None) -> None:
    out = sys.stdout
    if fmt == "json":
        payload: object = [r.json_dict() for r in rows]
        if summary is not None:
            payload = {"rows": payload, "summary": summary}
        out.write(json.dumps(payload, indent=2))
        out.write("\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for r in rows:
        writer.writerow(r.csv_fields())
    if summary is not None:
        pairs = " ".join(f"{k}={v}" for k, v in summary.items())
        out.write(f"# scan: {pairs}\n")


def _parse_range(text: str, flag: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        print(
            f"groupzagreb: error: {flag} expects an integer or LO..HI range, "
            f"got {text!r}",
            file=sys.stderr,
        )
        raise SystemExit(EXIT_USAGE) from None


def _family_params(args, family: str, parser: _Parser) -> tuple[int, ...]:
    names = _FAMILY_PARAM_NAMES[family]
    values = []
    for name in names:
        v = getattr(args, name, None)
        if v is None:
            parser.error(f"family {family} requires --{name}")
        values.append(v)
    return tuple(values)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_family(args, parser: _Parser) -> int:
    try:
        spec = FamilySpec(args.family, _family_params(args, args.family, parser))
    except FamilyError as exc:
        parser.error(str(exc))
        return EXIT_USAGE  # pragma: no cover
    try:
        G = build_family(spec, order_cap=args.order_cap)
    except OrderCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    row = _row_for_group(G, spec.family, spec.params)
    _emit_rows([row], args.format)
    return EXIT_OK


def _cmd_verify(args, parser: _Parser) -> int:
    names = _FAMILY_PARAM_NAMES[args.family]
    ranges = []
    for name in names:
        raw = getattr(args, name, None)
        if raw is None:
            parser.error(f"verify {args.family} requires --{name} (value or LO..HI)")
        ranges.append(_parse_range(raw, f"--{name}"))
    combos: list[tuple[int, ...]] = [()]
    for r in ranges:
        combos = [c + (v,) for c in combos for v in r]

    checked = skipped = 0
    failures: list[str] = []
    warnings: list[str] = []
    for params in combos:
        try:
            spec = FamilySpec(args.family, params)
        except FamilyError:
            skipped += 1
            continue
        if spec.order() > args.order_cap:
            skipped += 1
            continue
        G = build_family(spec, order_cap=args.order_cap)
        rep = group_report(G)
        checked += 1
        for app in registry_for(G):
            result = crosscheck(app.entry, app.params, report=rep)
            for d in result.diffs:
                failures.append(
                    f"{spec.label()} [{result.entry_key}{result.params}] "
                    f"{d.field}: predicted {d.predicted}, got {d.actual}"
                )
            for d in result.alt_mismatches:
                warnings.append(
                    f"{spec.label()} [{result.entry_key}{result.params}] "
                    f"alt {d.field}: {d.predicted} vs confirmed {d.actual} ({d.note})"
                )
    for w in warnings:
        print(f"warning: {w}")
    for f in failures:
        print(f"FAIL: {f}")
    status = "FAIL" if failures else "pass"
    print(
        f"verify {args.family}: {status} "
        f"({checked} instances checked, {skipped} skipped, "
        f"{len(failures)} diffs, {len(warnings)} alt-form warnings)"
    )
    return EXIT_VALIDATION if failures else EXIT_OK


def _cmd_scan(args, parser: _Parser) -> int:
    if args.max_order < 6:
        parser.error("--max-order must be >= 6")
    entries = catalog(args.max_order)
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    work = [(e, args.order_cap) for e in entries]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_scan_worker, work, chunksize=8))
    else:
        rows = [_scan_worker(w) for w in work]

    file_errors: list[str] = []
    if args.catalog_extra:
        for fname in sorted(os.listdir(args.catalog_extra)):
            path = os.path.join(args.catalog_extra, fname)
            if not os.path.isfile(path):
                continue
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    G = ingest_cayley(fh)
            except (CayleyFormatError, GroupTableError, OSError) as exc:
                file_errors.append(f"{path}: {exc}")
                continue
            if G.label == "ingested":
                G.label = fname
            if G.is_abelian():
                file_errors.append(f"{path}: skipped (Group must be non-abelian)")
                continue
            if G.order > args.max_order:
                file_errors.append(f"{path}: skipped (order {G.order} > max order)")
                continue
            rows.append(_row_for_group(G, "ingested", ()))

    rows.sort(key=ScanRow.sort_key)
    counts = {"groups": len(rows), "strict": 0, "equality": 0, "fails": 0, "undefined": 0}
    for r in rows:
        for v in (r.verdict_c, r.verdict_nc):
            counts[{"strict": "strict", "equality": "equality",
                    "fails": "fails", "undefined": "undefined"}[v]] += 1
    _emit_rows(rows, args.format, summary=counts)
    for err in file_errors:
        print(f"warning: {err}", file=sys.stderr)
    if counts["fails"]:
        violators = [r.label for r in rows if Verdict.FAILS.value in (r.verdict_c, r.verdict_nc)]
        print(
            "CONJECTURE VIOLATION: "
            f"{counts['fails']} failing verdict(s) in {', '.join(violators)}",
            file=sys.stderr,
        )
        return EXIT_VIOLATION
    return EXIT_OK


def _graph_report_rows(graph, include_complement: bool):
    rows = [("graph", zagreb_direct(graph))]
    if include_complement:
        rows.append(("complement", zagreb_direct(graph.complement())))
    return rows


def _cmd_graph(args, parser: _Parser) -> int:
    try:
        with open(args.edges, "r", encoding="utf-8") as fh:
            graph = read_edge_list(fh)
    except (GraphFormatError, OSError, ValueError) as exc:
        print(f"error: {args.edges}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    items = []
    for name, rep in _graph_report_rows(graph, args.complement):
        verdict = conjecture_verdict(rep)
        items.append({
            "graph": name,
            "vertices": rep.vertices,
            "edges": rep.edges,
            "m1": rep.m1,
            "m2": rep.m2,
            "verdict": verdict.status.value,
            "gap": verdict.gap_string(),
        })
    if args.format == "json":
        print(json.dumps(items, indent=2))
    else:
        print("graph,vertices,edges,m1,m2,verdict,gap")
        for it in items:
            print(",".join(str(it[k]) for k in
                           ("graph", "vertices", "edges", "m1", "m2", "verdict", "gap")))
    if any(it["verdict"] == Verdict.FAILS.value for it in items):
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_group(args, parser: _Parser) -> int:
    try:
        with open(args.cayley, "r", encoding="utf-8") as fh:
            G = ingest_cayley(fh)
    except (CayleyFormatError, GroupTableError, OSError) as exc:
        print(f"error: {args.cayley}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    if G.label == "ingested":
        G.label = os.path.basename(args.cayley)
    if G.is_abelian():
        print("error: Group must be non-abelian", file=sys.stderr)
        return EXIT_VALIDATION
    rep = group_report(G)
    row = _row_for_group(G, "ingested", ())
    apps = registry_for(G)
    pr = G.commutativity_degree()
    info = {
        "label": G.label,
        "order": G.order,
        "center": rep.center_size,
        "commutativity_degree": f"{pr.numerator}/{pr.denominator}",
        "distinct_centralizers": G.count_distinct_centralizers(),
        "decomposition": (
            [list(p) for p in rep.decomposition.parts] if rep.decomposition else None
        ),
        "applicable_formulas": [
            {
                "entry": app.entry.key,
                "params": list(app.params),
                "source": app.source,
                "tags": list(app.tags),
                "diffs": len(crosscheck(app.entry, app.params, report=rep).diffs),
            }
            for app in apps
        ],
        "row": row.json_dict(),
    }
    if args.format == "json":
        print(json.dumps(info, indent=2))
    else:
        _emit_rows([row], "csv")
        print(f"# commutativity_degree: {info['commutativity_degree']}")
        print(f"# distinct_centralizers: {info['distinct_centralizers']}")
        for app in info["applicable_formulas"]:
            tags = ";".join(app["tags"])
            print(
                f"# formula: {app['entry']}{tuple(app['params'])} "
                f"source={app['source']} diffs={app['diffs']} tags={tags}"
            )
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------

def _add_param_flags(sub: _Parser) -> None:
    for name in ("m", "n", "p", "q", "k"):
        sub.add_argument(f"--{name}", type=int, default=None)


def _add_param_range_flags(sub: _Parser) -> None:
    for name in ("m", "n", "p", "q", "k"):
        sub.add_argument(f"--{name}", type=str, default=None,
                         help=f"{name} value or LO..HI range")


def build_parser() -> _Parser:
    parser = _Parser(prog="groupzagreb",
                     description="Zagreb indices of commuting/non-commuting "
                                 "graphs of finite groups")
    sub = parser.add_subparsers(dest="command", required=True)
    families = sorted(_FAMILY_PARAM_NAMES)

    p_family = sub.add_parser("family", help="report for one family instance")
    p_family.add_argument("family", choices=families)
    _add_param_flags(p_family)
    p_family.add_argument("--format", choices=("csv", "json"), default="csv")
    p_family.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)

    p_verify = sub.add_parser("verify", help="closed forms vs brute force over ranges")
    p_verify.add_argument("family", choices=families)
    _add_param_range_flags(p_verify)
    p_verify.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)

    p_scan = sub.add_parser("scan", help="conjecture scan over the catalog")
    p_scan.add_argument("--max-order", type=int, default=512)
    p_scan.add_argument("--catalog-extra", type=str, default=None,
                        help="directory of Cayley-table files to include")
    p_scan.add_argument("--jobs", type=int, default=0,
                        help="worker processes (default: all cores)")
    p_scan.add_argument("--format", choices=("csv", "json"), default="csv")
    p_scan.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)

    p_graph = sub.add_parser("graph", help="conjecture check for an edge-list file")
    p_graph.add_argument("--edges", required=True)
    p_graph.add_argument("--complement", action="store_true")
    p_graph.add_argument("--format", choices=("csv", "json"), default="csv")

    p_group = sub.add_parser("group", help="full report for a Cayley-table file")
    p_group.add_argument("--cayley", required=True)
    p_group.add_argument("--format", choices=("csv", "json"), default="csv")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = {
        "family": _cmd_family,
        "verify": _cmd_verify,
        "scan": _cmd_scan,
        "graph": _cmd_graph,
        "group": _cmd_group,
    }[args.command]
    return command(args, parser)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
