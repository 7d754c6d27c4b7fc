"""Command-line front end.

Thin adapters over the library: every subcommand reads Cayley JSON
(`{"order", "labels", "table"}`), calls one library entry point, and prints
JSON (default) or a human-readable text view (`--format text`).

Exit codes: 0 success / all checks pass, 1 mathematical failure (an
identity fails, no isomorphism exists, tables differ, a claim fails),
2 usage error (bad arguments, unreadable input, out-of-envelope request).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .construct import (
    diff_tables,
    gbar_derived,
    gbar_table3,
    j_subband,
    limit_product,
    standard_g,
    tower_level,
)
from .decompose import (
    BandDecomposition,
    Partition,
    check_band_decomposition,
    extension_block_decomposition,
    g_copy_partition,
)
from .errors import (
    ClosureError,
    ParseError,
    ResourceLimitError,
    SearchInvariantError,
    VarietyError,
)
from .groupoid import FiniteGroupoid, from_json, render_text
from .laws import VarietySpec, check_variety, get_variety, parse_identity
from .morphisms import canonical_iso, classify_all_bijections, iso_search
from .search import brute_force_oracle, enumerate_models, spectrum_scan
from .verify import run_claims

_ENV_THREADS = "AGBAND_THREADS"


def _read_groupoid(path: str) -> FiniteGroupoid:
    if path == "-":
        return from_json(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return from_json(fh.read())


def _doc(g: FiniteGroupoid) -> dict:
    return {
        "order": g.order,
        "labels": list(g.labels),
        "table": [list(row) for row in g.table],
    }


def _print_json(doc) -> None:
    print(json.dumps(doc, indent=2))


def _emit_groupoid(g: FiniteGroupoid, fmt: str) -> None:
    if fmt == "text":
        print(render_text(g))
    else:
        _print_json(_doc(g))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_build(args) -> int:
    if args.what == "g":
        g = standard_g()
    elif args.what == "gn":
        g = tower_level(args.n)
    elif args.what == "gbar":
        g = gbar_table3() if args.from_table3 else gbar_derived()
    else:
        g = j_subband(args.n)
    _emit_groupoid(g, args.format)
    return 0


def _cmd_check(args) -> int:
    g = _read_groupoid(args.input)
    if args.law:
        spec = VarietySpec(
            "custom", tuple(parse_identity(text) for text in args.law)
        )
    else:
        spec = get_variety(args.variety)
    report = check_variety(g, spec)
    doc = {
        "variety": spec.name,
        "order": g.order,
        "holds": report.holds,
        "identities": [
            {
                "identity": str(r.identity),
                "holds": r.holds,
                "counterexample": r.counterexample,
                "assignments": r.assignments,
            }
            for r in report.reports
        ],
    }
    if args.format == "text":
        for r in report.reports:
            verdict = "holds" if r.holds else f"fails at {r.counterexample}"
            print(f"{r.identity}: {verdict}")
        print(f"{spec.name} on order {g.order}: "
              + ("holds" if report.holds else "fails"))
    else:
        _print_json(doc)
    return 0 if report.holds else 1


def _cmd_iso(args) -> int:
    src = _read_groupoid(args.source)
    dst = _read_groupoid(args.target)
    mapping = iso_search(src, dst, anti=args.anti)
    if mapping is None:
        kind = "anti-isomorphism" if args.anti else "isomorphism"
        print(f"NOT_FOUND: no {kind} exists", file=sys.stderr)
        return 1
    if args.format == "text":
        for i, image in enumerate(mapping.images):
            print(f"{src.labels[i]} -> {dst.labels[image]}")
        print(f"kind: {mapping.kind.value}")
    else:
        _print_json(
            {"images": list(mapping.images), "kind": mapping.kind.value}
        )
    return 0


def _cmd_classify_bijections(args) -> int:
    g = _read_groupoid(args.input)
    census = classify_all_bijections(g)
    rows = [
        {"kind": kind.value, "cycle_type": list(ct), "count": count}
        for (kind, ct), count in sorted(
            census.by_cycle_type.items(),
            key=lambda item: (item[0][0].value, item[0][1]),
        )
    ]
    if args.format == "text":
        for kind, count in sorted(
            census.counts.items(), key=lambda kv: kv[0].value
        ):
            print(f"{kind.value}: {count}")
        for row in rows:
            ct = "+".join(str(c) for c in row["cycle_type"])
            print(f"  {row['kind']} cycle type {ct}: {row['count']}")
    else:
        _print_json(
            {
                "order": census.order,
                "total": census.total,
                "counts": {k.value: v for k, v in census.counts.items()},
                "by_cycle_type": rows,
            }
        )
    return 0


def _cmd_canonical_iso(args) -> int:
    g = _read_groupoid(args.input)
    enumeration = None
    if args.enumeration:
        enumeration = tuple(
            int(part) for part in args.enumeration.split(",") if part != ""
        )
    mapping = canonical_iso(g, enumeration)
    if args.format == "text":
        for i, image in enumerate(mapping.images):
            print(f"{g.labels[i]} -> {image}")
        print(f"kind: {mapping.kind.value}")
    else:
        _print_json(
            {"images": list(mapping.images), "kind": mapping.kind.value}
        )
    return 0


def _partition_doc(p: Partition) -> list[list[int]]:
    return [list(block) for block in p.blocks]


def _cmd_decompose(args) -> int:
    if args.mode == "extension":
        dec = extension_block_decomposition(args.n)
        doc = {
            "blocks": _partition_doc(dec.partition),
            "quotient": _doc(dec.quotient),
        }
    elif args.mode == "gcopies":
        g = _read_groupoid(args.input)
        partition = g_copy_partition(g)
        doc = {"blocks": _partition_doc(partition)}
    else:
        g = _read_groupoid(args.input)
        blocks = json.loads(args.partition)
        outcome = check_band_decomposition(
            g, Partition(tuple(tuple(b) for b in blocks))
        )
        if not isinstance(outcome, BandDecomposition):
            print(
                "NOT_A_DECOMPOSITION: products of blocks smear; witness "
                f"u={outcome.u}, v={outcome.v}, u'={outcome.u2}, "
                f"v'={outcome.v2}",
                file=sys.stderr,
            )
            return 1
        doc = {
            "blocks": _partition_doc(outcome.partition),
            "quotient": _doc(outcome.quotient),
        }
    if args.format == "text":
        for i, block in enumerate(doc["blocks"]):
            print(f"B{i}: {block}")
        if "quotient" in doc:
            print(render_text(FiniteGroupoid(
                doc["quotient"]["table"], doc["quotient"]["labels"]
            )))
    else:
        _print_json(doc)
    return 0


def _cmd_spectrum(args) -> int:
    v = get_variety(args.variety)
    scan = spectrum_scan(v, args.max_order)
    rows = []
    mismatch = False
    for order, count in scan:
        row = {"order": order, "count": count}
        if args.oracle:
            try:
                row["oracle"] = brute_force_oracle(order, v)
                if row["oracle"] != count:
                    mismatch = True
            except ResourceLimitError:
                row["oracle"] = None
        rows.append(row)
    if args.format == "text":
        for row in rows:
            suffix = ""
            if args.oracle:
                suffix = (
                    f"  oracle {row['oracle']}"
                    if row["oracle"] is not None
                    else "  oracle -"
                )
            print(f"order {row['order']}: {row['count']}{suffix}")
    else:
        _print_json({"variety": v.name, "spectrum": rows})
    if mismatch:
        print("oracle count disagrees with the search", file=sys.stderr)
        return 1
    return 0


def _cmd_models(args) -> int:
    v = get_variety(args.variety)
    out = enumerate_models(args.order, v, args.limit)
    summary = {
        "order": out.order,
        "variety": out.variety,
        "count": out.count,
        "stats": {
            "nodes": out.stats.nodes,
            "propagation_failures": out.stats.propagation_failures,
            "seconds": out.stats.seconds,
        },
    }
    if args.emit:
        os.makedirs(args.emit, exist_ok=True)
        paths = []
        for k, g in enumerate(out.canonical_models):
            path = os.path.join(args.emit, f"model-{k:03d}.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(_doc(g), fh, indent=2)
                fh.write("\n")
            paths.append(path)
        summary["models"] = paths
    else:
        summary["models"] = [_doc(g) for g in out.canonical_models]
    if args.format == "text":
        print(f"{out.variety} order {out.order}: {out.count} classes "
              f"({out.stats.nodes} nodes, {out.stats.seconds:.3f}s)")
        for g in out.canonical_models:
            print(render_text(g))
    else:
        _print_json(summary)
    return 0


def _cmd_diff(args) -> int:
    left = _read_groupoid(args.left)
    right = _read_groupoid(args.right)
    delta = diff_tables(left, right)
    rows = [
        {
            "row": i,
            "col": j,
            "row_label": left.labels[i],
            "col_label": left.labels[j],
            "left": a,
            "right": b,
        }
        for i, j, a, b in delta
    ]
    if args.format == "text":
        if not rows:
            print("tables match")
        for row in rows:
            print(
                f"({row['row']},{row['col']}) {row['row_label']}*"
                f"{row['col_label']}: {row['left']} vs {row['right']}"
            )
    else:
        _print_json(rows)
    return 1 if rows else 0


def _cmd_limit_product(args) -> int:
    product = limit_product(args.i, args.j)
    if args.format == "text":
        print(product)
    else:
        _print_json({"i": args.i, "j": args.j, "product": product})
    return 0


def _cmd_verify_paper(args) -> int:
    only = None
    if args.only:
        only = [
            claim
            for chunk in args.only
            for claim in chunk.split(",")
            if claim != ""
        ]
    report = run_claims(only)
    if args.format == "text":
        for r in report.results:
            print(f"{r.status:<7} {r.claim:<15} [{r.reference}] {r.detail}")
        print(f"overall: {report.overall}")
    else:
        _print_json(
            {
                "overall": report.overall,
                "results": [
                    {
                        "claim": r.claim,
                        "reference": r.reference,
                        "status": r.status,
                        "detail": r.detail,
                    }
                    for r in report.results
                ],
            }
        )
    return 0 if report.overall == "PASS" else 1


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agband",
        description=(
            "Build, check and dissect the order-quadrupling family of "
            "anti-rectangular bands."
        ),
        epilog=(
            f"{_ENV_THREADS} caps the worker count; execution is sequential, "
            "so any positive cap is honored."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=("json", "text"), default="json",
        help="output rendering (default json)",
    )

    p = sub.add_parser("build", parents=[fmt], help="emit a built-in table")
    bsub = p.add_subparsers(dest="what", required=True)
    b = bsub.add_parser("g", parents=[fmt], help="the order-4 model")
    b.set_defaults(func=_cmd_build, what="g")
    b = bsub.add_parser("gn", parents=[fmt], help="tower level n (order 4^n)")
    b.add_argument("--n", type=int, required=True)
    b.set_defaults(func=_cmd_build, what="gn")
    b = bsub.add_parser("gbar", parents=[fmt], help="the order-16 counterexample")
    b.add_argument(
        "--from-table3", action="store_true", dest="from_table3",
        help="use the transcribed fixture instead of the derived table",
    )
    b.set_defaults(func=_cmd_build, what="gbar")
    b = bsub.add_parser("j", parents=[fmt], help="the inner self-copy J_n")
    b.add_argument("--n", type=int, required=True)
    b.set_defaults(func=_cmd_build, what="j")

    p = sub.add_parser("check", parents=[fmt], help="check identities on a table")
    p.add_argument("input", nargs="?", default="-", help="Cayley JSON file or -")
    p.add_argument("--variety", default="aragb", help="preset name")
    p.add_argument(
        "--law", action="append", default=[],
        help="inline identity, e.g. '(xy)z = (zy)x' (repeatable)",
    )
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("iso", parents=[fmt], help="find an (anti)isomorphism")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--anti", action="store_true")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser(
        "classify-bijections", parents=[fmt],
        help="classify every self-bijection",
    )
    p.add_argument("input")
    p.set_defaults(func=_cmd_classify_bijections)

    p = sub.add_parser(
        "canonical-iso", parents=[fmt],
        help="stagewise isomorphism onto the tower level of equal order",
    )
    p.add_argument("input")
    p.add_argument(
        "--enumeration", default=None,
        help="comma-separated element order, e.g. 3,1,2,0",
    )
    p.set_defaults(func=_cmd_canonical_iso)

    p = sub.add_parser("decompose", parents=[fmt], help="band decompositions")
    dsub = p.add_subparsers(dest="mode", required=True)
    d = dsub.add_parser("blocks", parents=[fmt], help="check a partition")
    d.add_argument("input")
    d.add_argument("--partition", required=True, help="JSON list of blocks")
    d.set_defaults(func=_cmd_decompose, mode="blocks")
    d = dsub.add_parser("gcopies", parents=[fmt], help="split into order-4 copies")
    d.add_argument("input")
    d.set_defaults(func=_cmd_decompose, mode="gcopies")
    d = dsub.add_parser("extension", parents=[fmt], help="quarters of level n")
    d.add_argument("--n", type=int, required=True)
    d.set_defaults(func=_cmd_decompose, mode="extension")

    p = sub.add_parser("spectrum", parents=[fmt], help="model counts by order")
    p.add_argument("--variety", default="aragb")
    p.add_argument("--max-order", type=int, required=True, dest="max_order")
    p.add_argument(
        "--oracle", action="store_true",
        help="cross-check counts against the naive oracle where it applies",
    )
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("models", parents=[fmt], help="enumerate models")
    p.add_argument("--variety", default="aragb")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--emit", default=None, help="directory for model files")
    p.set_defaults(func=_cmd_models)

    p = sub.add_parser("diff", parents=[fmt], help="cell-by-cell table diff")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_diff)

    p = sub.add_parser(
        "limit-product", parents=[fmt],
        help="product of two indices in the union of all levels",
    )
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(func=_cmd_limit_product)

    p = sub.add_parser(
        "verify-paper", parents=[fmt],
        help="replay the numbered claims as a checklist",
    )
    p.add_argument(
        "--only", action="append", default=[],
        help="claim id (repeatable or comma-separated)",
    )
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def run(argv=None) -> int:
    """Entry point returning the exit code instead of raising SystemExit."""
    raw = os.environ.get(_ENV_THREADS)
    if raw is not None:
        try:
            threads = int(raw)
        except ValueError:
            threads = 0
        if threads < 1:
            print(
                f"error: {_ENV_THREADS} must be a positive integer, "
                f"got {raw!r}",
                file=sys.stderr,
            )
            return 2
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except (VarietyError, ClosureError, SearchInvariantError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, LookupError, OSError) as e:
        # ParseError and JSON decoding errors are ValueErrors; unknown
        # presets and out-of-range indices are LookupErrors
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
