"""Command-line interface for the mosaic search pipeline and services."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import bootstrap_fingerprints, default_catalog_path, load_catalog
from .pipeline import (
    RunConfig,
    best_per_knot,
    compare_layouts,
    load_store,
    report_table,
    run_pipeline,
    verify_store,
)
from .service import identify_matrix_text


def _add_catalog_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--catalog", default=None, help="catalog file (default: bundled table)")
    parser.add_argument(
        "--cache-dir",
        default=None,
        help="directory for the fingerprint cache (default: alongside the store)",
    )


def _load_index(args):
    catalog_path = Path(args.catalog) if args.catalog else default_catalog_path()
    catalog = load_catalog(catalog_path)
    cache_dir = Path(args.cache_dir) if args.cache_dir else None
    return bootstrap_fingerprints(catalog, cache_dir=cache_dir)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="knotmosaics", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="enumerate a layout and store prime-knot hits")
    run_p.add_argument("--layout", required=True, help="layout file (matrix with * wildcards)")
    run_p.add_argument("--min-crossings", type=int, default=0, metavar="M")
    run_p.add_argument("--out", required=True, help="store file for prime hits")
    run_p.add_argument("--shards", type=int, default=1)
    run_p.add_argument("--shard-index", type=int, default=0)
    run_p.add_argument("--checkpoint", default=None)
    _add_catalog_args(run_p)

    report_p = sub.add_parser("report", help="per-knot minima grouped by (size, tiles)")
    report_p.add_argument("--store", required=True)

    compare_p = sub.add_parser("compare", help="compare the knot sets of two stores")
    compare_p.add_argument("--a", required=True)
    compare_p.add_argument("--b", required=True)

    verify_p = sub.add_parser("verify", help="re-derive every stored hit")
    verify_p.add_argument("--store", required=True)
    _add_catalog_args(verify_p)

    identify_p = sub.add_parser("identify", help="identify a mosaic matrix file")
    identify_p.add_argument("--matrix", required=True, help="matrix text file")
    _add_catalog_args(identify_p)

    serve_p = sub.add_parser("serve", help="run the identification HTTP service")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--port", type=int, default=8765)
    serve_p.add_argument("--store", default=None, help="store file backing /api/catalog")
    serve_p.add_argument("--max-n", type=int, default=12)
    _add_catalog_args(serve_p)

    args = parser.parse_args(argv)

    if args.command == "run":
        config = RunConfig(
            layout_path=args.layout,
            min_crossings=args.min_crossings,
            catalog_path=args.catalog or default_catalog_path(),
            store_path=args.out,
            shard_index=args.shard_index,
            shard_total=args.shards,
            cache_dir=args.cache_dir,
            checkpoint_path=args.checkpoint,
        )
        stats = run_pipeline(config)
        print(json.dumps(stats.to_dict()))
        return 0

    if args.command == "report":
        hits = load_store(args.store)
        if not hits:
            print("store is empty", file=sys.stderr)
            return 1
        print(report_table(best_per_knot(hits)))
        return 0

    if args.command == "compare":
        result = compare_layouts(load_store(args.a), load_store(args.b))
        print(json.dumps({k: sorted(v) for k, v in result.items()}))
        return 0

    if args.command == "verify":
        problems = verify_store(load_store(args.store), _load_index(args))
        for problem in problems:
            print(problem, file=sys.stderr)
        print(f"{'FAIL' if problems else 'OK'}: {len(problems)} problems")
        return 1 if problems else 0

    if args.command == "identify":
        index = _load_index(args)
        text = Path(args.matrix).read_text()
        print(json.dumps(identify_matrix_text(text, index), indent=2))
        return 0

    if args.command == "serve":
        import uvicorn

        from .service import create_app

        app = create_app(
            catalog_path=args.catalog or default_catalog_path(),
            store_path=args.store,
            max_n=args.max_n,
            cache_dir=args.cache_dir,
        )
        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    return 2


if __name__ == "__main__":
    raise SystemExit(main())
