"""End-to-end tabulation: enumerate layouts, identify knots, report minima.

Runs the bundled 4- and 5-mosaic layouts through the full pipeline with the
shipped catalog, then prints the per-knot summary table and a cross-layout
comparison.  Writes its stores into ./demo-output/.
"""

from pathlib import Path

from knotmosaics.catalog import bootstrap_fingerprints, default_catalog_path, load_catalog
from knotmosaics.layouts import builtin_layout
from knotmosaics.pipeline import (
    RunConfig,
    best_per_knot,
    compare_layouts,
    load_store,
    report_table,
    run_pipeline,
)
from knotmosaics.tiles import serialize_matrix

out = Path("demo-output")
out.mkdir(exist_ok=True)

print("bootstrapping catalog fingerprints (cached after the first run)...")
catalog = load_catalog(default_catalog_path())
index = bootstrap_fingerprints(catalog, cache_dir=out / "cache")

stores = {}
for name, m in (("shell4", 0), ("staircase5", 3)):
    layout = builtin_layout(name)
    layout_file = out / f"{name}.layout"
    layout_file.write_text(
        "\n".join(
            " ".join("*" if k == -1 else str(k) for k in row) for row in layout.cells
        )
    )
    store = out / f"{name}.store"
    store.unlink(missing_ok=True)
    stats = run_pipeline(
        RunConfig(layout_path=layout_file, min_crossings=m, store_path=store),
        index=index,
    )
    stores[name] = store
    print(f"{name} (m={m}): {stats.to_dict()}")

hits = [h for s in stores.values() for h in load_store(s)]
print()
print(report_table(best_per_knot(hits)))

print()
print("layout comparison:")
diff = compare_layouts(load_store(stores["shell4"]), load_store(stores["staircase5"]))
for key, names in diff.items():
    print(f"  {key}: {sorted(names)}")

best_4_1 = min(
    (h for h in hits if h.name == "4_1"), key=lambda h: (h.crossings, h.grid_text)
)
print()
print("a minimal-crossing 4_1 mosaic found by the search:")
print(serialize_matrix(best_4_1.grid()))
