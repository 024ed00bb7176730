"""Smoke test for the `arrowhead` extension module.

Build first:  cargo build -p arrowhead-py --release
Then run:     python3 python/smoke_test.py [path/to/libarrowhead.so]
"""

import importlib.machinery
import importlib.util
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load(path=None):
    candidates = [Path(path)] if path else [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libarrowhead.so", "libarrowhead.dylib", "arrowhead.dll")
    ]
    for lib in candidates:
        if lib.exists():
            loader = importlib.machinery.ExtensionFileLoader("arrowhead", str(lib))
            spec = importlib.util.spec_from_loader("arrowhead", loader)
            module = importlib.util.module_from_spec(spec)
            loader.exec_module(module)
            return module
    sys.exit("extension not built; run: cargo build -p arrowhead-py --release")


def main():
    ah = load(sys.argv[1] if len(sys.argv) > 1 else None)

    g = ah.Graph(3)
    assert g.name == "T_3" and g.order == 64 and len(g) == 64
    assert g.edge_count == 192 and len(g.edges()) == 192
    assert len(g.neighbors((0, 0))) == 6
    assert g.diameter() == ah.diameter_formula("T", 3) == 5
    anchor, inverse = ah.antipodal_anchor(3)
    assert (anchor, inverse) == ((2, 5), (5, 2))
    assert anchor in g.antipodals() and inverse in g.antipodals()
    assert len(g.antipodals()) == ah.antipodal_count("T", 3) == 6
    assert sum(g.histogram()) == 64

    dt = ah.Graph(3, variant="diamond", directed=True)
    assert dt.name == "DTdir_3"
    assert dt.distance((0, 0), (5, 2)) == ah.directed_diamond_distance(3, (5, 2)) == 5
    path = dt.shortest_path((0, 0), (5, 2))
    assert len(path) == 6 and path[0] == (0, 0) and path[-1] == (5, 2)
    assert all(dt.is_adjacent(a, b) for a, b in zip(path, path[1:]))

    at = ah.Graph.family("ATdir", 4)
    assert at.diameter() == 15 and len(at.antipodals()) == 6

    triples = dict(ah.omega_subsets(3))
    assert triples["Omega_3"][0] == (3, 5)
    assert len(ah.subgroup_vertices(4, 2)) == 16
    assert ah.embed_scaled(3, 1, (1, 3)) == (2, 6)

    stats = json.loads(ah.Graph(5).stats_json())
    assert stats["diameter"]["oracle"] == 21

    ok, report = ah.run_verification(1, 4)
    assert ok and report.splitlines()[-1].startswith("summary")

    try:
        ah.Graph(13)
    except ah.LevelCeilingError:
        pass
    else:
        raise AssertionError("level ceiling not enforced")
    try:
        g.neighbors((8, 0))
    except ValueError:
        pass
    else:
        raise AssertionError("off-torus vertex accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
