"""Independent check of an `arrowhead generate` edge list.

Verifies the edge count (3 * 4^n), that every endpoint lies on the torus,
that every vertex has degree 6 (undirected) or out/in-degree 3 (directed),
and that every edge offset is a generator.
"""

import argparse
import sys
from collections import Counter


def parse_vertex(text):
    x, y = text.strip().split(",")
    return int(x), int(y)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("path")
    ap.add_argument("--n", type=int, required=True)
    args = ap.parse_args()

    m = 1 << args.n
    order = m * m
    offsets = {(1, 0), (0, 1), (1, 1), (m - 1, 0), (0, m - 1), (m - 1, m - 1)}
    offsets = {(dx % m, dy % m) for dx, dy in offsets}

    edges = []
    directed = None
    with open(args.path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            sep = " -> " if " -> " in line else " -- "
            directed = sep == " -> " if directed is None else directed
            a, b = line.split(sep)
            edges.append((parse_vertex(a), parse_vertex(b)))

    errors = []
    if len(edges) != 3 * order:
        errors.append(f"edge count {len(edges)}, expected {3 * order}")
    out_deg, in_deg, deg = Counter(), Counter(), Counter()
    for u, v in edges:
        for x, y in (u, v):
            if not (0 <= x < m and 0 <= y < m):
                errors.append(f"vertex ({x},{y}) off the torus")
        if ((v[0] - u[0]) % m, (v[1] - u[1]) % m) not in offsets:
            errors.append(f"edge {u} {v} is not a generator step")
        out_deg[u] += 1
        in_deg[v] += 1
        deg[u] += 1
        deg[v] += 1
    for x in range(m):
        for y in range(m):
            v = (x, y)
            if directed:
                if out_deg[v] != 3 or in_deg[v] != 3:
                    errors.append(f"{v} has out/in degree {out_deg[v]}/{in_deg[v]}")
            elif deg[v] != 6:
                errors.append(f"{v} has degree {deg[v]}")

    for e in errors[:20]:
        print(e)
    print(f"edges={len(edges)} order={order} directed={bool(directed)} errors={len(errors)}")
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
