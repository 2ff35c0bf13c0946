#!/usr/bin/env python3
"""Writes the bundled fixture corpus as JSON documents."""

import argparse
import json
import math
from pathlib import Path


def doc(genus, vertices, edges, colors=None):
    out = {
        "genus": genus,
        "vertices": [{"id": v, "x": p[0], "y": p[1]} for v, p in vertices.items()],
        "edges": [],
    }
    for e in edges:
        item = {"id": e["id"], "u": e["u"], "v": e["v"], "polyline": [list(p) for p in e["polyline"]],
                "crossings": e.get("crossings", [])}
        if "dual_length" in e:
            item["dual_length"] = e["dual_length"]
        out["edges"].append(item)
    if colors is not None:
        out["bipartition"] = {
            "white": [v for v in vertices if colors[v] == "white"],
            "black": [v for v in vertices if colors[v] == "black"],
        }
    return out


def straight(eid, u, v, pos, **extra):
    return {"id": eid, "u": u, "v": v, "polyline": [pos[u], pos[v]], **extra}


def via(eid, u, v, pos, mids):
    return {"id": eid, "u": u, "v": v, "polyline": [pos[u], *mids, pos[v]]}


def planar(vertices, pairs, colors=None, dual=None):
    edges = []
    for k, (u, v) in enumerate(pairs, start=1):
        extra = {"dual_length": dual} if dual is not None else {}
        edges.append(straight(k, u, v, vertices, **extra))
    return doc(0, vertices, edges, colors)


def grid(rows, cols, spacing=1.0, shift=None, dual=None):
    pos, colors, pairs = {}, {}, []
    for j in range(rows):
        for i in range(cols):
            vid = j * cols + i + 1
            pos[vid] = (i * spacing, j * spacing)
            colors[vid] = "black" if (i + j) % 2 == 0 else "white"
    if shift:
        vid, dx, dy = shift
        pos[vid] = (pos[vid][0] + dx, pos[vid][1] + dy)
    for j in range(rows):
        for i in range(cols):
            vid = j * cols + i + 1
            if i + 1 < cols:
                pairs.append((vid, vid + 1))
            if j + 1 < rows:
                pairs.append((vid, vid + cols))
    return planar(pos, pairs, colors, dual)


def torus(n):
    """n x n square grid on the torus drawn in the diamond R = P([0,1]^2),
    P(a, b) = (a - b, a + b - 1); sides a = 1, b = 1, a = 0, b = 0 are 1, 2, 3, 4."""

    def p(a, b):
        return (a - b, a + b - 1.0)

    def vid(i, j):
        return j * n + i + 1

    step = 1.0 / n
    pos = {vid(i, j): p((i + 0.5) * step, (j + 0.5) * step) for j in range(n) for i in range(n)}
    length = math.sqrt(2.0) * step
    edges, k = [], 0
    for j in range(n):
        for i in range(n):
            b = (j + 0.5) * step
            a0 = (i + 0.5) * step
            k += 1
            if i + 1 < n:
                edges.append({"id": k, "u": vid(i, j), "v": vid(i + 1, j),
                              "polyline": [pos[vid(i, j)], pos[vid(i + 1, j)]], "dual_length": length})
            else:
                edges.append({"id": k, "u": vid(i, j), "v": vid(0, j),
                              "polyline": [pos[vid(i, j)], p(1.0, b), p(0.0, b), pos[vid(0, j)]],
                              "crossings": [1], "dual_length": length})
            k += 1
            if j + 1 < n:
                edges.append({"id": k, "u": vid(i, j), "v": vid(i, j + 1),
                              "polyline": [pos[vid(i, j)], pos[vid(i, j + 1)]], "dual_length": length})
            else:
                edges.append({"id": k, "u": vid(i, j), "v": vid(i, 0),
                              "polyline": [pos[vid(i, j)], p(a0, 1.0), p(a0, 0.0), pos[vid(i, 0)]],
                              "crossings": [2], "dual_length": length})
    colors = None
    if n % 2 == 0:
        colors = {vid(i, j): ("black" if (i + j) % 2 == 0 else "white") for j in range(n) for i in range(n)}
    return doc(1, pos, edges, colors)


def bouquet_g2():
    """One vertex with a loop through each of the four bridges of the octagon."""
    def corner(k):
        t = 2.0 * math.pi * k / 8.0
        return (math.cos(t), math.sin(t))

    def mid(j):
        a, b = corner(j - 1), corner(j)
        return ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)

    pos = {"c": (0.0, 0.0)}
    edges = []
    for k, (lower, bridge) in enumerate([(1, 1), (2, 2), (5, 3), (6, 4)], start=1):
        edges.append({"id": k, "u": "c", "v": "c",
                      "polyline": [pos["c"], mid(lower), mid(lower + 2), pos["c"]], "crossings": [bridge]})
    return doc(2, pos, edges)


def flower():
    pos = {"c": (0.0, 0.0)}
    pairs = []
    for k in range(3):
        t = 2.0 * math.pi * k / 3.0
        a, b = f"a{k + 1}", f"b{k + 1}"
        pos[a] = (math.cos(t - 0.35), math.sin(t - 0.35))
        pos[b] = (math.cos(t + 0.35), math.sin(t + 0.35))
        pairs += [("c", a), (a, b), (b, "c")]
    return planar(pos, pairs)


def parallel5():
    pos = {1: (0.0, 0.0), 2: (2.0, 0.0)}
    edges = [straight(1, 1, 2, pos)]
    for k, h in enumerate([0.5, 1.0, -0.5, -1.0], start=2):
        edges.append(via(k, 1, 2, pos, [(1.0, h)]))
    return doc(0, pos, edges)


def theta():
    pos = {1: (0.0, 0.0), 2: (2.0, 0.0)}
    return doc(0, pos, [straight(1, 1, 2, pos), via(2, 1, 2, pos, [(1.0, 1.0)]), via(3, 1, 2, pos, [(1.0, -1.0)])])


def fixtures():
    out = {}
    out["triangle"] = planar({1: (0.0, 0.0), 2: (1.0, 0.0), 3: (0.5, 0.8)}, [(1, 2), (2, 3), (3, 1)])
    out["k4"] = planar({1: (0.0, 0.0), 2: (2.0, 0.0), 3: (1.0, 1.8), 4: (1.0, 0.6)},
                       [(1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4)])
    out["two_squares"] = grid(2, 3, dual=1.0)
    out["theta"] = theta()
    out["single_edge"] = planar({1: (0.0, 0.0), 2: (1.0, 0.0)}, [(1, 2)], {1: "black", 2: "white"}, dual=1.0)
    out["square4"] = grid(2, 2, dual=1.0)
    out["square_patch_3x3"] = grid(3, 3, dual=1.0)
    out["square_patch_3x3_perturbed"] = grid(3, 3, shift=(5, 0.3, 0.0), dual=1.0)
    out["grid_4x4"] = grid(4, 4, dual=1.0)
    out["bowtie"] = planar({"c": (0.0, 0.0), "l1": (-1.0, -0.6), "l2": (-1.0, 0.6), "r1": (1.0, -0.6), "r2": (1.0, 0.6)},
                           [("c", "l1"), ("l1", "l2"), ("l2", "c"), ("c", "r1"), ("r1", "r2"), ("r2", "c")])
    out["flower"] = flower()
    out["parallel5"] = parallel5()
    out["torus_2x2"] = torus(2)
    out["torus_3x3"] = torus(3)
    out["torus_4x4"] = torus(4)
    out["bouquet_g2"] = bouquet_g2()
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", type=Path)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for name, d in fixtures().items():
        (args.outdir / f"{name}.json").write_text(json.dumps(d, indent=1) + "\n")
        print(name)


if __name__ == "__main__":
    main()
