#!/usr/bin/env python3
"""Regenerate the bundled named-graph edge lists in data/.

Graphs with a trustworthy constructive source are generated here:
  tutte                        networkx.tutte_graph (46 vertices, 69 edges, cubic)
  small-rhombicuboctahedron    skeleton of the rhombicuboctahedron, built from the
                               vertex coordinates (all permutations of
                               (+-1, +-1, +-(1+sqrt(2)))); edges join vertex pairs at
                               squared distance 4
  deltoidal-icositetrahedron   planar dual of the rhombicuboctahedron: one vertex per
                               face, edges between faces sharing a polyhedron edge

thomassen-94, thomassen-105 and wiener-araya have no constructive definition we
can reproduce locally; provision them from a curated source (e.g. House of
Graphs, searching the graph name), convert to the edge-list format described in
data/README.md, and drop the file next to the others.  Loaders verify the
vertex/edge counts and regularity recorded in the registry.
"""

import itertools
import math
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"


def write_edge_list(path: Path, n: int, edges) -> None:
    edges = sorted((min(u, v), max(u, v)) for u, v in edges)
    assert len(set(edges)) == len(edges), "duplicate edges"
    with open(path, "w") as fh:
        fh.write(f"n {n}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")
    print(f"wrote {path} ({n} vertices, {len(edges)} edges)")


def tutte():
    import networkx as nx

    g = nx.tutte_graph()
    assert g.number_of_nodes() == 46 and g.number_of_edges() == 69
    assert all(d == 3 for _, d in g.degree())
    write_edge_list(DATA / "tutte.edges", 46, g.edges())


def rhombicuboctahedron_vertices():
    long = 1.0 + math.sqrt(2.0)
    verts = []
    for axis in range(3):  # which coordinate carries the long leg
        for signs in itertools.product((-1.0, 1.0), repeat=3):
            p = [signs[0], signs[1], signs[2]]
            p[axis] *= long
            for i in range(3):
                if i != axis:
                    p[i] *= 1.0
            verts.append(tuple(p))
    verts = sorted(set(verts))
    assert len(verts) == 24
    return verts


def rhombicuboctahedron_edges(verts):
    edges = []
    for i, j in itertools.combinations(range(len(verts)), 2):
        d2 = sum((a - b) ** 2 for a, b in zip(verts[i], verts[j]))
        if abs(d2 - 4.0) < 1e-9:
            edges.append((i, j))
    return edges


def small_rhombicuboctahedron():
    verts = rhombicuboctahedron_vertices()
    edges = rhombicuboctahedron_edges(verts)
    assert len(edges) == 48
    deg = [0] * 24
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    assert all(d == 4 for d in deg)
    write_edge_list(DATA / "small-rhombicuboctahedron.edges", 24, edges)
    return verts, edges


def deltoidal_icositetrahedron(verts, edges):
    # Faces of the rhombicuboctahedron = vertex sets maximizing a supporting
    # normal: 6 axial squares, 12 diagonal squares, 8 corner triangles.
    normals = []
    for axis in range(3):
        for s in (-1.0, 1.0):
            v = [0.0, 0.0, 0.0]
            v[axis] = s
            normals.append(tuple(v))
    for a, b in itertools.combinations(range(3), 2):
        for sa, sb in itertools.product((-1.0, 1.0), repeat=2):
            v = [0.0, 0.0, 0.0]
            v[a], v[b] = sa, sb
            normals.append(tuple(v))
    normals += [tuple(s) for s in itertools.product((-1.0, 1.0), repeat=3)]
    assert len(normals) == 26

    faces = []
    for nrm in normals:
        dots = [sum(a * b for a, b in zip(nrm, p)) for p in verts]
        top = max(dots)
        faces.append(frozenset(i for i, d in enumerate(dots) if d > top - 1e-9))
    sizes = sorted(len(f) for f in faces)
    assert sizes == [3] * 8 + [4] * 18

    dual_edges = set()
    for u, v in edges:
        incident = [fi for fi, f in enumerate(faces) if u in f and v in f]
        assert len(incident) == 2, "polyhedron edge must border exactly two faces"
        dual_edges.add((min(incident), max(incident)))
    assert len(dual_edges) == 48
    write_edge_list(DATA / "deltoidal-icositetrahedron.edges", 26, dual_edges)


def main():
    DATA.mkdir(exist_ok=True)
    tutte()
    verts, edges = small_rhombicuboctahedron()
    deltoidal_icositetrahedron(verts, edges)


if __name__ == "__main__":
    main()
