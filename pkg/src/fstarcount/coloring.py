"""Coloring complexes of hypergraphs.

The two-coloring vectors of a hypergraph that are constant on some edge
(improper colorings), ordered componentwise, form a simplicial complex:
a face is a chain of improper vectors that are all constant on one
common edge.  Every face is a unimodular simplex with 0/1 vertex
coordinates, so the complex's counting polynomial is determined by its
f-vector, and its h*-vector can have negative entries even though the
f*-vector never does.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .bases import (FStarVector, HStarVector, hstar_from_poly,
                    poly_from_fstar)
from .simplices import OpenComplex, Simplex

Vertex = tuple[int, ...]
Face = frozenset


@dataclass(frozen=True)
class Hypergraph:
    vertex_count: int
    edges: tuple[frozenset, ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("at least one vertex required")
        edges = tuple(frozenset(int(v) for v in e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if len(e) < 2:
                raise ValueError("edges must contain at least two vertices")
            if not e <= set(range(1, self.vertex_count + 1)):
                raise ValueError("edge vertex outside 1..vertex_count")


def improper_vertex_set(graph: Hypergraph, edge: frozenset) -> set[Vertex]:
    """All 0/1 vectors constant on the edge, except all-zero/all-one."""
    edge = frozenset(edge)
    if edge not in graph.edges:
        raise ValueError("not an edge of the hypergraph")
    others = [v for v in range(1, graph.vertex_count + 1) if v not in edge]
    vectors = set()
    for constant in (0, 1):
        for rest in itertools.product((0, 1), repeat=len(others)):
            x = [constant] * graph.vertex_count
            for v, bit in zip(others, rest):
                x[v - 1] = bit
            if any(x) and not all(x):
                vectors.add(tuple(x))
    return vectors


def edge_chain_faces(graph: Hypergraph, edge: frozenset) -> set[Face]:
    """All chains (under componentwise order) inside the improper vertex
    set of one edge."""
    vectors = sorted(improper_vertex_set(graph, edge))
    above = {
        x: [y for y in vectors
            if y != x and all(a <= b for a, b in zip(x, y))]
        for x in vectors
    }
    faces: set[Face] = set()

    def grow(chain: tuple[Vertex, ...]) -> None:
        faces.add(frozenset(chain))
        for y in above[chain[-1]]:
            grow(chain + (y,))

    for x in vectors:
        grow((x,))
    return faces


@dataclass(frozen=True)
class ColoringComplexFaces:
    """The face set of a coloring complex with its per-size counts."""

    f: tuple[int, ...]
    faces: frozenset


def coloring_complex_faces(graph: Hypergraph) -> ColoringComplexFaces:
    faces: set[Face] = set()
    for edge in graph.edges:
        faces |= edge_chain_faces(graph, edge)
    if not faces:
        return ColoringComplexFaces((), frozenset())
    counts = [0] * max(len(face) for face in faces)
    for face in faces:
        counts[len(face) - 1] += 1
    return ColoringComplexFaces(tuple(counts), frozenset(faces))


def coloring_complex_fvector(graph: Hypergraph) -> tuple[int, ...]:
    """Face counts by dimension; empty tuple for the empty complex."""
    return coloring_complex_faces(graph).f


def coloring_complex_hstar(graph: Hypergraph,
                           ) -> tuple[FStarVector, HStarVector]:
    """(f*, h*) of the coloring complex.  Every face is unimodular, so
    the f*-vector equals the f-vector; h* is its basis conversion at the
    complex dimension."""
    f = coloring_complex_fvector(graph)
    if not f:
        return (FStarVector((Fraction(0),), 0),
                HStarVector((Fraction(0),), 0))
    d = len(f) - 1
    fstar = FStarVector(tuple(Fraction(c) for c in f), d)
    hstar = hstar_from_poly(poly_from_fstar(fstar), d)
    return fstar, hstar


def realize_coloring_complex(graph: Hypergraph) -> OpenComplex:
    """Geometric realization: each chain face as the open simplex on its
    0/1 vectors, suitable for direct lattice counting."""
    faces = coloring_complex_faces(graph).faces
    cells = [Simplex(tuple(sorted(face)), is_open=True)
             for face in sorted(faces, key=lambda fc: (len(fc), sorted(fc)))]
    return OpenComplex(tuple(cells))
