"""Seeded random hypergraph generation for tests and the CLI."""

from __future__ import annotations

import math
import random
from typing import Optional, Union

from .errors import InvalidParameters
from .hypergraph import Hypergraph

RandomSource = Union[int, random.Random, None]


def _rng(seed: RandomSource) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def random_hypergraph(
    n_vertices: int,
    n_edges: int,
    max_size: Optional[int] = None,
    seed: RandomSource = None,
) -> Hypergraph:
    """Distinct random hyperedges drawn uniformly among the non-empty vertex
    subsets of size <= max_size (rejection sampling keeps the draw uniform).

    Vertices are labelled "1".."n"; isolated vertices are allowed and simply
    stay uncovered.  Raises when more distinct edges are requested than exist.
    """
    if n_vertices < 1:
        raise InvalidParameters("need at least one vertex")
    if max_size is None:
        max_size = n_vertices
    max_size = min(max_size, n_vertices)
    if max_size < 1:
        raise InvalidParameters("max edge size must be at least 1")
    n_subsets = sum(math.comb(n_vertices, s) for s in range(1, max_size + 1))
    if n_edges > n_subsets:
        raise InvalidParameters(
            f"cannot draw {n_edges} distinct edges from {n_subsets} subsets"
        )
    rng = _rng(seed)
    vertices = [str(i) for i in range(1, n_vertices + 1)]
    chosen: list[frozenset[str]] = []
    seen: set[frozenset[str]] = set()
    while len(chosen) < n_edges:
        edge = frozenset(v for v in vertices if rng.random() < 0.5)
        if not edge or len(edge) > max_size or edge in seen:
            continue
        seen.add(edge)
        chosen.append(edge)
    return Hypergraph(vertices, chosen)
