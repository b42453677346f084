"""Disjointness graphs over derangement vertex sets.

Adjacency rows are Python ints used as bitsets: bit j of ``adjacency[i]``
is set iff vertices i and j are disjoint permutations.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from .enumeration import VertexSet
from .errors import InvalidK, MemoryBudgetExceeded

MAX_DENSE_VERTICES = 20_000
_BUDGET_ENV = "CLIQUEDESIGNS_MAX_VERTICES"


def vertex_budget() -> int:
    return int(os.environ.get(_BUDGET_ENV, MAX_DENSE_VERTICES))


@dataclass(frozen=True)
class CompatibilityGraph:
    vertexset: VertexSet
    adjacency: tuple[int, ...]
    edge_count: int

    @property
    def V(self) -> int:
        return len(self.adjacency)

    @property
    def n(self) -> int:
        return self.vertexset.n


@dataclass(frozen=True)
class SubgraphSample:
    parent: CompatibilityGraph
    k: int
    selected_ids: tuple[int, ...]
    seed: int | None
    uniform_flag: bool = False  # subgraph sampling never yields uniform designs


def build_graph(vs: VertexSet, budget: int | None = None) -> CompatibilityGraph:
    """Dense bitset graph over all pairs of vertices.

    Edges come from per-position value bitmasks: two permutations clash iff
    they share a value at some position, so a vertex's neighbourhood is the
    complement of the union of its positions' value masks.
    """
    V = len(vs.vertices)
    limit = budget if budget is not None else vertex_budget()
    if V > limit:
        raise MemoryBudgetExceeded(
            f"{V} vertices exceed the dense-graph budget {limit}; "
            "use induced_subgraph on a smaller vertex sample"
        )
    n = vs.n
    # value_mask[r][v-1]: bitset of vertices whose image at position r is v
    value_mask = [[0] * n for _ in range(n)]
    for i, pi in enumerate(vs.vertices):
        bit = 1 << i
        for r, v in enumerate(pi):
            value_mask[r][v - 1] |= bit
    full = (1 << V) - 1
    adjacency = []
    for i, pi in enumerate(vs.vertices):
        clash = 1 << i
        for r, v in enumerate(pi):
            clash |= value_mask[r][v - 1]
        adjacency.append(full & ~clash)
    edge_count = sum(row.bit_count() for row in adjacency) // 2
    return CompatibilityGraph(vs, tuple(adjacency), edge_count)


def induced_subgraph(
    g: CompatibilityGraph, k: int, seed: int | None = None
) -> tuple[SubgraphSample, CompatibilityGraph]:
    """Uniform k-subset of vertex ids (partial Fisher-Yates) + induced graph."""
    V = g.V
    if not 1 <= k <= V:
        raise InvalidK(f"k must be in [1, {V}], got {k}")
    rng = random.Random(seed)
    ids = list(range(V))
    for i in range(k):
        j = rng.randrange(i, V)
        ids[i], ids[j] = ids[j], ids[i]
    selected = tuple(sorted(ids[:k]))
    sub_vs = VertexSet(
        g.vertexset.kind,
        g.vertexset.n,
        g.vertexset.base,
        tuple(g.vertexset.vertices[i] for i in selected),
    )
    sample = SubgraphSample(g, k, selected, seed)
    return sample, build_graph(sub_vs)


def export_graph(g: CompatibilityGraph, format: str = "dimacs") -> str:
    """Serialize to DIMACS ASCII, a 0-based edge list, or DOT."""
    fmt = format.lower()
    if fmt == "dimacs":
        lines = [f"p edge {g.V} {g.edge_count}"]
        for i, j in iter_edges(g):
            lines.append(f"e {i + 1} {j + 1}")
    elif fmt in ("edgelist", "edge_list"):
        lines = [f"{i} {j}" for i, j in iter_edges(g)]
    elif fmt == "dot":
        lines = ["graph G {"]
        lines.extend(f"  {i};" for i in range(g.V))
        lines.extend(f"  {i} -- {j};" for i, j in iter_edges(g))
        lines.append("}")
    else:
        raise ValueError(f"unknown graph format: {format!r}")
    return "\n".join(lines) + "\n"


def iter_edges(g: CompatibilityGraph):
    """All edges (i, j) with i < j, in increasing order."""
    for i, row in enumerate(g.adjacency):
        higher = row >> (i + 1)
        j = i + 1
        while higher:
            step = (higher & -higher).bit_length() - 1
            j += step
            yield i, j
            higher >>= step + 1
            j += 1


def parse_edge_list(text: str) -> list[tuple[int, int]]:
    """Read back the 0-based edge list format."""
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        i, j = map(int, line.split())
        edges.append((i, j))
    return edges
