"""Maximum clique enumeration, exact counting and uniform selection.

Cliques are found by fixed-depth depth-first search over bitset candidate
intersections, visiting vertices in increasing id order so every clique is
produced exactly once as an increasing id tuple.  For design graphs the
clique size is known a priori (n-1: no family of more than n mutually
disjoint permutations of {1..n} exists), so the search starts there and
only falls back to smaller sizes when needed.
"""

from __future__ import annotations

import random
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice

from .errors import EmptyCliqueSet
from .graph import CompatibilityGraph
from .permutations import Permutation

_STORE_MAGIC = b"CLIQDSGN"
_STORE_HEADER = struct.Struct("<8sIIQ8x")  # magic, clique_size, V, count


@dataclass(frozen=True)
class OrderedClique:
    ids: tuple[int, ...]  # increasing vertex ids
    members: tuple[Permutation, ...]  # lexicographically increasing


@dataclass(frozen=True)
class CliqueSet:
    graph: CompatibilityGraph | None
    clique_size: int
    count: int
    cliques: tuple[tuple[int, ...], ...] | None  # None when not materialized
    max_size: int  # true maximum clique size of the graph


def _iter_fixed(adj, prefix, cand, need):
    if need == 0:
        yield prefix
        return
    while cand.bit_count() >= need:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        if need == 1:
            yield prefix + (v,)
        else:
            sub = cand & adj[v]
            if sub.bit_count() >= need - 1:
                yield from _iter_fixed(adj, prefix + (v,), sub, need - 1)


def _count_fixed(adj, cand, need):
    if need == 1:
        return cand.bit_count()
    total = 0
    while cand.bit_count() >= need:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        sub = cand & adj[v]
        if need == 2:
            total += sub.bit_count()
        elif sub:
            total += _count_fixed(adj, sub, need - 1)
    return total


def iter_cliques_of_size(g: CompatibilityGraph, size: int):
    """All size-cliques as increasing id tuples, in deterministic DFS order."""
    full = (1 << g.V) - 1
    return _iter_fixed(g.adjacency, (), full, size)


def _count_roots(adj, size, start, stop):
    total = 0
    for v in range(start, stop):
        cand = adj[v] & -(1 << (v + 1))  # candidates above v only
        if cand:
            total += _count_fixed(adj, cand, size - 1)
    return total


def count_cliques_of_size(g: CompatibilityGraph, size: int, workers: int = 1) -> int:
    """Exact count without materializing cliques; optionally parallel by root."""
    V = g.V
    if size == 0:
        return 1
    if size == 1:
        return V
    adj = list(g.adjacency)
    if workers <= 1:
        return _count_roots(adj, size, 0, V)
    bounds = [V * i // workers for i in range(workers + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_count_roots, adj, size, lo, hi)
            for lo, hi in zip(bounds, bounds[1:])
        ]
        return sum(f.result() for f in futures)


def _clique_exists(g: CompatibilityGraph, size: int) -> bool:
    return next(iter_cliques_of_size(g, size), None) is not None


def max_clique_size(g: CompatibilityGraph, upper: int | None = None) -> int:
    """Largest clique size, scanning downward from the disjointness bound."""
    upper = min(upper if upper is not None else g.n - 1, g.V)
    for size in range(upper, 0, -1):
        if _clique_exists(g, size):
            return size
    return 0


def enumerate_maximum_cliques(
    g: CompatibilityGraph, target_size: int | None = None
) -> CliqueSet:
    """All maximum cliques, materialized in deterministic order."""
    if target_size is not None:
        cliques = tuple(iter_cliques_of_size(g, target_size))
        if cliques:
            return CliqueSet(g, target_size, len(cliques), cliques, target_size)
        true_max = max_clique_size(g, upper=target_size - 1)
        return CliqueSet(g, target_size, 0, (), true_max)
    size = max_clique_size(g)
    cliques = tuple(iter_cliques_of_size(g, size))
    return CliqueSet(g, size, len(cliques), cliques, size)


def count_maximum_cliques(
    g: CompatibilityGraph, target_size: int | None = None, workers: int = 1
) -> int:
    """Streaming counterpart of :func:`enumerate_maximum_cliques`."""
    size = target_size if target_size is not None else max_clique_size(g)
    return count_cliques_of_size(g, size, workers=workers)


def nth_clique(g: CompatibilityGraph, size: int, index: int) -> tuple[int, ...]:
    """The index-th clique of the deterministic enumeration order."""
    clique = next(islice(iter_cliques_of_size(g, size), index, None), None)
    if clique is None:
        raise IndexError(f"clique index {index} out of range")
    return clique


def select_uniform_clique(cs: CliqueSet, seed=None) -> OrderedClique:
    """Uniform draw over the deterministic enumeration order.

    Second pass via :func:`nth_clique` when cliques were not materialized,
    so the 16.9M-clique order-7 graph never has to be stored.
    """
    if cs.count < 1:
        raise EmptyCliqueSet("no maximum cliques to select from")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    index = rng.randrange(cs.count)
    return clique_at(cs, index)


def clique_at(cs: CliqueSet, index: int) -> OrderedClique:
    if cs.cliques is not None:
        ids = cs.cliques[index]
    else:
        ids = nth_clique(cs.graph, cs.clique_size, index)
    # ids are increasing and the vertex set is lex-sorted, so members are too
    members = tuple(cs.graph.vertexset.vertices[i] for i in ids)
    return OrderedClique(ids, members)


def save_cliqueset(cs: CliqueSet, path) -> None:
    """Fixed-width binary store: 32-byte header + little-endian uint32 ids."""
    if cs.cliques is None:
        raise ValueError("cannot save a clique set that was not materialized")
    with open(path, "wb") as fh:
        fh.write(_STORE_HEADER.pack(_STORE_MAGIC, cs.clique_size, cs.graph.V, cs.count))
        for clique in cs.cliques:
            fh.write(struct.pack(f"<{cs.clique_size}I", *clique))


def load_cliqueset(path, graph: CompatibilityGraph | None = None) -> CliqueSet:
    with open(path, "rb") as fh:
        magic, size, V, count = _STORE_HEADER.unpack(fh.read(_STORE_HEADER.size))
        if magic != _STORE_MAGIC:
            raise ValueError(f"not a clique store file: {path}")
        record = struct.Struct(f"<{size}I")
        cliques = tuple(
            record.unpack(fh.read(record.size)) for _ in range(count)
        )
    return CliqueSet(graph, size, count, cliques, size)


def parse_clique_list(text: str) -> tuple[tuple[int, ...], ...]:
    """ASCII interop: one clique per line, space-separated 1-based vertex ids."""
    cliques = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cliques.append(tuple(sorted(int(tok) - 1 for tok in line.split())))
    return tuple(cliques)
