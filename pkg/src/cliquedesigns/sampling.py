"""End-to-end sampling pipeline: graph -> clique draw -> randomized grid.

All randomness comes from one seedable PRNG (``random.Random``, i.e. the
Mersenne Twister) and the sub-draws happen in a pinned order so that traces
replay identically: subgraph vertex selection (if any) at construction,
then per design the clique index, the symbol permutation, and finally the
column permutation (Latin) or the band row-permutations followed by the
stack column-permutations (Sudoku).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import assembly
from .cliques import (
    CliqueSet,
    clique_at,
    count_cliques_of_size,
    enumerate_maximum_cliques,
)
from .enumeration import enumerate_derangements, enumerate_sudoku_derangements
from .errors import DesignError
from .graph import build_graph, induced_subgraph

# above this many cliques, selection switches to count + two-pass indexing
STORE_LIMIT = 200_000


@dataclass(frozen=True)
class DesignSample:
    kind: str
    n: int
    p: int | None
    grid: np.ndarray
    seed: int | None
    uniform: bool
    trace: dict[str, Any] = field(default_factory=dict)

    def to_json_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"kind": self.kind, "n": self.n}
        if self.p is not None:
            doc["p"] = self.p
        doc.update(
            grid=self.grid.tolist(),
            seed=self.seed,
            uniform=self.uniform,
            trace=self.trace,
        )
        return doc


class DesignSampler:
    """Reusable sampler: builds the graph once, then draws designs."""

    def __init__(
        self,
        kind: str,
        order: int,
        subgraph_k: int | None = None,
        seed: int | None = None,
    ):
        if kind not in ("latin", "sudoku"):
            raise DesignError(f"unknown design kind: {kind!r}")
        self.kind = kind
        self.seed = seed
        self.rng = random.Random(seed)
        if kind == "latin":
            self.p = None
            self.n = order
            vs = enumerate_derangements(order)
        else:
            self.p = order
            self.n = order * order
            vs = enumerate_sudoku_derangements(order)
        self.graph = build_graph(vs)
        self.subgraph_k = subgraph_k
        self.subgraph_seed = None
        self.selected_ids = None
        if subgraph_k is not None:
            self.subgraph_seed = self.rng.getrandbits(64)
            sample, self.graph = induced_subgraph(
                self.graph, subgraph_k, self.subgraph_seed
            )
            self.selected_ids = sample.selected_ids
        self.uniform = subgraph_k is None
        self.clique_size = self.n - 1
        self._prepare_cliques()

    def _prepare_cliques(self) -> None:
        count = count_cliques_of_size(self.graph, self.clique_size)
        if count == 0:
            assert self.subgraph_k is not None  # full design graphs always have one
            raise DesignError(
                f"the {self.subgraph_k}-vertex subgraph has no clique of size "
                f"{self.clique_size}; retry with a larger k or another seed"
            )
        if count <= STORE_LIMIT:
            self.cliques = enumerate_maximum_cliques(self.graph, self.clique_size)
        else:
            self.cliques = CliqueSet(
                self.graph, self.clique_size, count, None, self.clique_size
            )

    @property
    def clique_count(self) -> int:
        return self.cliques.count

    def draw(self) -> DesignSample:
        index = self.rng.randrange(self.clique_count)
        clique = clique_at(self.cliques, index)
        sigma = assembly.random_symbol_permutation(self.n, self.rng)
        trace: dict[str, Any] = {
            "clique_index": index,
            "clique_ids": list(clique.ids),
            "symbol_perm": list(sigma),
        }
        if self.subgraph_k is not None:
            trace["subgraph_k"] = self.subgraph_k
            trace["subgraph_seed"] = self.subgraph_seed
        if self.kind == "latin":
            grid = assembly.assemble_latin(clique.members, self.n)
            grid = assembly.relabel_symbols(grid, sigma)
            gamma = assembly.random_column_permutation(self.n, self.rng)
            grid = assembly.permute_columns(grid, gamma)
            trace["column_perm"] = list(gamma)
        else:
            grid = assembly.assemble_sudoku(clique.members, self.p)
            grid = assembly.relabel_symbols(grid, sigma)
            band_row_perms, stack_col_perms = assembly.random_geometry(self.p, self.rng)
            grid = assembly.apply_sudoku_geometry(
                grid, self.p, band_row_perms, stack_col_perms
            )
            trace["band_row_perms"] = [list(q) for q in band_row_perms]
            trace["stack_col_perms"] = [list(q) for q in stack_col_perms]
        return DesignSample(
            self.kind, self.n, self.p, grid, self.seed, self.uniform, trace
        )


def sample_latin(
    n: int, count: int = 1, seed: int | None = None, subgraph_k: int | None = None
) -> list[DesignSample]:
    sampler = DesignSampler("latin", n, subgraph_k=subgraph_k, seed=seed)
    return [sampler.draw() for _ in range(count)]


def sample_sudoku(
    p: int, count: int = 1, seed: int | None = None, subgraph_k: int | None = None
) -> list[DesignSample]:
    sampler = DesignSampler("sudoku", p, subgraph_k=subgraph_k, seed=seed)
    return [sampler.draw() for _ in range(count)]


def replay_trace(sampler: DesignSampler, trace: dict[str, Any]) -> np.ndarray:
    """Rebuild the grid recorded by a trace; must match the original exactly."""
    clique = clique_at(sampler.cliques, trace["clique_index"])
    if sampler.kind == "latin":
        grid = assembly.assemble_latin(clique.members, sampler.n)
        grid = assembly.relabel_symbols(grid, trace["symbol_perm"])
        return assembly.permute_columns(grid, trace["column_perm"])
    grid = assembly.assemble_sudoku(clique.members, sampler.p)
    grid = assembly.relabel_symbols(grid, trace["symbol_perm"])
    return assembly.apply_sudoku_geometry(
        grid, sampler.p, trace["band_row_perms"], trace["stack_col_perms"]
    )
