"""Turn ordered cliques into grids and apply the randomization steps.

A clique of n-1 mutually disjoint derangements, together with the base
permutation (identity for Latin squares, the canonical S-permutation for
Sudokus), decomposes a grid into n disjoint permutation matrices: the base
carries symbol 1 and the k-th clique member carries symbol k+1.
"""

from __future__ import annotations

import math
import random

import numpy as np

from .errors import (
    NotDisjointFromIdentity,
    NotSudokuDerangement,
    WrongCliqueSize,
)
from .permutations import (
    BoxPartition,
    Permutation,
    identity,
    is_disjoint,
    is_s_permutation,
    sigma0,
)


def _place(grid: np.ndarray, pi: Permutation, symbol: int) -> None:
    for r, v in enumerate(pi):
        grid[r, v - 1] = symbol


def assemble_latin(clique, n: int) -> np.ndarray:
    """Grid with symbol 1 on the diagonal and symbol k+1 on clique[k-1]."""
    members = tuple(clique)
    if len(members) != n - 1:
        raise WrongCliqueSize(f"need {n - 1} members for order {n}, got {len(members)}")
    base = identity(n)
    for pi in members:
        if not is_disjoint(pi, base):
            raise NotDisjointFromIdentity(f"{pi} fixes a point")
    grid = np.zeros((n, n), dtype=np.int64)
    _place(grid, base, 1)
    for symbol, pi in enumerate(members, start=2):
        _place(grid, pi, symbol)
    return grid


def assemble_sudoku(clique, p: int) -> np.ndarray:
    """Like assemble_latin but with the base S-permutation carrying symbol 1."""
    n = p * p
    members = tuple(clique)
    if len(members) != n - 1:
        raise WrongCliqueSize(f"need {n - 1} members for order {n}, got {len(members)}")
    base = sigma0(p)
    part = BoxPartition(p)
    for pi in members:
        if not (is_s_permutation(pi, part) and is_disjoint(pi, base)):
            raise NotSudokuDerangement(f"{pi} is not an S-permutation disjoint from the base")
    grid = np.zeros((n, n), dtype=np.int64)
    _place(grid, base, 1)
    for symbol, pi in enumerate(members, start=2):
        _place(grid, pi, symbol)
    return grid


def relabel_symbols(grid: np.ndarray, sigma) -> np.ndarray:
    """Map symbol k to sigma[k-2] for k = 2..n; symbol 1 stays put."""
    n = grid.shape[0]
    table = np.arange(n + 1)
    table[2:] = np.asarray(sigma)
    return table[grid]


def permute_columns(grid: np.ndarray, gamma) -> np.ndarray:
    """Output column c is input column gamma[c] (1-based gamma)."""
    return grid[:, np.asarray(gamma) - 1]


def apply_sudoku_geometry(grid: np.ndarray, p: int, band_row_perms, stack_col_perms):
    """Permute rows within each band and columns within each stack.

    ``band_row_perms[k]`` and ``stack_col_perms[m]`` are 0-based permutations
    of range(p); there are p!^(2p) distinct choices in total.
    """
    n = p * p
    rows = [k * p + band_row_perms[k][m] for k in range(p) for m in range(p)]
    cols = [m * p + stack_col_perms[m][j] for m in range(p) for j in range(p)]
    return grid[np.ix_(rows, cols)]


def random_symbol_permutation(n: int, rng: random.Random) -> tuple[int, ...]:
    """Uniform permutation of (2..n), Fisher-Yates via the pinned PRNG."""
    sigma = list(range(2, n + 1))
    rng.shuffle(sigma)
    return tuple(sigma)


def random_column_permutation(n: int, rng: random.Random) -> tuple[int, ...]:
    gamma = list(range(1, n + 1))
    rng.shuffle(gamma)
    return tuple(gamma)


def random_geometry(p: int, rng: random.Random):
    """p band row-perms then p stack col-perms, drawn in that fixed order."""
    band_row_perms = []
    for _ in range(p):
        perm = list(range(p))
        rng.shuffle(perm)
        band_row_perms.append(tuple(perm))
    stack_col_perms = []
    for _ in range(p):
        perm = list(range(p))
        rng.shuffle(perm)
        stack_col_perms.append(tuple(perm))
    return tuple(band_row_perms), tuple(stack_col_perms)


def randomize_symbols(grid: np.ndarray, seed=None) -> np.ndarray:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return relabel_symbols(grid, random_symbol_permutation(grid.shape[0], rng))


def randomize_columns_latin(grid: np.ndarray, seed=None) -> np.ndarray:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return permute_columns(grid, random_column_permutation(grid.shape[0], rng))


def randomize_sudoku_geometry(grid: np.ndarray, p: int, seed=None) -> np.ndarray:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    band_row_perms, stack_col_perms = random_geometry(p, rng)
    return apply_sudoku_geometry(grid, p, band_row_perms, stack_col_perms)


def total_design_count(kind: str, n: int, base_clique_count: int) -> int:
    """Total designs of order n from the reduced-class (clique) count."""
    if kind == "latin":
        return math.factorial(n) * math.factorial(n - 1) * base_clique_count
    if kind == "sudoku":
        p = math.isqrt(n)
        if p * p != n:
            raise ValueError(f"sudoku order must be a perfect square, got {n}")
        return math.factorial(n - 1) * math.factorial(p) ** (2 * p) * base_clique_count
    raise ValueError(f"unknown design kind: {kind!r}")
