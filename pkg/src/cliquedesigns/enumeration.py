"""Vertex-set enumeration: derangements and Sudoku-derangements."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations as iter_permutations
from itertools import product

from .errors import OrderTooLarge
from .permutations import (
    Permutation,
    identity,
    is_disjoint,
    sigma0,
)

# d_10 is already > 1.3M; full enumeration is desk-scale up to n=9.
DEFAULT_VERTEX_BUDGET = 250_000


@dataclass(frozen=True)
class VertexSet:
    """Lexicographically sorted vertices, all disjoint from ``base``."""

    kind: str  # "latin" | "sudoku"
    n: int
    base: Permutation
    vertices: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def derangement_count(n: int) -> int:
    """d_n via the recurrence d_n = (n-1)(d_{n-1} + d_{n-2})."""
    if n == 0:
        return 1
    prev2, prev1 = 1, 0  # d_0, d_1
    for k in range(2, n + 1):
        prev2, prev1 = prev1, (k - 1) * (prev1 + prev2)
    return prev1


def enumerate_derangements(n: int, budget: int = DEFAULT_VERTEX_BUDGET) -> VertexSet:
    """All derangements of (1..n) in lexicographic order."""
    if derangement_count(n) > budget:
        raise OrderTooLarge(
            f"d_{n} = {derangement_count(n)} exceeds the vertex budget {budget}"
        )
    out: list[Permutation] = []
    image = [0] * n
    free = [True] * (n + 1)

    def backtrack(r: int) -> None:
        if r == n:
            out.append(tuple(image))
            return
        for v in range(1, n + 1):
            if free[v] and v != r + 1:
                free[v] = False
                image[r] = v
                backtrack(r + 1)
                free[v] = True

    if n >= 1:
        backtrack(0)
    elif n == 0:
        out.append(())
    return VertexSet("latin", n, identity(n), tuple(out))


def enumerate_s_permutations(p: int) -> list[Permutation]:
    """All p!^{2p} S-permutations, generated by permuting rows within bands
    and columns within stacks of the base S-matrix."""
    base = sigma0(p)
    n = p * p
    within = list(iter_permutations(range(p)))
    seen: set[Permutation] = set()
    for row_perms in product(within, repeat=p):
        rows = [base[k * p + row_perms[k][m]] for k in range(p) for m in range(p)]
        for col_perms in product(within, repeat=p):
            colmap = [0] * n
            for m in range(p):
                for j in range(p):
                    colmap[m * p + j] = m * p + col_perms[m][j] + 1
            seen.add(tuple(colmap[v - 1] for v in rows))
    expected = math.factorial(p) ** (2 * p)
    if len(seen) != expected:
        raise RuntimeError(
            f"band/stack generator produced {len(seen)} S-permutations, "
            f"expected p!^(2p) = {expected}"
        )
    return sorted(seen)


def enumerate_sudoku_derangements(
    p: int, budget: int = DEFAULT_VERTEX_BUDGET
) -> VertexSet:
    """All S-permutations disjoint from sigma0(p), in lexicographic order."""
    total = math.factorial(p) ** (2 * p)
    if total > budget:
        raise OrderTooLarge(
            f"p!^(2p) = {total} candidate S-permutations exceed the budget {budget}"
        )
    base = sigma0(p)
    vertices = tuple(s for s in enumerate_s_permutations(p) if is_disjoint(s, base))
    return VertexSet("sudoku", p * p, base, vertices)


def dump_vertices(vs: VertexSet) -> str:
    """One permutation per line, space-separated 1-based images."""
    return "\n".join(" ".join(map(str, v)) for v in vs.vertices) + "\n"
