"""Independent brute-force references and the uniformity test harness.

Nothing here reuses the clique pipeline: designs are enumerated by direct
backtracking and the chi-square p-value is computed from a self-contained
regularized incomplete gamma evaluation, so these paths can vouch for the
main ones.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .errors import OrderTooLarge, PopulationTooLarge

_MAX_POPULATION = 10_000


@dataclass(frozen=True)
class EnumerationReport:
    kind: str
    order: int
    total: int
    digest: str  # sha256 over the sorted grid serializations


def serialize_grid(grid) -> str:
    return ";".join(" ".join(str(v) for v in row) for row in np.asarray(grid).tolist())


def grid_set_digest(grids) -> str:
    payload = "\n".join(sorted(serialize_grid(g) for g in grids))
    return hashlib.sha256(payload.encode()).hexdigest()


def brute_force_latin_grids(n: int):
    """All order-n Latin squares by row-wise backtracking with column masks."""
    if n > 5:
        raise OrderTooLarge(f"brute force is limited to n <= 5, got {n}")
    out: list[tuple[tuple[int, ...], ...]] = []
    rows: list[tuple[int, ...]] = []
    col_used = [0] * n  # bitmask of symbols used per column

    def fill_row(r: int, c: int, row: list[int], row_used: int) -> None:
        if c == n:
            rows.append(tuple(row))
            place_row(r + 1)
            rows.pop()
            return
        for v in range(1, n + 1):
            bit = 1 << v
            if not (row_used & bit) and not (col_used[c] & bit):
                col_used[c] |= bit
                row[c] = v
                fill_row(r, c + 1, row, row_used | bit)
                col_used[c] &= ~bit

    def place_row(r: int) -> None:
        if r == n:
            out.append(tuple(rows))
            return
        fill_row(r, 0, [0] * n, 0)

    if n >= 1:
        place_row(0)
    return out


def brute_force_latin(n: int) -> EnumerationReport:
    grids = brute_force_latin_grids(n)
    return EnumerationReport("latin", n, len(grids), grid_set_digest(grids))


def brute_force_sudoku_grids(p: int):
    """All p²×p² Sudokus by cell-wise backtracking with row/col/box masks."""
    if p != 2:
        raise OrderTooLarge(f"brute force is limited to p = 2, got {p}")
    n = p * p
    out = []
    grid = [[0] * n for _ in range(n)]
    row_used = [0] * n
    col_used = [0] * n
    box_used = [[0] * p for _ in range(p)]

    def place(cell: int) -> None:
        if cell == n * n:
            out.append(tuple(tuple(row) for row in grid))
            return
        r, c = divmod(cell, n)
        k, m = r // p, c // p
        for v in range(1, n + 1):
            bit = 1 << v
            if (row_used[r] | col_used[c] | box_used[k][m]) & bit:
                continue
            row_used[r] |= bit
            col_used[c] |= bit
            box_used[k][m] |= bit
            grid[r][c] = v
            place(cell + 1)
            row_used[r] &= ~bit
            col_used[c] &= ~bit
            box_used[k][m] &= ~bit

    place(0)
    return out


def brute_force_sudoku(p: int = 2) -> EnumerationReport:
    grids = brute_force_sudoku_grids(p)
    return EnumerationReport("sudoku", p * p, len(grids), grid_set_digest(grids))


def _gamma_p(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x), series + continued fraction."""
    if x < 0 or a <= 0:
        raise ValueError("gamma_p requires x >= 0 and a > 0")
    if x == 0:
        return 0.0
    lg = math.lgamma(a)
    if x < a + 1:
        # series representation
        term = 1.0 / a
        total = term
        k = a
        for _ in range(10_000):
            k += 1
            term *= x / k
            total += term
            if abs(term) < abs(total) * 1e-15:
                break
        return total * math.exp(-x + a * math.log(x) - lg)
    # Lentz continued fraction for Q(a, x)
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10_000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-15:
            break
    q = math.exp(-x + a * math.log(x) - lg) * h
    return 1.0 - q


def chi_square_pvalue(statistic: float, df: int) -> float:
    """Upper-tail p-value of the chi-square distribution."""
    return max(0.0, min(1.0, 1.0 - _gamma_p(df / 2.0, statistic / 2.0)))


@dataclass(frozen=True)
class UniformityReport:
    statistic: float
    df: int
    p_value: float
    draws: int
    population: int

    def to_json_dict(self):
        return {
            "statistic": self.statistic,
            "df": self.df,
            "p_value": self.p_value,
            "draws": self.draws,
            "population": self.population,
        }


def uniformity_test(kind: str, order: int, draws: int, seed=None, sample_fn=None):
    """Pearson chi-square of sampled designs against the full population.

    ``sample_fn(draws, seed)`` must yield grids; it defaults to the clique
    pipeline.  The population comes from the brute-force enumerators, so the
    two sides stay independent.
    """
    if kind == "latin":
        population = brute_force_latin_grids(order)
    elif kind == "sudoku":
        population = brute_force_sudoku_grids(order)
    else:
        raise ValueError(f"unknown design kind: {kind!r}")
    size = len(population)
    if size > _MAX_POPULATION:
        raise PopulationTooLarge(f"population of {size} designs is too large")
    if draws < 20 * size:
        raise ValueError(f"need at least {20 * size} draws for {size} cells")
    if sample_fn is None:
        from .sampling import sample_latin, sample_sudoku

        if kind == "latin":
            sample_fn = lambda d, s: (smp.grid for smp in sample_latin(order, d, s))
        else:
            sample_fn = lambda d, s: (smp.grid for smp in sample_sudoku(order, d, s))
    counts = {serialize_grid(g): 0 for g in population}
    for grid in sample_fn(draws, seed):
        counts[serialize_grid(grid)] += 1
    expected = draws / size
    statistic = sum((c - expected) ** 2 for c in counts.values()) / expected
    df = size - 1
    return UniformityReport(statistic, df, chi_square_pvalue(statistic, df), draws, size)
