"""Grid invariant checks and the text / JSON / CSV interchange formats."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np


def latin_violation(grid) -> str | None:
    """Description of the first Latin-square violation, or None if valid."""
    g = np.asarray(grid)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        return f"grid is not square: shape {g.shape}"
    n = g.shape[0]
    symbols = set(range(1, n + 1))
    for r in range(n):
        if set(g[r].tolist()) != symbols:
            return f"row {r + 1} is not a permutation of 1..{n}"
    for c in range(n):
        if set(g[:, c].tolist()) != symbols:
            return f"column {c + 1} has a duplicate symbol"
    return None


def sudoku_violation(grid, p: int | None = None) -> str | None:
    """First Sudoku violation (Latin + box constraints), or None if valid."""
    g = np.asarray(grid)
    problem = latin_violation(g)
    if problem is not None:
        return problem
    n = g.shape[0]
    if p is None:
        p = math.isqrt(n)
    if p * p != n:
        return f"order {n} has no {p}x{p} box partition"
    symbols = set(range(1, n + 1))
    for k in range(p):
        for m in range(p):
            box = g[k * p : (k + 1) * p, m * p : (m + 1) * p]
            if set(box.ravel().tolist()) != symbols:
                return f"box ({k + 1},{m + 1}) is not a permutation of 1..{n}"
    return None


def is_latin_square(grid) -> bool:
    return latin_violation(grid) is None


def is_sudoku_grid(grid, p: int | None = None) -> bool:
    return sudoku_violation(grid, p) is None


def grid_to_text(grid) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in np.asarray(grid)) + "\n"


def grid_to_csv(grid) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in np.asarray(grid)) + "\n"


@dataclass(frozen=True)
class ParsedGrid:
    grid: np.ndarray
    kind: str | None  # declared kind, None for bare text/CSV grids
    p: int | None


def _parse_block(lines: list[str]) -> ParsedGrid:
    sep = "," if "," in lines[0] else None
    rows = [[int(tok) for tok in line.replace(",", " ").split()] for line in lines]
    return ParsedGrid(np.array(rows, dtype=np.int64), None, None)


def parse_grids(text: str) -> list[ParsedGrid]:
    """Read grids from JSON (one object per line or an array), text or CSV.

    Text/CSV grids are blank-line separated and carry no kind declaration.
    """
    stripped = text.strip()
    if not stripped:
        return []
    if stripped[0] in "[{":
        out = []
        docs = (
            json.loads(stripped)
            if stripped[0] == "["
            else [json.loads(line) for line in stripped.splitlines() if line.strip()]
        )
        for doc in docs:
            out.append(
                ParsedGrid(
                    np.array(doc["grid"], dtype=np.int64),
                    doc.get("kind"),
                    doc.get("p"),
                )
            )
        return out
    blocks: list[list[str]] = [[]]
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        if line.strip():
            blocks[-1].append(line.strip())
        elif blocks[-1]:
            blocks.append([])
    return [_parse_block(block) for block in blocks if block]
