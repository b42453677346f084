"""Permutations, derangement tests, box partitions and S-permutations.

Permutations are plain tuples of 1-based images: ``pi[r]`` is the image of
row ``r`` (0-based index, 1-based value).  Matrices are materialized on
demand only; everything else works on the one-line form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidOrder, NotAPermutationMatrix, OrderMismatch

Permutation = tuple[int, ...]


def validate_permutation(image) -> Permutation:
    """Return ``image`` as a tuple, checking it is a bijection of {1..n}."""
    pi = tuple(int(v) for v in image)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise InvalidOrder(f"not a permutation of 1..{len(pi)}: {pi}")
    return pi


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def to_matrix(pi: Permutation) -> np.ndarray:
    """Permutation matrix M with M[r][c] = 1 iff c = pi[r] (1-based values)."""
    n = len(pi)
    m = np.zeros((n, n), dtype=np.int64)
    m[np.arange(n), np.asarray(pi) - 1] = 1
    return m


def from_matrix(matrix) -> Permutation:
    """Inverse of :func:`to_matrix`; multiplies by the column vector (1..n)."""
    m = np.asarray(matrix)
    if (
        m.ndim != 2
        or m.shape[0] != m.shape[1]
        or not np.isin(m, (0, 1)).all()
        or (m.sum(axis=0) != 1).any()
        or (m.sum(axis=1) != 1).any()
    ):
        raise NotAPermutationMatrix("expected one 1 per row and per column")
    return tuple(int(v) for v in m @ np.arange(1, m.shape[0] + 1))


def _check_same_order(a: Permutation, b: Permutation) -> None:
    if len(a) != len(b):
        raise OrderMismatch(f"orders differ: {len(a)} vs {len(b)}")


def is_disjoint(a: Permutation, b: Permutation) -> bool:
    """True iff a and b disagree at every position."""
    _check_same_order(a, b)
    return all(x != y for x, y in zip(a, b))


def is_derangement_of(a: Permutation, base: Permutation) -> bool:
    """Derangement in the classical sense when ``base`` is the identity."""
    return is_disjoint(a, base)


def lex_compare(a: Permutation, b: Permutation) -> int:
    """-1, 0 or 1 according to the lexicographic order of the images."""
    _check_same_order(a, b)
    return (a > b) - (a < b)


@dataclass(frozen=True)
class BoxPartition:
    """The p×p box structure of an order-p² grid (0-based row/column maps)."""

    p: int

    def __post_init__(self):
        if self.p < 1:
            raise InvalidOrder(f"box side must be positive, got {self.p}")

    @property
    def n(self) -> int:
        return self.p * self.p

    @classmethod
    def for_order(cls, n: int) -> "BoxPartition":
        p = math.isqrt(n)
        if p * p != n:
            raise InvalidOrder(f"order {n} is not a perfect square")
        return cls(p)

    def band(self, r: int) -> int:
        return r // self.p

    def stack(self, c: int) -> int:
        return c // self.p


def is_s_permutation(pi: Permutation, part: BoxPartition) -> bool:
    """True iff the matrix of pi has exactly one 1 in every box."""
    if len(pi) != part.n:
        raise OrderMismatch(f"permutation order {len(pi)} != partition order {part.n}")
    p = part.p
    seen = [[0] * p for _ in range(p)]
    for r, v in enumerate(pi):
        seen[part.band(r)][part.stack(v - 1)] += 1
    return all(count == 1 for row in seen for count in row)


def sigma0(p: int) -> Permutation:
    """Canonical base S-permutation playing the identity's role.

    The 1 of box (k, m) sits at within-box position (m, k), i.e. global row
    k*p+m maps to global column m*p+k (0-based).  For p=2 this is (1,3,2,4).
    """
    if p < 2:
        raise InvalidOrder(f"box side must be at least 2, got {p}")
    image = [0] * (p * p)
    for k in range(p):
        for m in range(p):
            image[k * p + m] = m * p + k + 1
    return tuple(image)
