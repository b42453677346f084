"""Scikit-learn style sampler estimators wrapping the clique pipeline."""

from __future__ import annotations

import numbers

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted, check_random_state

from .sampling import DesignSampler


def _derive_seed(random_state) -> int | None:
    """Map sklearn's random_state convention onto the pipeline's 64-bit seed."""
    if random_state is None:
        return None
    if isinstance(random_state, numbers.Integral):
        return int(random_state)
    rs = check_random_state(random_state)
    return int(rs.randint(0, 2**63 - 1))


class _BaseDesignSampler(BaseEstimator):
    kind: str

    def fit(self, X=None, y=None):
        """Build the disjointness graph and prepare the maximum-clique set.

        X and y are ignored; they exist for pipeline compatibility.
        """
        order = self._order()
        if not isinstance(order, numbers.Integral) or order < self._min_order():
            raise ValueError(
                f"order must be an integer >= {self._min_order()}, got {order!r}"
            )
        if self.subgraph_k is not None and self.subgraph_k < 1:
            raise ValueError(f"subgraph_k must be positive, got {self.subgraph_k}")
        self._sampler_ = DesignSampler(
            self.kind,
            int(order),
            subgraph_k=self.subgraph_k,
            seed=_derive_seed(self.random_state),
        )
        self.n_vertices_ = self._sampler_.graph.V
        self.n_edges_ = self._sampler_.graph.edge_count
        self.clique_size_ = self._sampler_.clique_size
        self.n_cliques_ = self._sampler_.clique_count
        self.uniform_ = self._sampler_.uniform
        return self

    def sample(self, n_samples: int = 1) -> np.ndarray:
        """Draw designs; returns an array of shape (n_samples, n, n)."""
        check_is_fitted(self, "_sampler_")
        return np.stack([self._sampler_.draw().grid for _ in range(n_samples)])

    def sample_traced(self, n_samples: int = 1):
        """Like :meth:`sample` but returns full DesignSample records."""
        check_is_fitted(self, "_sampler_")
        return [self._sampler_.draw() for _ in range(n_samples)]


class LatinSquareSampler(_BaseDesignSampler):
    """Uniform random Latin squares of a given order.

    ``fit()`` enumerates the derangement-disjointness graph and its maximum
    cliques; ``sample()`` draws uniformly over all Latin squares of the
    order (non-uniformly when ``subgraph_k`` restricts the graph).
    """

    kind = "latin"

    def __init__(self, order=5, subgraph_k=None, random_state=None):
        self.order = order
        self.subgraph_k = subgraph_k
        self.random_state = random_state

    def _order(self):
        return self.order

    def _min_order(self):
        return 1


class SudokuSampler(_BaseDesignSampler):
    """Uniform random Sudoku designs with box side ``p`` (order p²)."""

    kind = "sudoku"

    def __init__(self, p=2, subgraph_k=None, random_state=None):
        self.p = p
        self.subgraph_k = subgraph_k
        self.random_state = random_state

    def _order(self):
        return self.p

    def _min_order(self):
        return 2
