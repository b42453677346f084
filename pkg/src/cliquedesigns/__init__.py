"""Uniform random Latin squares and Sudoku designs via maximum cliques."""

__version__ = "0.1.0"

from .assembly import (
    assemble_latin,
    assemble_sudoku,
    total_design_count,
)
from .cliques import (
    CliqueSet,
    OrderedClique,
    count_maximum_cliques,
    enumerate_maximum_cliques,
    select_uniform_clique,
)
from .enumeration import (
    VertexSet,
    derangement_count,
    enumerate_derangements,
    enumerate_sudoku_derangements,
)
from .errors import DesignError
from .estimators import LatinSquareSampler, SudokuSampler
from .graph import CompatibilityGraph, build_graph, export_graph, induced_subgraph
from .gridio import is_latin_square, is_sudoku_grid
from .permutations import (
    BoxPartition,
    from_matrix,
    identity,
    is_derangement_of,
    is_disjoint,
    is_s_permutation,
    lex_compare,
    sigma0,
    to_matrix,
)
from .sampling import DesignSample, DesignSampler, sample_latin, sample_sudoku

__all__ = [
    "BoxPartition",
    "CliqueSet",
    "CompatibilityGraph",
    "DesignError",
    "DesignSample",
    "DesignSampler",
    "LatinSquareSampler",
    "OrderedClique",
    "SudokuSampler",
    "VertexSet",
    "assemble_latin",
    "assemble_sudoku",
    "build_graph",
    "count_maximum_cliques",
    "derangement_count",
    "enumerate_derangements",
    "enumerate_maximum_cliques",
    "enumerate_sudoku_derangements",
    "export_graph",
    "from_matrix",
    "identity",
    "induced_subgraph",
    "is_derangement_of",
    "is_disjoint",
    "is_latin_square",
    "is_s_permutation",
    "is_sudoku_grid",
    "lex_compare",
    "sample_latin",
    "sample_sudoku",
    "select_uniform_clique",
    "sigma0",
    "to_matrix",
    "total_design_count",
]
