import random
from itertools import permutations as iter_permutations, product

import numpy as np
import pytest

from cliquedesigns import assembly
from cliquedesigns.cliques import clique_at, enumerate_maximum_cliques
from cliquedesigns.enumeration import enumerate_derangements, enumerate_sudoku_derangements
from cliquedesigns.errors import (
    NotDisjointFromIdentity,
    NotSudokuDerangement,
    WrongCliqueSize,
)
from cliquedesigns.graph import build_graph
from cliquedesigns.gridio import is_latin_square, is_sudoku_grid

PAPER_CLIQUE = ((2, 5, 4, 3, 1), (3, 4, 5, 1, 2), (4, 1, 2, 5, 3), (5, 3, 1, 2, 4))
L5_STEP3 = np.array(
    [
        [1, 2, 3, 4, 5],
        [4, 1, 5, 3, 2],
        [5, 4, 1, 2, 3],
        [3, 5, 2, 1, 4],
        [2, 3, 4, 5, 1],
    ]
)
L5_FINAL = np.array(
    [
        [3, 1, 4, 2, 5],
        [5, 2, 1, 3, 4],
        [1, 5, 2, 4, 3],
        [4, 3, 5, 1, 2],
        [2, 4, 3, 5, 1],
    ]
)


def test_assemble_latin_worked_example():
    assert (assembly.assemble_latin(PAPER_CLIQUE, 5) == L5_STEP3).all()


def test_worked_example_randomization_steps():
    relabeled = assembly.relabel_symbols(L5_STEP3, (4, 3, 2, 5))
    assert list(relabeled[0]) == [1, 4, 3, 2, 5]
    final = assembly.permute_columns(relabeled, (3, 1, 2, 4, 5))
    assert (final == L5_FINAL).all()


def test_assemble_latin_trivial_orders():
    assert (assembly.assemble_latin([], 1) == [[1]]).all()
    assert (assembly.assemble_latin([(2, 1)], 2) == [[1, 2], [2, 1]]).all()
    grid = assembly.assemble_latin([(2, 3, 1), (3, 1, 2)], 3)
    assert (grid == [[1, 2, 3], [3, 1, 2], [2, 3, 1]]).all()


def test_assemble_latin_diagonal_is_one():
    grid = assembly.assemble_latin(PAPER_CLIQUE, 5)
    assert (np.diag(grid) == 1).all()


def test_assemble_latin_errors():
    with pytest.raises(WrongCliqueSize):
        assembly.assemble_latin([(2, 1)], 3)
    with pytest.raises(NotDisjointFromIdentity):
        assembly.assemble_latin([(1, 3, 2, 4), (2, 1, 4, 3), (3, 4, 1, 2)], 4)


def test_all_56_cliques_assemble_to_latin_squares():
    g = build_graph(enumerate_derangements(5))
    cs = enumerate_maximum_cliques(g, target_size=4)
    for i in range(cs.count):
        grid = assembly.assemble_latin(clique_at(cs, i).members, 5)
        assert is_latin_square(grid)


def test_all_sudoku_p2_cliques_assemble_to_sudokus():
    g = build_graph(enumerate_sudoku_derangements(2))
    cs = enumerate_maximum_cliques(g, target_size=3)
    assert cs.count == 3
    for i in range(cs.count):
        grid = assembly.assemble_sudoku(clique_at(cs, i).members, 2)
        assert is_sudoku_grid(grid, 2)


def test_assemble_sudoku_rejects_non_s_permutation():
    # a Latin derangement of order 4 that is not an S-permutation
    with pytest.raises(NotSudokuDerangement):
        assembly.assemble_sudoku([(2, 1, 4, 3), (3, 4, 1, 2), (4, 3, 2, 1)], 2)
    with pytest.raises(WrongCliqueSize):
        assembly.assemble_sudoku([(2, 1, 4, 3)], 2)


def test_relabel_symbols_identity_and_bijection():
    grid = assembly.assemble_latin(PAPER_CLIQUE, 5)
    assert (assembly.relabel_symbols(grid, (2, 3, 4, 5)) == grid).all()
    relabels = {
        assembly.relabel_symbols(grid, sigma).tobytes()
        for sigma in iter_permutations(range(2, 6))
    }
    assert len(relabels) == 24


def test_permute_columns_properties():
    grid = assembly.assemble_latin(PAPER_CLIQUE, 5)
    assert (assembly.permute_columns(grid, (1, 2, 3, 4, 5)) == grid).all()
    shuffled = assembly.permute_columns(grid, (3, 1, 2, 4, 5))
    for r in range(5):
        assert sorted(shuffled[r]) == sorted(grid[r])


def test_sudoku_geometry_identity_and_16_distinct():
    g = build_graph(enumerate_sudoku_derangements(2))
    cs = enumerate_maximum_cliques(g, target_size=3)
    base = assembly.assemble_sudoku(clique_at(cs, 0).members, 2)
    ident = ((0, 1), (0, 1))
    assert (assembly.apply_sudoku_geometry(base, 2, ident, ident) == base).all()
    perms = list(iter_permutations(range(2)))
    grids = set()
    for choice in product(perms, repeat=4):
        moved = assembly.apply_sudoku_geometry(base, 2, choice[:2], choice[2:])
        assert is_sudoku_grid(moved, 2)
        grids.add(moved.tobytes())
    assert len(grids) == 16


def test_sudoku_geometry_preserves_box_multisets():
    g = build_graph(enumerate_sudoku_derangements(2))
    cs = enumerate_maximum_cliques(g, target_size=3)
    base = assembly.assemble_sudoku(clique_at(cs, 1).members, 2)
    moved = assembly.apply_sudoku_geometry(base, 2, ((1, 0), (0, 1)), ((0, 1), (1, 0)))
    for k in range(2):
        for m in range(2):
            a = sorted(base[2 * k : 2 * k + 2, 2 * m : 2 * m + 2].ravel())
            b = sorted(moved[2 * k : 2 * k + 2, 2 * m : 2 * m + 2].ravel())
            assert a == b


def test_randomized_wrappers_reproducible():
    grid = assembly.assemble_latin(PAPER_CLIQUE, 5)
    a = assembly.randomize_symbols(grid, seed=3)
    b = assembly.randomize_symbols(grid, seed=3)
    assert (a == b).all()
    assert is_latin_square(assembly.randomize_columns_latin(a, seed=4))
    rng = random.Random(5)
    g = build_graph(enumerate_sudoku_derangements(2))
    cs = enumerate_maximum_cliques(g, target_size=3)
    base = assembly.assemble_sudoku(clique_at(cs, 2).members, 2)
    assert is_sudoku_grid(assembly.randomize_sudoku_geometry(base, 2, rng), 2)


def test_total_design_count():
    assert assembly.total_design_count("latin", 7, 16942080) == 61479419904000
    assert assembly.total_design_count("latin", 5, 56) == 161280
    assert assembly.total_design_count("sudoku", 4, 3) == 288
    with pytest.raises(ValueError):
        assembly.total_design_count("sudoku", 5, 1)
    with pytest.raises(ValueError):
        assembly.total_design_count("magic", 4, 1)
