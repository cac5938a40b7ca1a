"""The sparse integer RREF kernel against a dense Fraction oracle."""

import random
from fractions import Fraction

import pytest

from flagcohom import _rowreduce_py
from flagcohom import linalg

from _oracles import dense_rref

try:
    from flagcohom import _rowreduce as _rowreduce_c
except ImportError:
    _rowreduce_c = None

BACKENDS = [_rowreduce_py] + ([_rowreduce_c] if _rowreduce_c else [])


def to_sparse(matrix):
    return [[(j, v) for j, v in enumerate(row) if v] for row in matrix]


def rational_rows(reduced, ncols):
    out = []
    for row in reduced:
        lead = row[0][1]
        dense = [Fraction(0)] * ncols
        for c, v in row:
            dense[c] = Fraction(v, lead)
        out.append(dense)
    return out


@pytest.mark.parametrize("kernel", BACKENDS, ids=lambda k: k.BACKEND)
def test_small_fixed_matrix(kernel):
    matrix = [
        [1, 2, 0, 3],
        [2, 4, 1, 0],
        [0, 0, 2, -12],
        [1, 2, 1, -3],
    ]
    reduced = kernel.rref(to_sparse(matrix))
    pivots = [row[0][0] for row in reduced]
    oracle_pivots, oracle_rows = dense_rref([[Fraction(v) for v in r] for r in matrix])
    assert pivots == oracle_pivots == [0, 2]
    assert rational_rows(reduced, 4) == oracle_rows


@pytest.mark.parametrize("kernel", BACKENDS, ids=lambda k: k.BACKEND)
def test_random_matrices_match_dense_oracle(kernel):
    rng = random.Random(20240817)
    for _ in range(60):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        density = rng.choice((0.3, 0.6, 0.9))
        matrix = [
            [rng.randint(-5, 5) if rng.random() < density else 0 for _ in range(ncols)]
            for _ in range(nrows)
        ]
        reduced = kernel.rref(to_sparse(matrix))
        oracle_pivots, oracle_rows = dense_rref([[Fraction(v) for v in r] for r in matrix])
        assert [row[0][0] for row in reduced] == oracle_pivots
        assert rational_rows(reduced, ncols) == oracle_rows
        # primitivity: content 1, positive leading value
        from math import gcd
        for row in reduced:
            g = 0
            for _, v in row:
                g = gcd(g, v)
            assert g == 1 and row[0][1] > 0


def test_zero_and_empty_rows():
    for kernel in BACKENDS:
        assert kernel.rref([]) == []
        assert kernel.rref([[], []]) == []
        assert kernel.rref([[(0, 2), (1, -4)]]) == [[(0, 1), (1, -2)]]


@pytest.mark.skipif(_rowreduce_c is None, reason="compiled kernel not built")
def test_backends_agree_bit_for_bit():
    rng = random.Random(7)
    for _ in range(40):
        matrix = [
            [rng.randint(-9, 9) if rng.random() < 0.5 else 0 for _ in range(10)]
            for _ in range(12)
        ]
        sparse = to_sparse(matrix)
        assert _rowreduce_py.rref(sparse) == _rowreduce_c.rref(sparse)


def test_selected_backend_is_exposed():
    assert linalg.BACKEND in ("c", "python")
    if _rowreduce_c is not None:
        assert linalg.BACKEND == "c"


def test_integer_row_clears_denominators():
    row = [(0, Fraction(1, 2)), (3, Fraction(-2, 3))]
    assert linalg.integer_row(row) == [(0, 3), (3, -4)]
    assert linalg.integer_row([]) == []
    assert linalg.integer_row([(1, Fraction(6, 4))]) == [(1, 1)]
