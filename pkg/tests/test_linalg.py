import random

from oracles import random_scalar
from qsoa.linalg import diag, echelon, identity, is_zero_matrix, matmul, nullspace, rank, zeros
from qsoa.scalar import ONE, ZERO, Scalar, q


def test_rank_nullity_random():
    rng = random.Random(13)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 4), rng.randint(1, 5)
        rows = [[random_scalar(rng, nonzero=False) if rng.random() < 0.7 else ZERO for _ in range(ncols)]
                for _ in range(nrows)]
        if rng.random() < 0.3 and nrows > 1:
            rows[-1] = [a * q + b for a, b in zip(rows[0], rows[1 % nrows])]
        basis = nullspace(rows, ncols)
        assert rank(rows, ncols) + len(basis) == ncols
        for x in basis:
            assert next(v for v in x if v) == ONE
            for row in rows:
                assert sum((a * b for a, b in zip(row, x)), ZERO) == ZERO


def test_dependent_rows():
    rows = [[ONE, q], [q, q * q]]
    assert rank(rows, 2) == 1
    assert nullspace(rows, 2) == [[ONE, -q.inverse()]]


def test_echelon_empty():
    assert echelon([[ZERO, ZERO]], 2) == ([], [])


def test_matrix_helpers():
    a = diag([q, Scalar(2)])
    assert matmul(a, identity(2)).tolist() == a.tolist()
    assert is_zero_matrix(zeros(2, 3))
    assert not is_zero_matrix(a)
