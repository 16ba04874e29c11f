from fractions import Fraction
from random import Random

from hochschild.fields import GF, QQ
from hochschild.linalg import (
    linear_system,
    nullspace_of_columns,
    rank_of_columns,
)


def cols_from_rows(rows):
    ncols = len(rows[0]) if rows else 0
    cols = []
    for j in range(ncols):
        col = {}
        for i, row in enumerate(rows):
            if row[j]:
                col[i] = row[j]
        cols.append(col)
    return cols


def test_rank_small():
    cols = cols_from_rows([[1, 2, 3],
                           [2, 4, 6],
                           [0, 1, 1]])
    assert rank_of_columns(QQ, 3, cols) == 2
    assert rank_of_columns(GF(5), 3, cols) == 2
    assert rank_of_columns(QQ, 2, cols_from_rows([[0, 0], [0, 0]])) == 0


def test_solve_exact():
    cols = cols_from_rows([[1, 1],
                           [0, 2],
                           [1, 0]])
    sys = linear_system(QQ, 3)
    for i, c in enumerate(cols):
        assert sys.add_column(c, i) is None
    sol = sys.solve({0: Fraction(3), 1: Fraction(4), 2: Fraction(1)})
    assert sol == {0: Fraction(1), 1: Fraction(2)}
    assert sys.solve({0: Fraction(1)}) is None  # outside the span


def test_dependent_column_combination():
    sys = linear_system(QQ, 2)
    assert sys.add_column({0: 1, 1: 1}, "a") is None
    assert sys.add_column({0: 1}, "b") is None
    combo = sys.add_column({0: 5, 1: 2}, "c")
    assert combo == {"a": Fraction(2), "b": Fraction(3)}


def test_nullspace():
    cols = cols_from_rows([[1, 2, 1],
                           [2, 4, 2]])
    kers = nullspace_of_columns(QQ, 2, cols)
    assert len(kers) == 2
    for ker in kers:
        acc = {}
        for j, c in ker.items():
            for i, v in cols[j].items():
                acc[i] = acc.get(i, Fraction(0)) + c * v
        assert all(v == 0 for v in acc.values())


def test_random_solve_consistency():
    # build random matrices, multiply a known x, solve and compare A*x
    rng = Random(3)
    for field in (QQ, GF(7)):
        for trial in range(40):
            nrows, ncols = rng.randint(1, 7), rng.randint(1, 7)
            rows = [[field.from_int(rng.randint(-4, 4)) for _ in range(ncols)]
                    for _ in range(nrows)]
            cols = cols_from_rows(rows)
            x = [field.from_int(rng.randint(-3, 3)) for _ in range(ncols)]
            b = {}
            for j, col in enumerate(cols):
                for i, v in col.items():
                    b[i] = field.add(b.get(i, field.zero), field.mul(v, x[j]))
            b = {i: v for i, v in b.items() if not field.is_zero(v)}
            sys = linear_system(field, nrows)
            for j, col in enumerate(cols):
                sys.add_column(col, j)
            sol = sys.solve(b)
            assert sol is not None
            # A * sol must reproduce b exactly
            chk = {}
            for j, c in sol.items():
                for i, v in cols[j].items():
                    chk[i] = field.add(chk.get(i, field.zero), field.mul(v, c))
            chk = {i: v for i, v in chk.items() if not field.is_zero(v)}
            assert chk == b


def test_rank_matches_dense_oracle():
    # brute-force row reduction over QQ as an independent rank oracle
    def dense_rank(rows):
        rows = [list(map(Fraction, r)) for r in rows]
        rank, col = 0, 0
        ncols = len(rows[0]) if rows else 0
        while rank < len(rows) and col < ncols:
            piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
            if piv is None:
                col += 1
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for i in range(len(rows)):
                if i != rank and rows[i][col]:
                    f = rows[i][col] / rows[rank][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
            rank += 1
            col += 1
        return rank

    rng = Random(4)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-3, 3) for _ in range(ncols)] for _ in range(nrows)]
        assert rank_of_columns(QQ, nrows, cols_from_rows(rows)) == dense_rank(rows)


def test_deterministic_solution():
    cols = cols_from_rows([[1, 1, 0],
                           [0, 0, 0]])
    sys = linear_system(QQ, 2)
    for i, c in enumerate(cols):
        sys.add_column(c, i)
    # minimal-pivot convention: free columns stay unused
    assert sys.solve({0: Fraction(2)}) == {0: Fraction(2)}
