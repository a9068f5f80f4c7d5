from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from youngquiver.exactlinalg import (
    RationalMatrix,
    kernel_basis,
    kernel_dim,
    multiply,
    rank,
    row_space_basis,
)


def gaussian_rank(rows):
    """Independent oracle: plain Gaussian elimination over Fraction."""
    work = [[Fraction(v) for v in row] for row in rows]
    n_rows = len(work)
    n_cols = len(work[0]) if n_rows else 0
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if work[i][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(r + 1, n_rows):
            if work[i][col]:
                factor = work[i][col] / work[r][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        r += 1
    return r


def schoolbook_product(a_rows, b_rows):
    n, k = len(a_rows), len(b_rows[0]) if b_rows else 0
    return [
        [sum(a_rows[i][t] * b_rows[t][j] for t in range(len(b_rows))) for j in range(k)]
        for i in range(n)
    ]


small_entries = st.integers(min_value=-9, max_value=9)


@st.composite
def matrices(draw, max_dim=6):
    n_rows = draw(st.integers(min_value=1, max_value=max_dim))
    n_cols = draw(st.integers(min_value=1, max_value=max_dim))
    rows = draw(
        st.lists(
            st.lists(small_entries, min_size=n_cols, max_size=n_cols),
            min_size=n_rows,
            max_size=n_rows,
        )
    )
    return rows


class TestRank:
    def test_identity(self):
        assert rank(RationalMatrix.identity(4)) == 4

    def test_zero_matrix(self):
        assert rank(RationalMatrix(3, 5, {})) == 0

    def test_proportional_rows(self):
        assert rank(RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6]])) == 1

    def test_fractional_entries(self):
        m = RationalMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
        assert rank(m) == gaussian_rank(m.to_dense())

    def test_empty_shapes(self):
        assert rank(RationalMatrix(0, 3, {})) == 0
        assert rank(RationalMatrix(3, 0, {})) == 0

    @given(matrices())
    @settings(max_examples=200)
    def test_matches_gaussian_oracle(self, rows):
        assert rank(RationalMatrix.from_rows(rows)) == gaussian_rank(rows)

    def test_larger_seeded_matrices_match_oracle(self):
        import random

        rng = random.Random("bareiss-vs-gauss")
        for trial in range(20):
            n_rows = rng.randint(8, 14)
            n_cols = rng.randint(8, 14)
            rows = [
                [rng.randint(-99, 99) if rng.random() < 0.7 else 0 for _ in range(n_cols)]
                for _ in range(n_rows)
            ]
            # plant some dependent rows to exercise rank deficiency
            if n_rows >= 3:
                rows[-1] = [2 * a - b for a, b in zip(rows[0], rows[1])]
            assert rank(RationalMatrix.from_rows(rows)) == gaussian_rank(rows)

    @given(matrices())
    def test_transpose_invariant(self, rows):
        m = RationalMatrix.from_rows(rows)
        assert rank(m) == rank(m.transpose())

    @given(matrices(), st.randoms(use_true_random=False))
    def test_permutation_invariant(self, rows, rng):
        m = RationalMatrix.from_rows(rows)
        shuffled_rows = rows[:]
        rng.shuffle(shuffled_rows)
        cols = list(range(len(rows[0])))
        rng.shuffle(cols)
        permuted = [[row[c] for c in cols] for row in shuffled_rows]
        assert rank(RationalMatrix.from_rows(permuted)) == rank(m)

    @given(matrices(max_dim=5), matrices(max_dim=5))
    def test_product_rank_bound(self, a_rows, b_rows):
        # reshape b to be composable with a
        inner = len(a_rows[0])
        b_square = [(b_rows[i % len(b_rows)] * inner)[:inner] for i in range(inner)]
        a = RationalMatrix.from_rows(a_rows)
        b = RationalMatrix.from_rows(b_square)
        assert rank(multiply(a, b)) <= min(rank(a), rank(b))


class TestKernel:
    def test_identity_has_trivial_kernel(self):
        assert kernel_dim(RationalMatrix.identity(3)) == 0

    def test_single_row(self):
        assert kernel_dim(RationalMatrix.from_rows([[1, 1]])) == 1

    @given(matrices())
    def test_rank_nullity(self, rows):
        m = RationalMatrix.from_rows(rows)
        assert rank(m) + kernel_dim(m) == m.n_cols

    @given(matrices())
    def test_kernel_basis_vectors_annihilate(self, rows):
        m = RationalMatrix.from_rows(rows)
        basis = kernel_basis(m)
        assert len(basis) == kernel_dim(m)
        for vec in basis:
            column = RationalMatrix.from_rows([[v] for v in vec])
            assert multiply(m, column).is_zero()

    def test_kernel_of_empty_relation_matrix_is_everything(self):
        basis = kernel_basis(RationalMatrix(0, 3, {}))
        assert len(basis) == 3


class TestMultiply:
    def test_identity_neutral(self):
        a = RationalMatrix.from_rows([[1, 2], [3, 4]])
        assert multiply(a, RationalMatrix.identity(2)) == a

    def test_cancellation_in_miniature(self):
        a = RationalMatrix.from_rows([[1, 1]])
        b = RationalMatrix.from_rows([[1], [-1]])
        assert multiply(a, b).is_zero()

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            multiply(RationalMatrix.identity(2), RationalMatrix.identity(3))

    @given(matrices(max_dim=5), matrices(max_dim=5))
    def test_matches_schoolbook(self, a_rows, b_rows):
        inner = len(a_rows[0])
        b_fit = [(b_rows[i % len(b_rows)] * inner)[:inner] for i in range(inner)]
        product = multiply(
            RationalMatrix.from_rows(a_rows), RationalMatrix.from_rows(b_fit)
        )
        assert product.to_dense() == schoolbook_product(a_rows, b_fit)


class TestRowSpace:
    def test_all_ones_row(self):
        basis = row_space_basis(RationalMatrix.from_rows([[1, 1]]))
        assert basis == [[1, 1]]

    @given(matrices())
    def test_dimension_matches_rank(self, rows):
        m = RationalMatrix.from_rows(rows)
        assert len(row_space_basis(m)) == rank(m)


class TestHygiene:
    def test_no_stored_zeros(self):
        m = RationalMatrix.from_rows([[0, 1], [0, 0]])
        assert set(m.entries) == {(0, 1)}

    def test_out_of_range_entry_rejected(self):
        with pytest.raises(ValueError):
            RationalMatrix(1, 1, {(2, 0): 1})

    def test_integer_fractions_stored_as_ints(self):
        m = RationalMatrix(1, 1, {(0, 0): Fraction(4, 2)})
        assert isinstance(m.entry(0, 0), int)

    def test_text_dump(self):
        dump = RationalMatrix.from_rows([[1, 0], [0, -1]]).to_text()
        assert dump.splitlines()[0] == "2 2 2"
