from fractions import Fraction
from itertools import permutations as iter_permutations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from youngquiver.config import BoundExceededError, Bounds
from youngquiver.partitions import EMPTY, Partition, partitions_of
from youngquiver.symgroup import (
    GroupAlgebraElement,
    Permutation,
    Tableau,
    all_permutations,
    canonical_tableau,
    central_idempotent,
    centralizer_order,
    character_value,
    cycle_type_class_size,
    direct_hom_dimension,
    induction_multiplicity,
    injection_bimodule,
    multiply,
    pieri_coefficient,
    specht_dimension,
    standard_tableaux,
    young_symmetrizer,
)

P = lambda *rows: Partition(tuple(rows))


def perm_strategy(max_n=6):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(
            lambda images: Permutation(tuple(images))
        )
    )


class TestPermutation:
    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 3))

    def test_composition_convention(self):
        # (a*b)(i) = a(b(i))
        a = Permutation((2, 1, 3))  # swaps 1,2
        b = Permutation((3, 2, 1))  # swaps 1,3
        assert (a * b).images == (3, 1, 2)

    def test_cycle_type(self):
        assert Permutation((2, 3, 1, 4)).cycle_type() == P(3, 1)
        assert Permutation(()).cycle_type() == EMPTY

    def test_cycle_string(self):
        assert Permutation((2, 1, 3)).to_cycle_string() == "(1 2)"
        assert Permutation((1, 2)).to_cycle_string() == "()"
        assert str(Permutation((2, 3, 1, 5, 4))) == "(1 2 3)(4 5)"

    def test_extend_fixes_new_points(self):
        assert Permutation((2, 1)).extend(4).images == (2, 1, 3, 4)

    @given(perm_strategy())
    def test_inverse(self, p):
        identity = Permutation.identity(p.n)
        assert p * p.inverse() == identity
        assert p.inverse() * p == identity

    @given(perm_strategy(max_n=5), perm_strategy(max_n=5))
    def test_sign_multiplicative(self, a, b):
        if a.n == b.n:
            assert (a * b).sign() == a.sign() * b.sign()

    @given(perm_strategy())
    def test_cycle_type_conjugation_invariant(self, p):
        for q in all_permutations(p.n)[:6]:
            assert (q * p * q.inverse()).cycle_type() == p.cycle_type()


def brute_force_standard_fillings(shape):
    """Fill cells with 1..n in every order and keep the monotone ones."""
    cells = [(r, c) for r, length in enumerate(shape.rows) for c in range(length)]
    n = len(cells)
    fillings = []
    for perm in iter_permutations(range(1, n + 1)):
        grid = {cell: value for cell, value in zip(cells, perm)}
        ok = all(
            grid[(r, c)] < grid[(r, c + 1)] for (r, c) in cells if (r, c + 1) in grid
        ) and all(
            grid[(r, c)] < grid[(r + 1, c)] for (r, c) in cells if (r + 1, c) in grid
        )
        if ok:
            fillings.append(
                tuple(
                    tuple(grid[(r, c)] for c in range(length))
                    for r, length in enumerate(shape.rows)
                )
            )
    return sorted(fillings)


class TestTableaux:
    def test_single_row_unique(self):
        assert len(standard_tableaux(P(4))) == 1

    @pytest.mark.parametrize(
        "shape,count", [(P(2, 1), 2), (P(2, 2), 2), (P(3, 2), 5), (P(2, 1, 1), 3)]
    )
    def test_counts_against_brute_force(self, shape, count):
        tableaux = standard_tableaux(shape)
        assert len(tableaux) == count
        assert sorted(t.entries for t in tableaux) == brute_force_standard_fillings(shape)
        assert all(t.is_standard for t in tableaux)

    def test_canonical_tableau(self):
        assert canonical_tableau(P(2, 1)).entries == ((1, 2), (3,))
        assert canonical_tableau(P(1, 1, 1)).entries == ((1,), (2,), (3,))
        assert canonical_tableau(P(3)).entries == ((1, 2, 3),)
        assert canonical_tableau(P(3, 2)).is_standard

    def test_bad_filling_rejected(self):
        with pytest.raises(ValueError):
            Tableau(P(2), ((1, 3),))

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            standard_tableaux(P(10))


class TestCharacters:
    def test_trivial_representation(self):
        for c in partitions_of(5):
            assert character_value(P(5), c) == 1

    def test_sign_at_transposition(self):
        assert character_value(P(1, 1), P(2)) == -1

    def test_standard_rep_of_s3(self):
        # independent oracle: the (2,1)-character equals fixed points minus 1
        for c in partitions_of(3):
            fixed = c.rows.count(1)
            assert character_value(P(2, 1), c) == fixed - 1

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            character_value(P(2), P(3))

    @pytest.mark.parametrize("n", range(7))
    def test_column_orthogonality(self, n):
        parts = partitions_of(n)
        for c1 in parts:
            for c2 in parts:
                total = sum(
                    character_value(mu, c1) * character_value(mu, c2) for mu in parts
                )
                assert total == (centralizer_order(c1) if c1 == c2 else 0)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_dimension_three_ways(self, n):
        identity_type = P(*([1] * n))
        for lam in partitions_of(n):
            by_character = character_value(lam, identity_type)
            by_hooks = specht_dimension(lam)
            assert by_character == by_hooks
            if n <= 6:
                assert by_hooks == len(standard_tableaux(lam))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_class_sizes_sum_to_group_order(self, n):
        assert sum(cycle_type_class_size(c) for c in partitions_of(n)) == factorial(n)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_row_orthogonality(self, n):
        # the other orthogonality relation: summing over classes, not characters
        for mu in partitions_of(n):
            for nu in partitions_of(n):
                total = sum(
                    cycle_type_class_size(c)
                    * character_value(mu, c)
                    * character_value(nu, c)
                    for c in partitions_of(n)
                )
                assert total == (factorial(n) if mu == nu else 0)


class TestCentralIdempotents:
    def test_degree_one(self):
        assert central_idempotent(P(1)) == GroupAlgebraElement.one(1)

    def test_s2_by_hand(self):
        half = Fraction(1, 2)
        assert central_idempotent(P(2)).terms == {
            Permutation((1, 2)): half,
            Permutation((2, 1)): half,
        }
        assert central_idempotent(P(1, 1)).terms == {
            Permutation((1, 2)): half,
            Permutation((2, 1)): -half,
        }

    def test_human_readable_form(self):
        assert str(central_idempotent(P(2))) == "1/2*() + 1/2*(1 2)"
        assert str(GroupAlgebraElement.zero(3)) == "0"

    @pytest.mark.parametrize("n", range(5))
    def test_idempotent_system(self, n):
        blocks = [central_idempotent(mu) for mu in partitions_of(n)]
        total = GroupAlgebraElement.zero(n)
        for i, e in enumerate(blocks):
            total = total + e
            assert multiply(e, e) == e
            for j, f in enumerate(blocks):
                if i != j:
                    assert multiply(e, f).is_zero()
            for g in all_permutations(n):
                g_elem = GroupAlgebraElement.from_permutation(g)
                assert multiply(e, g_elem) == multiply(g_elem, e)
        assert total == GroupAlgebraElement.one(n)

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            central_idempotent(P(7))
        # opt-in via looser bounds is allowed (not executed at degree 7 here)
        central_idempotent(P(3, 3), Bounds(max_group_degree=7))


def compose_images(a, b):
    """Independent composition oracle for frozen-term checks."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


class TestYoungSymmetrizers:
    def test_row_shape(self):
        expected = {
            Permutation((1, 2)): Fraction(1, 2),
            Permutation((2, 1)): Fraction(1, 2),
        }
        assert young_symmetrizer(canonical_tableau(P(2))).terms == expected

    def test_column_shape(self):
        expected = {
            Permutation((1, 2)): Fraction(1, 2),
            Permutation((2, 1)): -Fraction(1, 2),
        }
        assert young_symmetrizer(canonical_tableau(P(1, 1))).terms == expected

    def test_hook_shape_expansion(self):
        # (1/3)(id + (12))(id - (13)) expanded with an independent composer
        identity = (1, 2, 3)
        swap12 = (2, 1, 3)
        swap13 = (3, 2, 1)
        third = Fraction(1, 3)
        expected = {
            Permutation(identity): third,
            Permutation(swap12): third,
            Permutation(swap13): -third,
            Permutation(compose_images(swap12, swap13)): -third,
        }
        assert young_symmetrizer(canonical_tableau(P(2, 1))).terms == expected

    @pytest.mark.parametrize("n", range(1, 6))
    def test_idempotency(self, n):
        for mu in partitions_of(n):
            e = young_symmetrizer(canonical_tableau(mu))
            assert multiply(e, e) == e


class TestMultiply:
    def test_identity_neutral(self):
        x = central_idempotent(P(2, 1))
        assert multiply(GroupAlgebraElement.one(3), x) == x

    def test_transposition_squares_to_identity(self):
        swap = GroupAlgebraElement.from_permutation(Permutation((2, 1)))
        assert multiply(swap, swap) == GroupAlgebraElement.one(2)

    def test_orthogonal_idempotents(self):
        assert multiply(central_idempotent(P(2)), central_idempotent(P(1, 1))).is_zero()

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            multiply(GroupAlgebraElement.one(2), GroupAlgebraElement.one(3))

    def test_associativity_spot_check(self):
        a = central_idempotent(P(2, 1))
        b = GroupAlgebraElement.from_permutation(Permutation((2, 3, 1)))
        c = young_symmetrizer(canonical_tableau(P(2, 1)))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


class TestInjectionBimodule:
    def test_no_added_points(self):
        basis = injection_bimodule(2, 0)
        assert len(basis) == 2
        assert all(len(b.terms) == 1 for b in basis)

    def test_everything_added(self):
        (element,) = injection_bimodule(0, 3)
        assert len(element.terms) == factorial(3)
        assert all(c == 1 for c in element.terms.values())

    def test_one_into_two(self):
        basis = injection_bimodule(1, 1)
        assert len(basis) == 2  # 2!/1!

    @pytest.mark.parametrize("n,m", [(1, 2), (2, 1), (2, 2)])
    def test_size_formula(self, n, m):
        basis = injection_bimodule(n, m)
        assert len(basis) == factorial(n + m) // factorial(m)
        for element in basis:
            assert len(element.terms) == factorial(m)

    def test_coset_sums_are_representative_independent(self):
        # right-multiplying a basis element by the added-point subgroup
        # permutes its terms, so the sum is fixed
        basis = injection_bimodule(2, 2)
        swap_added = GroupAlgebraElement.from_permutation(Permutation((1, 2, 4, 3)))
        for element in basis:
            assert multiply(element, swap_added) == element


class TestDirectHomDimension:
    def test_from_empty(self):
        assert direct_hom_dimension(EMPTY, P(1)) == 1

    def test_branching_from_single_box(self):
        assert direct_hom_dimension(P(1), P(2)) == 1
        assert direct_hom_dimension(P(1), P(1, 1)) == 1

    def test_unreachable_target(self):
        assert direct_hom_dimension(P(2), P(1, 1, 1)) == 0

    def test_wrong_size_gap(self):
        with pytest.raises(ValueError):
            direct_hom_dimension(P(2), P(4))

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            direct_hom_dimension(P(5), P(6))

    @pytest.mark.parametrize("n", range(4))
    def test_matches_character_oracle(self, n):
        for mu in partitions_of(n):
            for lam in partitions_of(n + 1):
                assert direct_hom_dimension(mu, lam) == induction_multiplicity(mu, 1, lam)


class TestInductionMultiplicity:
    def test_induction_by_nothing(self):
        assert induction_multiplicity(P(3, 1), 0, P(3, 1)) == 1
        assert induction_multiplicity(P(3, 1), 0, P(2, 2)) == 0

    def test_branching(self):
        assert induction_multiplicity(P(1), 1, P(2)) == 1
        assert induction_multiplicity(P(1), 1, P(1, 1)) == 1

    def test_two_row_expansion(self):
        values = {
            P(2, 1, 1): 0,
            P(2, 2): 1,
            P(3, 1): 1,
            P(4): 1,
            P(1, 1, 1, 1): 0,
        }
        for lam, expected in values.items():
            assert induction_multiplicity(P(2), 2, lam) == expected

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            induction_multiplicity(P(2), 2, P(3))

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            induction_multiplicity(P(10), 3, P(13))

    @pytest.mark.parametrize("n,m", [(0, 1), (1, 2), (2, 2), (3, 2), (3, 3)])
    def test_agrees_with_pieri_rule(self, n, m):
        for mu in partitions_of(n):
            for lam in partitions_of(n + m):
                assert induction_multiplicity(mu, m, lam) == pieri_coefficient(mu, m, lam)


class TestPieri:
    def test_column_pair_kills(self):
        assert pieri_coefficient(P(1), 2, P(1, 1, 1)) == 0

    def test_spread_strip(self):
        assert pieri_coefficient(P(1), 2, P(2, 1)) == 1

    def test_strip_in_second_row(self):
        assert pieri_coefficient(P(2), 2, P(2, 2)) == 1

    def test_wrong_size_or_not_contained(self):
        assert pieri_coefficient(P(2), 1, P(2, 2)) == 0
        assert pieri_coefficient(P(2), 2, P(1, 1, 1, 1)) == 0
