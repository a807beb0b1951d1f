"""Exact integer algebra: symplectic form, transvections, lattice meets."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypnorms.homalg import (
    COHOMOLOGY_ACTION,
    GROWTH_RATE,
    INVARIANT_BLOCK,
    MONODROMY,
    SYMPLECTIC_FORM,
    TWIST_WORD,
    FbarPower,
    IntMat,
    Lattice,
    fbar_power,
    lattice_intersection,
    load_twist_classes,
    mv_generator,
    mv_intersection,
    symplectic_check,
    transvection,
    twist_word_matrix,
)

E1 = (1, 0, 0, 0)
E3 = (0, 0, 1, 0)
E4 = (0, 0, 0, 1)


def naive_power(m: IntMat, k: int) -> IntMat:
    """Oracle: plain repeated multiplication, no exponentiation tricks."""
    out = IntMat.identity(m.n)
    for _ in range(k):
        out = out @ m
    return out


def primitive_vectors():
    return (
        st.lists(st.integers(-5, 5), min_size=4, max_size=4)
        .filter(lambda v: any(v))
        .map(lambda v: tuple(x // math.gcd(*v) for x in v))
    )


class TestIntMat:
    def test_identity_and_matmul(self):
        eye = IntMat.identity(4)
        assert eye @ MONODROMY == MONODROMY
        assert MONODROMY @ eye == MONODROMY

    def test_transpose_involution(self):
        assert COHOMOLOGY_ACTION.transpose() == MONODROMY

    def test_power_matches_naive_oracle(self):
        for k in range(12):
            assert INVARIANT_BLOCK.power(k) == naive_power(INVARIANT_BLOCK, k)
            assert MONODROMY.power(k) == naive_power(MONODROMY, k)

    def test_vec(self):
        assert COHOMOLOGY_ACTION.vec(E1) == (3, 0, 1, 0)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            IntMat(((1, 2),))
        with pytest.raises(ValueError):
            IntMat(())

    def test_rejects_inexact_entries(self):
        with pytest.raises(TypeError):
            IntMat(((1.0, 0), (0, 1)))
        with pytest.raises(TypeError):
            IntMat(((True, 0), (0, 1)))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            MONODROMY @ INVARIANT_BLOCK
        with pytest.raises(ValueError):
            MONODROMY.vec((1, 0))

    def test_negative_power(self):
        with pytest.raises(ValueError):
            MONODROMY.power(-1)


class TestSymplecticCheck:
    def test_monodromy_is_symplectic(self):
        assert symplectic_check(MONODROMY, SYMPLECTIC_FORM)

    def test_identity_is_symplectic(self):
        assert symplectic_check(IntMat.identity(4), SYMPLECTIC_FORM)

    def test_perturbed_monodromy_fails(self):
        rows = [list(r) for r in MONODROMY.rows]
        rows[0][0] += 1
        assert not symplectic_check(IntMat(rows), SYMPLECTIC_FORM)

    def test_perturbation_sweep(self):
        # one of the sixteen +1 perturbations happens to stay symplectic
        # (the group is large); pin the survivor so the sweep is exact.
        survivors = []
        for i in range(4):
            for j in range(4):
                rows = [list(r) for r in MONODROMY.rows]
                rows[i][j] += 1
                if symplectic_check(IntMat(rows), SYMPLECTIC_FORM):
                    survivors.append((i, j))
        assert survivors == [(3, 0)]

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            symplectic_check(INVARIANT_BLOCK, SYMPLECTIC_FORM)


class TestTransvection:
    def test_plus_minus_compose_to_identity(self):
        gamma = (1, 0, -1, 0)
        t_plus = transvection(gamma, 1)
        t_minus = transvection(gamma, -1)
        assert t_plus @ t_minus == IntMat.identity(4)

    def test_even_in_gamma(self):
        gamma = (2, 1, 0, -1)
        neg = tuple(-x for x in gamma)
        assert transvection(gamma, 1) == transvection(neg, 1)

    @given(primitive_vectors(), st.sampled_from((1, -1)))
    @settings(max_examples=150)
    def test_always_symplectic(self, gamma, sign):
        assert symplectic_check(transvection(gamma, sign), SYMPLECTIC_FORM)

    def test_rejects_zero_vector(self):
        with pytest.raises(ValueError):
            transvection((0, 0, 0, 0), 1)

    def test_rejects_imprimitive_vector(self):
        with pytest.raises(ValueError):
            transvection((2, 0, 2, 0), 1)

    def test_rejects_bad_sign(self):
        with pytest.raises(ValueError):
            transvection(E1, 2)

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            transvection((1, 0), 1)

    def test_word_composes_to_monodromy(self):
        assert twist_word_matrix() == MONODROMY

    def test_word_with_explicit_classes(self):
        classes = load_twist_classes()
        assert set(classes) == {"a", "b", "c", "d", "e"}
        assert all(len(v) == 4 for v in classes.values())
        assert twist_word_matrix(classes) == MONODROMY
        assert len(TWIST_WORD) == 7


class TestFbarPower:
    def test_zeroth_power_is_identity(self):
        assert fbar_power(0) == FbarPower(1, 0, 0, 1)

    def test_first_power(self):
        assert fbar_power(1) == FbarPower(3, -1, 1, 0)

    def test_third_power_against_naive_oracle(self):
        m = naive_power(INVARIANT_BLOCK, 3)
        assert fbar_power(3) == FbarPower(*m.rows[0], *m.rows[1])
        assert (fbar_power(3).a, fbar_power(3).c) == (21, 8)

    def test_matches_naive_oracle_along_range(self):
        for n in range(41):
            m = naive_power(INVARIANT_BLOCK, n)
            assert fbar_power(n) == FbarPower(*m.rows[0], *m.rows[1])

    def test_three_term_recurrence_to_200(self):
        seq = [fbar_power(n) for n in range(201)]
        for n in range(1, 200):
            assert seq[n + 1].a == 3 * seq[n].a - seq[n - 1].a
            assert seq[n + 1].c == 3 * seq[n].c - seq[n - 1].c

    def test_unimodular_and_coprime_to_200(self):
        for n in range(201):
            p = fbar_power(n)
            assert p.a * p.d - p.b * p.c == 1
            assert math.gcd(p.a, p.c) == 1

    def test_entries_stay_exact_at_200(self):
        assert len(str(fbar_power(200).a)) == 84

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            fbar_power(-1)


class TestLattice:
    def test_hermite_reduction(self):
        lat = Lattice(((1, 5, 0, 0), (0, 3, 0, 0)))
        assert lat.basis == ((1, 2, 0, 0), (0, 3, 0, 0))

    def test_generator_order_irrelevant(self):
        a = Lattice(((0, 0, 1, 0), (1, 0, 0, 0)))
        b = Lattice((E1, E3))
        assert a == b

    def test_dependent_generators_collapse(self):
        lat = Lattice(((1, 0, 0, 0), (2, 0, 0, 0), (3, 0, 0, 0)))
        assert lat.rank == 1
        assert lat.basis == (E1,)

    def test_negated_generators_same_lattice(self):
        assert Lattice(((-1, 0, 0, 0),)) == Lattice((E1,))

    @given(
        st.lists(
            st.lists(st.integers(-9, 9), min_size=4, max_size=4),
            min_size=1,
            max_size=3,
        ),
        st.lists(st.integers(-4, 4), min_size=3, max_size=3),
    )
    @settings(max_examples=120)
    def test_adding_a_combination_changes_nothing(self, vecs, coeffs):
        extra = tuple(
            sum(c * v[j] for c, v in zip(coeffs, vecs)) for j in range(4)
        )
        assert Lattice(vecs + [extra], dim=4) == Lattice(vecs, dim=4)

    def test_canonical_form_is_stable(self):
        lat = Lattice(((3, 1, 4, 1), (2, 7, 1, 8), (1, 1, 2, 3)))
        assert Lattice(lat.basis, dim=4) == lat

    def test_empty_needs_dim(self):
        assert Lattice((), dim=4).rank == 0
        with pytest.raises(ValueError):
            Lattice(())

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(ValueError):
            Lattice(((1, 0), (1, 0, 0)))

    def test_inexact_entries_rejected(self):
        with pytest.raises(TypeError):
            Lattice(((1.5, 0, 0, 0),))

    def test_contains(self):
        lat = Lattice((E1, (0, 0, 2, 0)))
        assert lat.contains((5, 0, 4, 0))
        assert not lat.contains((0, 0, 1, 0))  # odd multiple of e3 excluded
        assert not lat.contains((0, 1, 0, 0))
        assert lat.contains((0, 0, 0, 0))
        with pytest.raises(ValueError):
            lat.contains((1, 0))

    def test_zero_lattice_contains_only_zero(self):
        zero = Lattice((), dim=4)
        assert zero.contains((0, 0, 0, 0))
        assert not zero.contains(E1)


class TestLatticeIntersection:
    def test_coordinate_planes(self):
        meet = lattice_intersection(Lattice((E1, E3)), Lattice((E1, E4)))
        assert meet == Lattice((E1,))

    def test_self_intersection(self):
        for vecs in ((E1, E3), ((2, 1, 0, 0), (0, 0, 3, 1))):
            lat = Lattice(vecs)
            assert lattice_intersection(lat, lat) == lat

    def test_commutative(self):
        a = Lattice(((1, 2, 0, 0), (0, 0, 1, 1)))
        b = Lattice(((1, 0, 0, 0), (0, 2, 0, 2)))
        assert lattice_intersection(a, b) == lattice_intersection(b, a)

    def test_scaled_sublattice(self):
        fine = Lattice((E1,))
        coarse = Lattice(((3, 0, 0, 0),))
        assert lattice_intersection(fine, coarse) == coarse

    def test_zero_lattice_cases(self):
        zero = Lattice((), dim=4)
        assert lattice_intersection(zero, Lattice((E1,))) == zero
        assert lattice_intersection(Lattice((E1,)), zero).rank == 0

    def test_disjoint_lines(self):
        meet = lattice_intersection(Lattice((E1,)), Lattice((E3,)))
        assert meet.rank == 0

    def test_against_small_coefficient_search(self):
        # independent oracle: enumerate small integer combinations of the
        # pushforward basis, keep those landing in the invariant plane, and
        # demand they generate exactly the computed intersection.
        plane = Lattice((E1, E3))
        for n in range(4):
            fn = COHOMOLOGY_ACTION.power(n)
            w1, w2 = fn.vec(E1), fn.vec(E4)
            pushed = Lattice((w1, w2))
            meet = lattice_intersection(plane, pushed)
            for vec in meet.basis:
                assert plane.contains(vec)
                assert pushed.contains(vec)
            matches = []
            for x in range(-40, 41):
                for y in range(-40, 41):
                    v = tuple(x * a + y * b for a, b in zip(w1, w2))
                    if any(v) and v[1] == 0 and v[3] == 0:
                        matches.append(v)
            assert matches
            assert Lattice(matches) == meet

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            lattice_intersection(Lattice((E1,)), Lattice(((1, 0),)))


class TestMvGenerator:
    def test_n_zero(self):
        assert mv_generator(0) == E1

    def test_n_one(self):
        assert mv_generator(1) == (3, 0, 1, 0)

    def test_n_two_from_power_oracle(self):
        m = naive_power(INVARIANT_BLOCK, 2)
        assert mv_generator(2) == (m.rows[0][0], 0, m.rows[1][0], 0)
        assert mv_generator(2) == (8, 0, 3, 0)

    def test_generates_intersection_through_60(self):
        for n in range(61):
            phi = mv_generator(n)  # re-asserts generation internally
            meet = mv_intersection(n)
            assert meet.rank == 1
            assert meet.basis == (phi,)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            mv_generator(-1)

    @pytest.mark.xfail(
        strict=True,
        reason=(
            "the plain n-th root converges at 1/n speed: the leading "
            "coefficient K in a_n = K*lambda^n + O(lambda^-n) is "
            "(3 - 1/lambda)/(lambda - 1/lambda) ~ 1.1708, so "
            "a_60**(1/60) = lambda * K**(1/60) sits ~6.9e-3 above lambda "
            "and no n <= 200 gets within 1e-6; the companion test pins the "
            "fast-converging consecutive ratio instead"
        ),
    )
    def test_nth_root_growth_within_1e6_at_60(self):
        a60 = fbar_power(60).a
        assert abs(math.exp(math.log(a60) / 60) - GROWTH_RATE) <= 1e-6

    def test_growth_rate_pins(self):
        a60, a61 = fbar_power(60).a, fbar_power(61).a
        assert a61 / a60 == pytest.approx(GROWTH_RATE, rel=1e-12)
        root = math.exp(math.log(a60) / 60)
        assert root == pytest.approx(2.62492431089795, rel=1e-9)
        assert abs(root - GROWTH_RATE) < 7e-3


class TestInvariantPlane:
    def test_action_preserves_plane(self):
        plane = Lattice((E1, E3))
        for v in (E1, E3):
            assert plane.contains(COHOMOLOGY_ACTION.vec(v))

    def test_columns_vanish_off_plane(self):
        f = COHOMOLOGY_ACTION.rows
        for col in (0, 2):
            assert f[1][col] == 0 and f[3][col] == 0

    def test_restriction_matches_invariant_block(self):
        # read the block out of the big matrix in the (e1, e3) sub-basis
        f = COHOMOLOGY_ACTION.rows
        block = IntMat(((f[0][0], f[0][2]), (f[2][0], f[2][2])))
        assert block == INVARIANT_BLOCK
