"""Integer isometries, matrix closures, and the congruence checks."""

import random

import pytest

from gosset.isometry import (
    ClosureBudgetExceeded,
    GroupClosure,
    LatticeIsometry,
    ModularMatrix,
    closure,
    congruence_intersection_check,
    coset_space,
    det_int,
    lattice_isometry,
    long_simple_reflections,
    preserves_form,
    projective_normal_form,
    projective_order,
    reduce_mod,
    reflection_matrix,
)
from gosset.geometry import stabilizer_generators_mod3, wall_reflections_mod3
from gosset.lattice import reflect, simple_roots, vector


def _random_word_product(n, rng, length):
    mats = [reflection_matrix(a, n) for a in simple_roots(n)]
    m = LatticeIsometry.identity(n + 1)
    for _ in range(length):
        m = m @ rng.choice(mats)
    return m


def test_reflection_matrix_agrees_with_reflect():
    rng = random.Random(10)
    for n in (2, 3, 4):
        for a in simple_roots(n):
            m = reflection_matrix(a, n)
            for _ in range(20):
                v = vector(*[rng.randint(-9, 9) for _ in range(n + 1)])
                assert m.apply(v) == reflect(a, v)


def test_reflection_matrices_are_isometries_of_determinant_minus_one():
    for n in (2, 3, 4):
        for a in simple_roots(n):
            m = reflection_matrix(a, n)
            assert preserves_form(m.entries)
            assert m.det() == -1
            assert m @ m == LatticeIsometry.identity(n + 1)


def test_isometry_factory_rejects_junk():
    with pytest.raises(ValueError):
        lattice_isometry(((1, 0), (0, 1), (0, 0)))
    # A permutation moving the time axis does not preserve the form.
    with pytest.raises(ValueError):
        lattice_isometry(((0, 1, 0), (1, 0, 0), (0, 0, 1)))


def test_inverse_of_reflection_products():
    rng = random.Random(11)
    for n in (2, 3, 4):
        for _ in range(20):
            m = _random_word_product(n, rng, rng.randint(1, 10))
            assert m @ m.inverse() == LatticeIsometry.identity(n + 1)
            assert m.inverse() @ m == LatticeIsometry.identity(n + 1)


def test_det_int_on_small_matrices():
    assert det_int(((2, 0), (0, 3))) == 6
    assert det_int(((1, 2), (3, 4))) == -2
    assert det_int(((0, 1, 0), (1, 0, 0), (0, 0, 1))) == -1


def test_reduce_mod_wraps_entries():
    m = reduce_mod(LatticeIsometry.identity(3), 3)
    assert isinstance(m, ModularMatrix)
    assert m == ModularMatrix.identity(3, 3)
    neg = reduce_mod(reflection_matrix(simple_roots(2)[2], 2), 2)
    assert all(0 <= e < 2 for row in neg.entries for e in row)


def test_projective_normal_form_identifies_signs():
    m = stabilizer_generators_mod3(3)[0]
    assert projective_normal_form(m) == projective_normal_form(m.neg())


def test_stabilizer_closure_orders():
    # The vertex stabilizer injects mod 3 (checked below), so closing its
    # mod-3 image recovers the stabilizer order.
    for n, expected in ((2, 2), (3, 12), (4, 120)):
        g = closure(stabilizer_generators_mod3(n))
        assert g.order == expected


def test_long_simple_reflections_pick_norm_two_roots():
    assert len(long_simple_reflections(2)) == 1
    assert len(long_simple_reflections(3)) == 3
    assert len(long_simple_reflections(4)) == 4


def test_projective_versus_linear_closure():
    walls = tuple(wall_reflections_mod3(2, projective=False).values())
    linear = closure(walls)
    proj = closure(walls, projective=True)
    assert linear.order == 24
    assert proj.order == 24
    assert not linear.contains_minus_identity
    assert projective_order(linear) == 24


def test_closure_budget_raises():
    gens = tuple(wall_reflections_mod3(3, projective=False).values())
    with pytest.raises(ClosureBudgetExceeded):
        closure(gens, budget=100)


def test_group_membership_and_indexing():
    g = closure(stabilizer_generators_mod3(3))
    for m in g.generators:
        assert m in g
        assert g.element_at(g.index_of(m)) == m
    assert ModularMatrix.identity(4, 3) in g


def test_coset_space_against_lagrange():
    from gosset.geometry import reflection_image_mod3

    group = reflection_image_mod3(2)
    sub = stabilizer_generators_mod3(2)
    cs = coset_space(group, sub)
    assert cs.count == 12
    for cid in range(cs.count):
        rep = cs.representative(cid)
        assert cs.coset_index(rep) == cid


def test_congruence_intersection_trivial_small():
    for n, order in ((2, 2), (3, 12), (4, 120)):
        result = congruence_intersection_check(n)
        assert result.order == order
        assert result.congruent_mod2 == 1
        assert result.congruent_mod3 == 1
        assert result.trivial
