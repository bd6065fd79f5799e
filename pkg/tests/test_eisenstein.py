"""Eisenstein integers, the hermitian form, and hexaflections."""

import cmath
import random

import pytest

from gosset.eisenstein import eis, evec, herm, hexaflection

OMEGA = eis(0, 1)
OMEGA_COMPLEX = cmath.exp(2j * cmath.pi / 3)

# All of these pair to one with themselves under the (3,1) form.
UNIT_AXES = (
    evec(0, 1, 0, 0),
    evec(0, 0, 1, 0),
    evec(0, 0, 0, 1),
    evec(1, 1, 1, 0),
    evec(1, OMEGA, 1, 0),
)


def _rand_eis(rng):
    return eis(rng.randint(-9, 9), rng.randint(-9, 9))


def _rand_vec(rng):
    return evec(*[_rand_eis(rng) for _ in range(4)])


def _to_complex(z):
    return z.a + z.b * OMEGA_COMPLEX


def test_omega_is_primitive_cube_root():
    assert OMEGA * OMEGA + OMEGA + eis(1) == eis(0)
    assert OMEGA * OMEGA * OMEGA == eis(1)
    assert OMEGA != eis(1)


def test_ring_operations_match_complex_arithmetic():
    # Cross-check exact arithmetic against floating point in C.
    rng = random.Random(2)
    for _ in range(200):
        x, y = _rand_eis(rng), _rand_eis(rng)
        for exact, approx in (
            (x + y, _to_complex(x) + _to_complex(y)),
            (x - y, _to_complex(x) - _to_complex(y)),
            (x * y, _to_complex(x) * _to_complex(y)),
        ):
            assert abs(_to_complex(exact) - approx) < 1e-9


def test_conjugation_is_ring_automorphism_of_order_two():
    rng = random.Random(3)
    for _ in range(200):
        x, y = _rand_eis(rng), _rand_eis(rng)
        assert (x * y).conj() == x.conj() * y.conj()
        assert (x + y).conj() == x.conj() + y.conj()
        assert x.conj().conj() == x
        sq = x * x.conj()
        assert sq.b == 0 and sq.a >= 0


def test_hermitian_form_signature():
    basis = [evec(*[1 if i == j else 0 for j in range(4)]) for i in range(4)]
    assert herm(basis[0], basis[0]) == eis(-1)
    for i in range(1, 4):
        assert herm(basis[i], basis[i]) == eis(1)
    for i in range(4):
        for j in range(i + 1, 4):
            assert herm(basis[i], basis[j]) == eis(0)


def test_hermitian_form_sesquilinear():
    rng = random.Random(4)
    for _ in range(100):
        u, v = _rand_vec(rng), _rand_vec(rng)
        z = _rand_eis(rng)
        assert herm(u, v) == herm(v, u).conj()
        assert herm(u.scale(z), v) == z * herm(u, v)
        assert herm(u, v.scale(z)) == z.conj() * herm(u, v)


def test_hexaflection_requires_unit_axis():
    with pytest.raises(ValueError):
        hexaflection(evec(1, 0, 0, 0), evec(0, 1, 0, 0))


def test_hexaflection_rotates_axis_by_sixth_root():
    minus_omega_sq = eis(1, 1)
    for axis in UNIT_AXES:
        assert hexaflection(axis, axis) == axis.scale(minus_omega_sq)


def test_hexaflection_fixes_orthogonal_vectors():
    axis = evec(0, 1, 0, 0)
    for coords in ((1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)):
        v = evec(*coords)
        assert herm(v, axis) == eis(0)
        assert hexaflection(axis, v) == v


def test_hexaflection_preserves_form():
    rng = random.Random(5)
    for axis in UNIT_AXES:
        for _ in range(40):
            u, v = _rand_vec(rng), _rand_vec(rng)
            assert herm(hexaflection(axis, u), hexaflection(axis, v)) == herm(u, v)


def _orbit_length(axis, v, max_power):
    w = v
    for k in range(1, max_power + 1):
        w = hexaflection(axis, w)
        if w == v:
            return k
    return 0


def test_hexaflection_has_exact_order_six():
    rng = random.Random(6)
    for axis in UNIT_AXES:
        # The axis itself realizes the full period.
        assert _orbit_length(axis, axis, 6) == 6
        for _ in range(20):
            v = _rand_vec(rng)
            assert 6 % _orbit_length(axis, v, 6) == 0


def test_squared_hexaflection_has_order_three():
    rng = random.Random(7)

    def triflect(axis, v):
        return hexaflection(axis, hexaflection(axis, v))

    for axis in UNIT_AXES:
        once = triflect(axis, axis)
        twice = triflect(axis, once)
        assert once != axis and twice != axis
        assert triflect(axis, twice) == axis
        for _ in range(20):
            v = _rand_vec(rng)
            assert triflect(axis, triflect(axis, triflect(axis, v))) == v
