"""Eisenstein integers Z[omega] and hexaflections of the Lorentzian module.

omega is a primitive cube root of unity, so omega^2 = -1 - omega and the
ring element a + b*omega is stored as the integer pair (a, b).  Vectors have
four coordinates and carry the sesquilinear form

    <u, v> = -u_0 conj(v_0) + u_1 conj(v_1) + u_2 conj(v_2) + u_3 conj(v_3)

conjugate-linear in the second slot.  A norm-one vector e defines the
hexaflection

    h_e(l) = l - (omega^2 + 1) <l, e> e

a unitary map of order exactly six whose square has order three (a
triflection).  Note omega^2 + 1 = -omega.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EisensteinInteger:
    """a + b*omega with integer a, b and omega^2 = -1 - omega."""

    a: int
    b: int

    def __add__(self, other: "EisensteinInteger") -> "EisensteinInteger":
        return EisensteinInteger(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "EisensteinInteger") -> "EisensteinInteger":
        return EisensteinInteger(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "EisensteinInteger":
        return EisensteinInteger(-self.a, -self.b)

    def __mul__(self, other: "EisensteinInteger") -> "EisensteinInteger":
        # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInteger(a * c - b * d, a * d + b * c - b * d)

    def conj(self) -> "EisensteinInteger":
        """Complex conjugate: conj(omega) = omega^2 = -1 - omega."""
        return EisensteinInteger(self.a - self.b, -self.b)


ZERO = EisensteinInteger(0, 0)
ONE = EisensteinInteger(1, 0)
OMEGA = EisensteinInteger(0, 1)


def eis(a: int, b: int = 0) -> EisensteinInteger:
    """Shorthand constructor for a + b*omega."""
    return EisensteinInteger(a, b)


@dataclass(frozen=True)
class EisensteinVector:
    """Four-coordinate vector over Z[omega]."""

    coords: tuple[EisensteinInteger, EisensteinInteger, EisensteinInteger, EisensteinInteger]

    def __post_init__(self) -> None:
        if len(self.coords) != 4:
            raise ValueError("Eisenstein vectors have exactly 4 coordinates")

    def __add__(self, other: "EisensteinVector") -> "EisensteinVector":
        return EisensteinVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "EisensteinVector") -> "EisensteinVector":
        return EisensteinVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, k: EisensteinInteger) -> "EisensteinVector":
        return EisensteinVector(tuple(k * c for c in self.coords))


def evec(*coords: EisensteinInteger | int) -> EisensteinVector:
    """Build a vector, promoting plain integers to Eisenstein integers."""
    promoted = tuple(c if isinstance(c, EisensteinInteger) else eis(c) for c in coords)
    return EisensteinVector(promoted)


def herm(u: EisensteinVector, v: EisensteinVector) -> EisensteinInteger:
    """Sesquilinear form, signature (-,+,+,+), conjugate on the second slot."""
    s = -(u.coords[0] * v.coords[0].conj())
    for a, b in zip(u.coords[1:], v.coords[1:]):
        s = s + a * b.conj()
    return s


def hexaflection(e: EisensteinVector, lam: EisensteinVector) -> EisensteinVector:
    """Apply the order-6 unitary reflection in the norm-one vector e to lam."""
    if herm(e, e) != ONE:
        raise ValueError("hexaflection axis must have norm one")
    coeff = (OMEGA * OMEGA + ONE) * herm(lam, e)
    return lam - e.scale(coeff)
