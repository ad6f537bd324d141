"""Quaternion algebras (a,b | k) with the canonical involution.

The basis (1, i, j, ij) is fixed globally: i^2 = a, j^2 = b, ji = -ij.
Coordinates may be Fractions (base field Q) or RationalFunctions (scalar
extension to Q(t)); the arithmetic is written against plain operators so
both work.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import (
    AlgebraMismatch,
    GenericBasisUnavailable,
    NotSplit,
    SearchBoundExceeded,
    UnsupportedField,
    ZeroArgument,
)
from .fields import QQ, FieldSpec, square_class
from .quadforms import QuadForm, is_isotropic, qf


@dataclass(frozen=True)
class QuatAlgebra:
    """Q = (a, b | k)."""

    a: Fraction
    b: Fraction
    field: FieldSpec = QQ

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a == 0 or self.b == 0:
            raise ZeroArgument("quaternion algebra parameters must be nonzero")

    def require_generic_basis(self):
        """The generic-splitting construction needs (ij)^2 = -ab to be a
        non-square of k."""
        if self.field.kind == "Q":
            if square_class(-self.a * self.b).is_one():
                raise GenericBasisUnavailable(
                    "(ij)^2 is a square; pick another quaternionic basis"
                )
            return
        raise UnsupportedField("generic basis check implemented over Q")

    def one(self) -> "Quaternion":
        return Quaternion((Fraction(1), Fraction(0), Fraction(0), Fraction(0)), self)

    def i(self) -> "Quaternion":
        return Quaternion((Fraction(0), Fraction(1), Fraction(0), Fraction(0)), self)

    def j(self) -> "Quaternion":
        return Quaternion((Fraction(0), Fraction(0), Fraction(1), Fraction(0)), self)

    def ij(self) -> "Quaternion":
        return Quaternion((Fraction(0), Fraction(0), Fraction(0), Fraction(1)), self)

    def pure(self, c1, c2, c3) -> "Quaternion":
        return Quaternion((Fraction(0), c1, c2, c3), self)

    def element(self, c0, c1, c2, c3) -> "Quaternion":
        return Quaternion((c0, c1, c2, c3), self)

    def __repr__(self):
        return f"({self.a},{self.b}|{self.field!r})"


@dataclass(frozen=True)
class Quaternion:
    """Element c0 + c1 i + c2 j + c3 ij."""

    coords: Tuple
    algebra: QuatAlgebra

    def _check(self, other: "Quaternion"):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("operands from different algebras")

    def __add__(self, other: "Quaternion") -> "Quaternion":
        self._check(other)
        return Quaternion(
            tuple(x + y for x, y in zip(self.coords, other.coords)), self.algebra
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(tuple(-x for x in self.coords), self.algebra)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return self + (-other)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        self._check(other)
        a, b = self.algebra.a, self.algebra.b
        x0, x1, x2, x3 = self.coords
        y0, y1, y2, y3 = other.coords
        # multiplication table for (1, i, j, ij) with ji = -ij
        c0 = x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3
        c1 = x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2
        c2 = x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1
        c3 = x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1
        return Quaternion((c0, c1, c2, c3), self.algebra)

    def scale(self, c) -> "Quaternion":
        return Quaternion(tuple(c * x for x in self.coords), self.algebra)

    def conj(self) -> "Quaternion":
        """Canonical involution gamma(x) = Trd(x) - x."""
        c0, c1, c2, c3 = self.coords
        return Quaternion((c0, -c1, -c2, -c3), self.algebra)

    def trd(self):
        return 2 * self.coords[0]

    def nrd(self):
        a, b = self.algebra.a, self.algebra.b
        c0, c1, c2, c3 = self.coords
        return c0 * c0 - a * c1 * c1 - b * c2 * c2 + a * b * c3 * c3

    def is_zero(self) -> bool:
        return all(not x for x in self.coords)

    def is_pure(self) -> bool:
        return not self.coords[0]

    def is_invertible(self) -> bool:
        return bool(self.nrd())

    def __repr__(self):
        return f"Quat{tuple(str(c) for c in self.coords)}"


def quat_arith(x: Quaternion, y: Quaternion):
    """Product, conjugate, reduced trace and norm of x (paired with y)."""
    return {
        "product": x * y,
        "conj_x": x.conj(),
        "trd_x": x.trd(),
        "nrd_x": x.nrd(),
    }


def norm_forms(A: QuatAlgebra):
    """The norm form <1,-a,-b,ab> and the pure norm form <-a,-b,ab>."""
    if A.field.kind != "Q":
        raise UnsupportedField("norm forms as diagonal forms need k = Q")
    a, b = A.a, A.b
    return {
        "n_Q": qf([1, -a, -b, a * b]),
        "pure_norm": qf([-a, -b, a * b]),
    }


def is_split(A: QuatAlgebra) -> bool:
    """Split iff the norm form is isotropic; over F_p always split."""
    if A.field.kind == "Fp":
        return True
    if A.field.kind != "Q":
        raise UnsupportedField("split detection over Q and F_p only")
    return is_isotropic(norm_forms(A)["n_Q"])


def find_nilpotent(A: QuatAlgebra, height_bound: int = 40) -> Quaternion:
    """Nonzero pure z0 with z0^2 = 0, by lexicographic height search on the
    pure norm form; the result is verified by squaring."""
    if not is_split(A):
        raise NotSplit(f"{A!r} is a division algebra")
    a, b = A.a, A.b
    for h in range(1, height_bound + 1):
        for c1, c2, c3 in itertools.product(range(-h, h + 1), repeat=3):
            if max(abs(c1), abs(c2), abs(c3)) != h:
                continue
            if c1 == 0 and c2 == 0 and c3 == 0:
                continue
            if -a * c1 * c1 - b * c2 * c2 + a * b * c3 * c3 == 0:
                z0 = A.pure(Fraction(c1), Fraction(c2), Fraction(c3))
                assert (z0 * z0).is_zero()
                return z0
    raise SearchBoundExceeded(f"no nilpotent of height <= {height_bound}")


def random_pure(A: QuatAlgebra, seed: int, height_bound: int = 10) -> Quaternion:
    """Deterministic-given-seed invertible pure quaternion with integer
    coordinates of absolute value <= height_bound."""
    rng = random.Random(seed)
    while True:
        c = [rng.randint(-height_bound, height_bound) for _ in range(3)]
        if not any(c):
            continue
        z = A.pure(Fraction(c[0]), Fraction(c[1]), Fraction(c[2]))
        if z.is_invertible():
            return z
