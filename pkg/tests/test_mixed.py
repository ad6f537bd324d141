"""The mixed Witt ring: products, equality decision, phi."""

import random
from fractions import Fraction

import pytest

from quatwitt.errors import AlgebraMismatch
from quatwitt.mixed import (
    MixedClass,
    mixed,
    mixed_equal,
    mixed_one,
    mixed_zero,
    odd_product_closed_form,
    phi_z0,
    twisted_trace_form,
)
from quatwitt.quadforms import qf, witt_class, witt_equal, witt_zero
from quatwitt.quaternions import QuatAlgebra, find_nilpotent

H = QuatAlgebra(-1, -1)
M2 = QuatAlgebra(1, 1)


def _rand_pure(rng, A, h=6):
    while True:
        c = [rng.randint(-h, h) for _ in range(3)]
        if not any(c):
            continue
        z = A.pure(*(Fraction(v) for v in c))
        if z.is_invertible():
            return z


def _rand_mixed(rng, A):
    even = witt_class(qf([rng.choice([n for n in range(-9, 10) if n])
                          for _ in range(rng.randint(0, 2))])) \
        if rng.random() < 0.8 else witt_zero()
    odd = tuple(_rand_pure(rng, A, 4) for _ in range(rng.randint(0, 1)))
    return mixed(A, even=even, odd_entries=odd)


def test_twisted_trace_symmetric_and_matches_closed_form():
    rng = random.Random(1)
    for A in (H, M2, QuatAlgebra(2, 7)):
        for _ in range(40):
            z1, z2 = _rand_pure(rng, A), _rand_pure(rng, A)
            q = twisted_trace_form(z1, z2)
            assert witt_class(q) == odd_product_closed_form(z1, z2)


def test_odd_product_vanishes_on_orthogonal_traces():
    # Trd(i j) = 0, so <i><j> = 0
    assert odd_product_closed_form(H.i(), H.j()).is_zero()
    assert witt_class(twisted_trace_form(H.i(), H.j())).is_zero()


def test_ring_axioms_on_samples():
    rng = random.Random(2)
    for A in (H, M2):
        one = mixed_one(A)
        zero = mixed_zero(A)
        for _ in range(15):
            x, y = _rand_mixed(rng, A), _rand_mixed(rng, A)
            assert mixed_equal(x * one, x) == "equal"
            assert mixed_equal(x + zero, x) == "equal"
            assert mixed_equal(x + y, y + x) == "equal"
            assert mixed_equal(x - x, zero) == "equal"
            assert mixed_equal(x * y, y * x) == "equal"


def test_mixed_equal_detects_distinct():
    x = mixed(H, even=witt_class(qf([1])))
    y = mixed(H, even=witt_class(qf([2])))
    assert mixed_equal(x, y) == "distinct"
    z = mixed(H, odd_entries=(H.i(),))
    assert mixed_equal(x, z) == "distinct"   # odd ranks differ mod 2


def test_mixed_equal_odd_scaling():
    # <z> = <c^2 z> for rational c
    z = H.i() + H.j()
    x = mixed(H, odd_entries=(z,))
    y = mixed(H, odd_entries=(z.scale(Fraction(9, 4)),))
    assert mixed_equal(x, y) == "equal"


def test_algebra_mismatch():
    with pytest.raises(AlgebraMismatch):
        mixed(H, odd_entries=(H.i(),)) * mixed(M2, odd_entries=(M2.i(),))


def test_phi_multiplicative_split():
    rng = random.Random(5)
    for A in (M2, QuatAlgebra(2, 7)):
        z0 = find_nilpotent(A)
        for _ in range(25):
            x, y = _rand_mixed(rng, A), _rand_mixed(rng, A)
            assert phi_z0(x * y, z0) == phi_z0(x, z0) * phi_z0(y, z0)


def test_phi_restriction_to_even_is_identity():
    A = M2
    z0 = find_nilpotent(A)
    cls = witt_class(qf([3, -5]))
    assert phi_z0(mixed(A, even=cls), z0) == cls
