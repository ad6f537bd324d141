"""Quaternion algebra arithmetic and the canonical involution."""

import random
from fractions import Fraction

import pytest

from quatwitt.errors import NotPureInvertible, NotSplit
from quatwitt.quadforms import qf, witt_equal
from quatwitt.quaternions import (
    QuatAlgebra,
    find_nilpotent,
    is_split,
    norm_forms,
    quat_arith,
    random_pure,
)

H = QuatAlgebra(-1, -1)
M2 = QuatAlgebra(1, 1)


def _rand(rng, A, h=6):
    return A.element(*(Fraction(rng.randint(-h, h)) for _ in range(4)))


def test_defining_relations():
    for A in (H, M2, QuatAlgebra(2, 7)):
        i, j = A.i(), A.j()
        assert i * i == A.one().scale(A.a)
        assert j * j == A.one().scale(A.b)
        assert j * i == (i * j).scale(-1)
        assert (i * j) * (i * j) == A.one().scale(-A.a * A.b)


def test_associativity_random():
    rng = random.Random(4)
    for A in (H, M2):
        for _ in range(60):
            x, y, z = (_rand(rng, A) for _ in range(3))
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z


def test_involution_properties():
    rng = random.Random(9)
    for A in (H, QuatAlgebra(2, 7)):
        for _ in range(40):
            x, y = _rand(rng, A), _rand(rng, A)
            assert (x * y).conj() == y.conj() * x.conj()
            assert x.conj().conj() == x
            assert x.trd() == (x + x.conj()).coords[0] * 1
            nrd = x.nrd()
            assert (x * x.conj()).coords[0] == nrd
            assert x.nrd() * y.nrd() == (x * y).nrd()


def test_pure_squares():
    rng = random.Random(13)
    for A in (H, M2):
        for _ in range(30):
            z = random_pure(A, seed=rng.randint(0, 10 ** 6))
            assert z.is_pure()
            sq = z * z
            assert sq == A.one().scale(-z.nrd())


def test_norm_forms():
    nf = norm_forms(H)
    assert witt_equal(nf["n_Q"], qf([1, 1, 1, 1]))
    assert witt_equal(nf["pure_norm"], qf([1, 1, 1]))
    nf2 = norm_forms(QuatAlgebra(2, 7))
    assert witt_equal(nf2["n_Q"], qf([1, -2, -7, 14]))


def test_is_split():
    assert not is_split(H)
    assert is_split(M2)
    assert is_split(QuatAlgebra(2, 7))
    assert is_split(QuatAlgebra(5, -1))
    assert not is_split(QuatAlgebra(-1, -7))


def test_find_nilpotent():
    for A in (M2, QuatAlgebra(2, 7), QuatAlgebra(5, -1)):
        z0 = find_nilpotent(A)
        assert not z0.is_zero()
        assert (z0 * z0).is_zero()
    with pytest.raises(NotSplit):
        find_nilpotent(H)


def test_quat_arith_helper():
    out = quat_arith(H.i(), H.j())
    assert out["product"] == H.ij()
    assert out["conj_x"] == H.i().scale(-1)
    assert out["trd_x"] == 0
    assert out["nrd_x"] == 1


def test_generic_basis_guard():
    # a = -1, b = 1 has -ab = 1 a square: i + ij is not invertible
    A = QuatAlgebra(-1, 1)
    z = A.i() + A.ij()
    assert z.is_pure() and not z.is_invertible()
    from quatwitt.hermitian import AntiHermForm

    with pytest.raises(NotPureInvertible):
        AntiHermForm((z,), A)
