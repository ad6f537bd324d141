"""Forms over Q(t): residues, the specialization oracle, generic splitting."""

import random
from fractions import Fraction as F

import pytest

from quatwitt import polys as P
from quatwitt.errors import UnsupportedResidueField
from quatwitt.fields import Place
from quatwitt.funcfield import (
    conic_parametrize,
    conic_w0_places,
    ff_entry,
    ff_form,
    good_points,
    kernel_generator,
    kt_witt_equal,
    omega_bar,
    psi_split,
    residue,
    residue2_vanishes,
    w0_membership,
)
from quatwitt.mixed import mixed
from quatwitt.polys import RationalFunction
from quatwitt.quadforms import qf, witt_class, witt_equal
from quatwitt.quaternions import QuatAlgebra

T = RationalFunction(P.poly([F(0), F(1)]))
PLACE_T = Place("poly", pi=P.poly([F(0), F(1)]))
PLACE_T1 = Place("poly", pi=P.poly([F(-1), F(1)]))
INF = Place("infinite")


def test_ff_entry_normalization():
    e = ff_entry(T * T * 12)     # 12 t^2 ~ 3 up to squares
    assert e.unit == 3
    assert e.factors == ()
    e2 = ff_entry(T * 8)
    assert e2.unit == 2
    assert [P.poly_str(f) for f, _ in e2.factors] == ["t"]
    # separate factorization of numerator and denominator
    e3 = ff_entry(RationalFunction(P.poly([F(1), F(0), F(1)]),
                                   P.poly([F(0), F(1)])))
    assert e3.unit == 1
    assert len(e3.factors) == 2


def test_residue_frozen_example():
    q = ff_form([T, 1])
    out = residue(q, PLACE_T)
    assert out.even == witt_class(qf([1]))    # from the unit entry <1>
    assert out.odd == witt_class(qf([1]))     # cofactor of <t>
    out_inf = residue(q, INF)
    # v_inf(t) = -1 odd: <t> contributes to the second residue
    assert out_inf.odd == witt_class(qf([1]))
    assert out_inf.even == witt_class(qf([1]))


def test_residue_additivity_and_uniformizer():
    rng = random.Random(3)
    pis = [P.poly([F(0), F(1)]), P.poly([F(-1), F(1)]), P.poly([F(1), F(1)])]

    def rand_form():
        entries = []
        for _ in range(rng.randint(1, 3)):
            val = RationalFunction(P.constant(F(rng.choice(
                [1, -1, 2, 3, -5, 7]))))
            for piv in pis:
                if rng.random() < 0.5:
                    val = val * RationalFunction(piv)
            entries.append(val)
        return ff_form(entries)

    for _ in range(60):
        q1, q2 = rand_form(), rand_form()
        v = Place("poly", pi=pis[rng.randrange(3)])
        assert residue(q1.perp(q2), v) == residue(q1, v) + residue(q2, v)
        # first residue does not depend on the uniformizer
        alt = RationalFunction(v.pi) * 5
        assert residue(q1, v).even == residue(q1, v, uniformizer=alt).even


def test_residue_degree2_unsupported():
    q = ff_form([RationalFunction(P.poly([F(1), F(0), F(1)]))])
    with pytest.raises(UnsupportedResidueField):
        residue(q, Place("poly", pi=P.poly([F(1), F(0), F(1)])))
    # but vanishing of the second residue is still decidable
    sq = q.perp(q.neg())
    assert residue2_vanishes(sq, Place("poly", pi=P.poly([F(1), F(0), F(1)])))


def test_kt_witt_equal_and_specialization():
    q1 = ff_form([1, T, -3])
    pad = ff_form([T + 1, (T + 1) * -1])
    assert kt_witt_equal(q1, q1.perp(pad))
    assert not kt_witt_equal(q1, q1.perp(ff_form([5])))   # dims differ mod 2
    assert not kt_witt_equal(ff_form([1]), ff_form([3]))
    for c in good_points(q1.perp(q1), 5):
        assert witt_equal(q1.specialize(c), q1.specialize(c))


def test_conic_parametrization_identity():
    for a, b in [(1, 1), (2, 7), (5, -1)]:
        A = QuatAlgebra(a, b)
        conic = conic_parametrize(A)
        x, y = conic.x_t, conic.y_t
        lhs = x * x * (-a) + y * y * (-b)
        assert lhs == RationalFunction.from_const(F(-a * b))
        w = omega_bar(A, conic)
        assert (w * w).is_zero()


def test_psi_frozen_identity():
    """Psi(<ij>) = <2><<(ij)^2>> over a split algebra."""
    for a, b in [(1, 1), (2, 7)]:
        A = QuatAlgebra(a, b)
        conic = conic_parametrize(A)
        img = psi_split(mixed(A, odd_entries=(A.ij(),)), conic)
        ij_sq = -a * b
        expected = psi_split(
            mixed(A, even=witt_class(
                qf([2, -2 * ij_sq]))), conic)
        assert kt_witt_equal(img, expected)


def test_psi_kernel():
    for a, b in [(1, 1), (2, 7)]:
        A = QuatAlgebra(a, b)
        conic = conic_parametrize(A)
        from quatwitt.invariants import n_q_mixed
        assert kt_witt_equal(psi_split(n_q_mixed(A), conic), ff_form([]))
        gen = kernel_generator(A)
        assert kt_witt_equal(psi_split(gen, conic), ff_form([]))


def test_psi_images_unramified():
    rng = random.Random(9)
    A = QuatAlgebra(1, 1)
    conic = conic_parametrize(A)
    for _ in range(15):
        c = [rng.randint(-4, 4) for _ in range(3)]
        if not any(c):
            continue
        z = A.pure(*(F(v) for v in c))
        if not z.is_invertible():
            continue
        img = psi_split(mixed(A, odd_entries=(z,)), conic)
        assert w0_membership(img, conic_w0_places(img, conic))
