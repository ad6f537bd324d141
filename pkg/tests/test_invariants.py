"""Lambda operations and the module of formal invariants."""

import random
from fractions import Fraction
from math import comb

from quatwitt.hermitian import AntiHermForm
from quatwitt.invariants import (
    LambdaInvariant,
    chi,
    eval_invariant,
    int_multiple,
    invariant_equal,
    is_constant_invariant,
    lambda_all,
    lambda_basis_invariant,
    lambda_herm,
    n_q_class,
    n_q_mixed,
    nq_membership,
    versal_sample_check,
)
from quatwitt.mixed import mixed, mixed_equal, mixed_one, mixed_zero
from quatwitt.quadforms import qf, witt_class
from quatwitt.quaternions import QuatAlgebra

H = QuatAlgebra(-1, -1)
M2 = QuatAlgebra(1, 1)


def _rand_pure(rng, A, h=5):
    while True:
        c = [rng.randint(-h, h) for _ in range(3)]
        if not any(c):
            continue
        z = A.pure(*(Fraction(v) for v in c))
        if z.is_invertible():
            return z


def test_lambda_rank1():
    """1 + <z> t + <Nrd z> t^2, nothing beyond degree 2."""
    rng = random.Random(0)
    for A in (H, M2):
        for _ in range(25):
            z = _rand_pure(rng, A)
            h = AntiHermForm((z,), A)
            lam = lambda_all(h)
            assert len(lam) == 3
            assert mixed_equal(lam[0], mixed_one(A)) == "equal"
            assert lam[1].odd.diag == (z,)
            assert lam[2].even == witt_class(qf([z.nrd()]))
            assert lam[2].odd.rank == 0


def test_lambda_grading_parity():
    """Even-degree coefficients are even classes, odd-degree ones odd."""
    rng = random.Random(1)
    h = AntiHermForm(tuple(_rand_pure(rng, H) for _ in range(3)), H)
    for d, lam in enumerate(lambda_all(h)):
        if d % 2 == 0:
            assert lam.odd.rank == 0
        else:
            assert lam.even.is_zero() or lam.odd.rank % 2 == 1


def test_lambda_sum_formula_rank2():
    """lambda^d(<z1> + <z2>) = sum over i + j = d of products."""
    rng = random.Random(2)
    for A in (H, M2):
        z1, z2 = _rand_pure(rng, A), _rand_pure(rng, A)
        h = AntiHermForm((z1, z2), A)
        l1 = lambda_all(AntiHermForm((z1,), A))
        l2 = lambda_all(AntiHermForm((z2,), A))
        lam = lambda_all(h)
        for d in range(5):
            acc = mixed_zero(A)
            for i in range(max(0, d - 2), min(d, 2) + 1):
                acc = acc + l1[i] * l2[d - i]
            # even slices compare exactly; odd ones via the semi-decision
            if d % 2 == 0:
                assert lam[d].even == acc.even
            assert mixed_equal(lam[d], acc) != "distinct"


def test_chi_binomials():
    A = H
    coeffs = [mixed_zero(A) for _ in range(7)]
    for i in range(4):
        coeffs[2 * i] = mixed_one(A)
    out = chi(3, coeffs)
    assert out.even == witt_class(qf([1] * 8))  # sum C(3,i) = 8 copies of <1>


def test_nq_membership():
    nq = n_q_class(H)
    assert nq_membership(nq, H) == "member"
    assert nq_membership(witt_class(qf([]).perp(qf([1, 1, 1, 1]))), H) == "member"
    assert nq_membership(witt_class(qf([1])), H) == "nonmember"   # odd dim
    assert nq_membership(witt_class(qf([1, 1])), H) == "nonmember"
    # over a split algebra only 0 is a multiple
    assert nq_membership(witt_class(qf([1, -1])), M2) == "member"
    assert nq_membership(witt_class(qf([1, 1])), M2) == "nonmember"


def test_constant_invariant():
    A = H
    nqm = n_q_mixed(A)
    r = 1
    coeffs = [mixed(A, even=witt_class(qf([3, -7]))),
              mixed_zero(A),
              nqm * mixed(A, even=witt_class(qf([5])))]
    alpha = LambdaInvariant(r, tuple(coeffs))
    res = is_constant_invariant(alpha)
    assert res.status == "constant"
    expected = chi(r, coeffs)
    assert mixed_equal(res.value, expected) == "equal"
    check = versal_sample_check(alpha, res.value, n_samples=20, height=5)
    assert check.status == "consistent"


def test_nonconstant_invariant():
    A = H
    coeffs = [mixed_zero(A), mixed_zero(A), mixed(A, even=witt_class(qf([1, 1])))]
    alpha = LambdaInvariant(1, tuple(coeffs))
    res = is_constant_invariant(alpha)
    assert res.status == "nonconstant"
    assert res.witness == 2


def test_presentation_relations():
    """n_Q lambda^{2i} = C(r, i) n_Q as invariants of rank-r forms."""
    for A in (H, M2):
        nqm = n_q_mixed(A)
        for r in (1, 2):
            for i in range(r + 1):
                alpha = lambda_basis_invariant(r, 2 * i, A, scale=nqm)
                beta = lambda_basis_invariant(
                    r, 0, A, scale=int_multiple(comb(r, i), nqm))
                assert invariant_equal(alpha, beta) == "equal"


def test_eval_invariant():
    rng = random.Random(7)
    z = _rand_pure(rng, H)
    h = AntiHermForm((z,), H)
    alpha = lambda_basis_invariant(1, 2, H)
    out = eval_invariant(alpha, h)
    assert out.even == witt_class(qf([z.nrd()]))
