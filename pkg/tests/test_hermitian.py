"""Anti-hermitian forms: diagonalization, Morita transfer, hyperbolicity."""

import random
from fractions import Fraction

import pytest

from quatwitt.errors import NotSplit
from quatwitt.hermitian import (
    AntiHermForm,
    herm_diag,
    herm_diagonalize,
    herm_invariants,
    certificate_ok,
    hyperbolicity_certificate,
    morita_gram,
    morita_transfer,
    morita_transfer_entries,
)
from quatwitt.quadforms import diagonalize, hyperbolic, qf, witt_equal
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


def test_herm_diag_basics():
    h = herm_diag([H.i(), H.j()], H)
    assert h.rank == 2
    assert h.reduced_dim == 4
    inv = herm_invariants(h)
    assert inv.reduced_dim == 4
    # disc is the product of the reduced norms: Nrd(i) Nrd(j) = 1
    assert inv.disc.is_one()


def test_herm_diagonalize_gram():
    rng = random.Random(3)
    for A in (H, M2):
        for _ in range(20):
            z1, z2 = _rand_pure(rng, A), _rand_pure(rng, A)
            x = A.element(*(Fraction(rng.randint(-3, 3)) for _ in range(4)))
            # Gram of the form <z1, z2> in a basis mixed by x
            gram = [[z1, z1 * x],
                    [(z1 * x).conj().scale(-1), x.conj() * z1 * x + z2]]
            form, u = herm_diagonalize(gram, A)
            assert form.rank == 2
            assert certificate_ok(gram, u, form)


def test_morita_transfer_formula():
    rng = random.Random(8)
    for a, b in [(1, 1), (2, 7), (5, -1)]:
        A = QuatAlgebra(a, b)
        z0 = find_nilpotent(A)
        for _ in range(40):
            z = _rand_pure(rng, A)
            q = morita_transfer(AntiHermForm((z,), A), z0)
            t = (z * z0).trd()
            if t == 0:
                assert witt_equal(q, hyperbolic(1))
            else:
                assert witt_equal(q, qf([-t, t * (-z.nrd())]))
                gram = morita_gram(z, z0)
                assert witt_equal(diagonalize(gram), q)


def test_morita_transfer_entries_generic():
    # scalar version used over Q(t): same shape as the transfer
    A = QuatAlgebra(1, 1)
    z0 = find_nilpotent(A)
    z = _rand_pure(random.Random(0), A)
    entries = morita_transfer_entries(AntiHermForm((z,), A), z0)
    t = (z * z0).trd()
    if t == 0:
        assert entries == [1, -1]
    else:
        assert entries == [-t, t * (-z.nrd())]


def test_morita_requires_split():
    with pytest.raises(NotSplit):
        morita_transfer(herm_diag([H.i()], H), H.i())


def test_hyperbolicity_h_perp_minus_h():
    rng = random.Random(21)
    for A in (H, M2):
        for _ in range(6):
            z = _rand_pure(rng, A, 4)
            h = AntiHermForm((z, z.scale(-1)), A)
            cert = hyperbolicity_certificate(h, bound=4)
            assert cert.status == "hyperbolic"
            assert cert.witness is not None


def test_hyperbolicity_odd_rank():
    h = herm_diag([H.i()], H)
    assert hyperbolicity_certificate(h).status == "anisotropic-at-bound"


def test_hyperbolicity_curated_nq_multiples():
    """n_Q <z> is hyperbolic for every pure invertible z (division case)."""
    for z in (H.i(), H.i() + H.j(), H.i() + H.j() + H.ij()):
        h = AntiHermForm(tuple(z.scale(c) for c in (1, 1, 1, 1)), H)
        cert = hyperbolicity_certificate(h, bound=8)
        assert cert.status == "hyperbolic", z
