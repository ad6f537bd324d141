"""The mixed Witt ring W(k) + W^{-1}(Q, gamma).

Elements have an even part (a Witt class of quadratic forms over k) and an
odd part (an anti-hermitian form over (Q, gamma) up to Witt equivalence).
The odd*odd product lands in the even part through the twisted trace form;
its closed form <-Trd(z1 z2)> (<<z1^2, z2^2>> - n_Q) is used as a built-in
cross-check on every multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import AlgebraMismatch, AsymmetryDetected, NotSplit
from .fields import square_class
from .hermitian import (
    AntiHermForm,
    HyperbolicityResult,
    herm_invariants,
    hyperbolicity_certificate,
    morita_transfer,
)
from .quadforms import (
    QuadForm,
    WittClass,
    diagonalize,
    pfister,
    qf,
    witt_class,
    witt_equal,
    witt_zero,
)
from .quaternions import QuatAlgebra, Quaternion, find_nilpotent, is_split, norm_forms

BASIS_NAMES = ("1", "i", "j", "ij")


def _basis(A: QuatAlgebra):
    return (A.one(), A.i(), A.j(), A.ij())


def twisted_trace_form(z1: Quaternion, z2: Quaternion) -> QuadForm:
    """The 4-dimensional form x |-> Trd(gamma(x) z1 x gamma(z2)) over k,
    diagonalized from its Gram matrix on the basis (1, i, j, ij).

    The Gram matrix must come out symmetric; if it does not, the quaternion
    arithmetic is broken and we refuse to continue.
    """
    if z1.algebra != z2.algebra:
        raise AlgebraMismatch("twisted trace form across algebras")
    basis = _basis(z1.algebra)
    gram = [
        [Fraction((es.conj() * z1 * et * z2.conj()).trd()) for et in basis]
        for es in basis
    ]
    for s in range(4):
        for t in range(s + 1, 4):
            if gram[s][t] != gram[t][s]:
                raise AsymmetryDetected(
                    f"Gram entry ({s},{t}): {gram[s][t]} vs {gram[t][s]}"
                )
    return diagonalize(gram)


def odd_product_closed_form(z1: Quaternion, z2: Quaternion) -> WittClass:
    """<z1>_gamma * <z2>_gamma = <-Trd(z1 z2)> (<<z1^2, z2^2>> - n_Q)."""
    t = Fraction((z1 * z2).trd())
    if t == 0:
        return witt_zero()
    zsq1 = -z1.nrd()
    zsq2 = -z2.nrd()
    pf = pfister([zsq1, zsq2])
    nq = norm_forms(z1.algebra)["n_Q"]
    diff = witt_class(pf) - witt_class(nq)
    return diff.scale(square_class(-t))


@dataclass(frozen=True)
class MixedClass:
    """even + odd element of the mixed Witt ring."""

    even: WittClass
    odd: AntiHermForm
    algebra: QuatAlgebra

    def __add__(self, other: "MixedClass") -> "MixedClass":
        self._check(other)
        return MixedClass(self.even + other.even,
                          self.odd.perp(other.odd), self.algebra)

    def __neg__(self) -> "MixedClass":
        return MixedClass(-self.even, self.odd.neg(), self.algebra)

    def __sub__(self, other: "MixedClass") -> "MixedClass":
        return self + (-other)

    def __mul__(self, other: "MixedClass") -> "MixedClass":
        self._check(other)
        even = self.even * other.even
        for zs in self.odd.diag:
            for zt in other.odd.diag:
                term = witt_class(twisted_trace_form(zs, zt))
                check = odd_product_closed_form(zs, zt)
                if not witt_equal_cls(term, check):
                    raise AsymmetryDetected(
                        "twisted trace form disagrees with its closed form"
                    )
                even = even + term
        odd_entries = []
        for c in self.even.anis.reps():
            for z in other.odd.diag:
                odd_entries.append(z.scale(c))
        for c in other.even.anis.reps():
            for z in self.odd.diag:
                odd_entries.append(z.scale(c))
        return MixedClass(even, AntiHermForm(tuple(odd_entries), self.algebra),
                          self.algebra)

    def _check(self, other: "MixedClass"):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("mixed classes over different algebras")

    def __repr__(self):
        return f"Mixed(even={self.even!r}, odd={self.odd!r})"


def witt_equal_cls(x: WittClass, y: WittClass) -> bool:
    return witt_equal(x.anis, y.anis)


def mixed(algebra: QuatAlgebra, even: Optional[WittClass] = None,
          odd_entries: Tuple[Quaternion, ...] = ()) -> MixedClass:
    if even is None:
        even = witt_zero()
    return MixedClass(even, AntiHermForm(tuple(odd_entries), algebra), algebra)


def mixed_even(algebra: QuatAlgebra, cls: WittClass) -> MixedClass:
    return mixed(algebra, even=cls)


def mixed_odd(algebra: QuatAlgebra, *entries: Quaternion) -> MixedClass:
    return mixed(algebra, odd_entries=tuple(entries))


def mixed_zero(algebra: QuatAlgebra) -> MixedClass:
    return mixed(algebra)


def mixed_one(algebra: QuatAlgebra) -> MixedClass:
    return mixed(algebra, even=witt_class(qf([1])))


# ---------------------------------------------------------------------------
# equality


PROBE_SEEDS = (11, 23, 57)


def _probe_set(A: QuatAlgebra):
    from .quaternions import random_pure

    i, j, ij = A.i(), A.j(), A.ij()
    fixed = [i, j, ij, i + j, i - j, i + ij, i - ij, j + ij, j - ij]
    probes = [z for z in fixed if z.is_invertible()]
    for seed in PROBE_SEEDS:
        probes.append(random_pure(A, seed))
    return probes


def phi_z0(x: MixedClass, z0: Optional[Quaternion] = None) -> WittClass:
    """The Morita isomorphism onto W(k) in the split case: identity on the
    even part, transfer along z0 on the odd part."""
    if z0 is None:
        z0 = find_nilpotent(x.algebra)
    return x.even + witt_class(morita_transfer(x.odd, z0))


def mixed_equal(x: MixedClass, y: MixedClass, search_bound: int = 8) -> str:
    """Tiered decision: returns "equal", "distinct" or "unknown".

    Even parts are compared exactly.  Split odd parts go through Morita
    transfer (complete).  Division odd parts are screened by rank parity,
    discriminant and pairing probes, then a bounded hyperbolicity search
    tries to certify equality.
    """
    x._check(y)
    if not witt_equal_cls(x.even, y.even):
        return "distinct"
    diff = x.odd.perp(y.odd.neg())
    if is_split(x.algebra):
        z0 = find_nilpotent(x.algebra)
        q = morita_transfer(diff, z0)
        from .quadforms import is_witt_zero

        return "equal" if is_witt_zero(q) else "distinct"
    if len(x.odd.diag) % 2 != len(y.odd.diag) % 2:
        return "distinct"
    dx = herm_invariants(x.odd).disc
    dy = herm_invariants(y.odd).disc
    if dx != dy:
        return "distinct"
    cert = hyperbolicity_certificate(diff, bound=search_bound)
    if cert.status == "hyperbolic":
        return "equal"
    for w in _probe_set(x.algebra):
        pairing = witt_zero()
        for z in diff.diag:
            pairing = pairing + witt_class(twisted_trace_form(z, w))
        if not pairing.is_zero():
            return "distinct"
    return "unknown"
