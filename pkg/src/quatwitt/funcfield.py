"""Forms over Q(t): residues, Witt equality via the Milnor sequence, conic
parametrization of split algebras and the generic-splitting map.

A form entry is stored in factored shape, unit times a product of monic
irreducible polynomials with exponents reduced mod 2 (an entry is only ever
needed up to squares).  Second residues at all finite places plus one good
specialization decide Witt equality over Q(t).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import List, Optional, Sequence, Tuple

from . import polys as P
from .errors import (
    MissingFactorization,
    NoGoodSpecializationPoint,
    NotSplit,
    SearchBoundExceeded,
    UnsupportedResidueField,
    ZeroElement,
)
from .fields import Place, QT, square_class, squarefree_part
from .mixed import MixedClass, mixed
from .hermitian import AntiHermForm, morita_transfer_entries
from .polys import RationalFunction
from .quadforms import (
    GroupRingElem,
    QuadForm,
    WittClass,
    pfister,
    qf,
    witt_class,
    witt_zero,
)
from .quaternions import QuatAlgebra, Quaternion, is_split, norm_forms

INFINITE_PLACE = Place("infinite")


def poly_place(pi: P.Poly) -> Place:
    pi = P.monic(P.poly(pi))
    if not P.is_irreducible(pi):
        raise MissingFactorization(f"{P.poly_str(pi)} is not certified irreducible")
    return Place("poly", pi=pi)


# ---------------------------------------------------------------------------
# factored entries


@dataclass(frozen=True)
class FFEntry:
    """unit * prod(factor^exp) with monic irreducible factors, exps in {1}
    after square reduction."""

    unit: Fraction
    factors: Tuple[Tuple[P.Poly, int], ...]

    def value_at(self, c: Fraction) -> Fraction:
        out = Fraction(self.unit)
        for f, e in self.factors:
            out *= P.peval(f, c) ** e
        return out

    def as_rational(self) -> RationalFunction:
        num = P.constant(self.unit)
        for f, e in self.factors:
            num = P.pmul(num, P.ppow(f, e))
        return RationalFunction(num)

    def valuation(self, v: Place) -> int:
        if v.kind == "poly":
            for f, e in self.factors:
                if f == v.pi:
                    return e
            return 0
        if v.kind == "infinite":
            return -sum(e * P.degree(f) for f, e in self.factors)
        raise UnsupportedResidueField(f"no valuation at {v}")


def ff_entry(x) -> FFEntry:
    """Normalize a nonzero entry (rational, polynomial coefficient list or
    RationalFunction) into factored squarefree shape."""
    if isinstance(x, (int, Fraction)):
        x = RationalFunction.from_const(Fraction(x))
    elif isinstance(x, (list, tuple)):
        x = RationalFunction(P.poly(x))
    if x.is_zero():
        raise ZeroElement("zero entry in a function-field form")
    # num/den and num*den agree up to squares; num and den are coprime,
    # so factor them separately and merge
    try:
        unit_n, factors_n = P.factor_poly(x.num)
        unit_d, factors_d = P.factor_poly(x.den)
    except NotImplementedError as exc:
        raise MissingFactorization(str(exc)) from exc
    unit = unit_n * unit_d
    merged = dict(factors_n)
    for f, e in factors_d:
        merged[f] = merged.get(f, 0) + e
    factors = sorted(merged.items())
    unit = Fraction(squarefree_part(unit.numerator * unit.denominator))
    kept = []
    for f, e in factors:
        if e % 2 == 0:
            continue
        # pull the content out of non-monic-over-Z issues: f is monic with
        # rational coefficients; its square class soaks denominators into
        # the unit via the primitive part
        kept.append((f, 1))
    return FFEntry(unit, tuple(sorted(kept)))


def ff_entry_product(e1: FFEntry, e2: FFEntry) -> FFEntry:
    """Product of two factored entries up to squares, merging the known
    factorizations instead of refactoring."""
    # both units are squarefree integers, so their product reduces by gcd
    a, b = int(e1.unit), int(e2.unit)
    g = gcd(abs(a), abs(b))
    unit = Fraction(a * b // (g * g))
    merged = {f: e for f, e in e1.factors}
    for f, e in e2.factors:
        merged[f] = merged.get(f, 0) + e
    kept = tuple(sorted((f, 1) for f, e in merged.items() if e % 2))
    return FFEntry(unit, kept)


@dataclass(frozen=True)
class FunctionFieldForm:
    """Diagonal form over Q(t) with factored entries."""

    entries: Tuple[FFEntry, ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def perp(self, other: "FunctionFieldForm") -> "FunctionFieldForm":
        return FunctionFieldForm(self.entries + other.entries)

    def neg(self) -> "FunctionFieldForm":
        return FunctionFieldForm(
            tuple(FFEntry(-e.unit, e.factors) for e in self.entries)
        )

    def tensor(self, other: "FunctionFieldForm") -> "FunctionFieldForm":
        out = []
        for e1 in self.entries:
            for e2 in other.entries:
                out.append(ff_entry_product(e1, e2))
        return FunctionFieldForm(tuple(out))

    def support(self) -> List[P.Poly]:
        seen = []
        for e in self.entries:
            for f, _ in e.factors:
                if f not in seen:
                    seen.append(f)
        return sorted(seen)

    def specialize(self, c: Fraction) -> QuadForm:
        vals = [e.value_at(Fraction(c)) for e in self.entries]
        if any(v == 0 for v in vals):
            raise NoGoodSpecializationPoint(f"t = {c} kills an entry")
        return qf(vals)

    def __repr__(self):
        parts = []
        for e in self.entries:
            s = str(e.unit)
            for f, ex in e.factors:
                s += f"*({P.poly_str(f)})^{ex}" if ex != 1 else f"*({P.poly_str(f)})"
            parts.append(s)
        return "<" + ", ".join(parts) + ">_Q(t)"


def ff_form(values: Sequence) -> FunctionFieldForm:
    return FunctionFieldForm(tuple(ff_entry(v) for v in values))


FF_EMPTY = FunctionFieldForm(())


# ---------------------------------------------------------------------------
# residues


def _reduce_mod(pi: P.Poly, value: P.Poly):
    """Image of a v-unit polynomial in the residue field Q[t]/(pi)."""
    return P.pmod(value, pi)


def _entry_residue_data(e: FFEntry, v: Place, unif: Optional[RationalFunction]):
    """(parity, residue class data) of one entry at a place.

    For a degree-1 place the class is a Fraction; for the infinite place a
    Fraction; for a degree-2 place a linear polynomial s + t*theta.
    """
    val = e.valuation(v)
    if v.kind == "infinite":
        # reduction of entry * t^{-val} at t = infinity: the unit times the
        # (monic, hence 1) leading coefficients
        cls = Fraction(e.unit)
        if unif is not None:
            cls *= _inf_unit_residue(unif) ** val
        return val % 2, cls
    pi = v.pi
    d = P.degree(pi)
    cof = P.constant(e.unit)
    for f, ex in e.factors:
        if f == pi:
            continue
        cof = P.pmul(cof, P.ppow(f, ex))
    if d == 1:
        c = -pi[0]  # root of the monic linear pi
        cls = P.peval(cof, c)
        if unif is not None:
            g = unif / RationalFunction(pi)
            gval = g.evaluate(c)
            cls *= gval ** val
        return val % 2, cls
    if d == 2:
        red = _reduce_mod(pi, cof)
        if unif is not None:
            raise UnsupportedResidueField(
                "alternate uniformizers only at degree-1 places"
            )
        return val % 2, red
    raise UnsupportedResidueField(
        f"residue field of degree {d} not supported"
    )


def _inf_unit_residue(unif: RationalFunction) -> Fraction:
    """Residue at infinity of unif * t (a v_inf-unit when unif has
    valuation 1, i.e. degree -1)."""
    num, den = unif.num, unif.den
    if P.degree(den) - P.degree(num) != 1:
        raise ZeroElement("uniformizer at infinity must have valuation 1")
    return P.leading(num) / P.leading(den)


def residue(q: FunctionFieldForm, v: Place,
            uniformizer: Optional[RationalFunction] = None) -> GroupRingElem:
    """First and second residue at v, packed into W(Q)[Z/2Z].

    Only degree-1 finite places and the infinite place land in W(Q); at a
    degree-2 place use residue2_vanishes instead.
    """
    if v.kind == "poly" and P.degree(v.pi) != 1:
        raise UnsupportedResidueField(
            "group-ring residues only at residue field Q"
        )
    first, second = [], []
    for e in q.entries:
        parity, cls = _entry_residue_data(e, v, uniformizer)
        (second if parity else first).append(cls)
    return GroupRingElem(witt_class(qf(first)), witt_class(qf(second)))


def _quadratic_square(pi: P.Poly, z: P.Poly) -> bool:
    """Whether a nonzero element s + t*theta of Q[t]/(pi) is a square,
    for pi = X^2 + beta X + c0 monic irreducible (theta a root).

    z = u^2 implies N(z) = N(u)^2 is a rational square w^2, and then
    (z + w)^2 = z (Tr(z) + 2w), so z is a square iff Tr(z) +- 2w is a
    nonzero rational square; rational z reduces to s or s*disc square.
    """
    s = z[0] if len(z) > 0 else Fraction(0)
    t = z[1] if len(z) > 1 else Fraction(0)
    beta, c0 = pi[1], pi[0]
    if t == 0:
        if s == 0:
            return False
        disc = beta * beta - 4 * c0
        if s > 0 and _fraction_sqrt(s) is not None:
            return True
        return s * disc > 0 and _fraction_sqrt(s * disc) is not None
    norm = s * s - beta * s * t + c0 * t * t
    w = _fraction_sqrt(norm)
    if w is None:
        return False
    trace = 2 * s - beta * t
    for sign in (1, -1):
        v = trace + 2 * sign * w
        if v > 0 and _fraction_sqrt(v) is not None:
            return True
    return False


def _fraction_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def residue2_vanishes(q: FunctionFieldForm, v: Place) -> bool:
    """Whether the second residue at v vanishes.

    At residue field Q this is a complete decision; at a degree-2 residue
    field Q[t]/(pi) vanishing is certified by pairwise cancellation with an
    exact squareness test (sound, possibly incomplete)."""
    if v.kind == "infinite" or P.degree(v.pi) == 1:
        return residue(q, v).odd.is_zero()
    if P.degree(v.pi) != 2:
        raise UnsupportedResidueField("only degree <= 2 residue fields")
    pi = v.pi
    classes = []
    for e in q.entries:
        parity, red = _entry_residue_data(e, v, None)
        if parity:
            classes.append(red)
    if len(classes) % 2:
        return False
    pool = list(classes)
    while pool:
        z = pool.pop()
        matched = None
        for idx, w in enumerate(pool):
            # <z, w> hyperbolic iff -z/w is a square in the residue field
            ratio = _field_div(pi, _negate(z), w)
            if ratio is not None and _quadratic_square(pi, ratio):
                matched = idx
                break
        if matched is None:
            return False
        pool.pop(matched)
    return True


def _negate(z: P.Poly) -> P.Poly:
    return P.pneg(z)


def _field_div(pi: P.Poly, num: P.Poly, den: P.Poly) -> Optional[P.Poly]:
    """num / den in Q[t]/(pi) via the extended Euclid inverse."""
    if P.is_zero(den):
        return None
    inv = _mod_inverse(den, pi)
    if inv is None:
        return None
    return P.pmod(P.pmul(num, inv), pi)


def _mod_inverse(a: P.Poly, pi: P.Poly) -> Optional[P.Poly]:
    r0, r1 = pi, P.pmod(a, pi)
    s0, s1 = P.ZERO, P.ONE
    while not P.is_zero(r1):
        qpoly, rem = P.pdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, P.psub(s0, P.pmul(qpoly, s1))
    if P.degree(r0) != 0:
        return None
    return P.pscale(1 / r0[0], s0)


# ---------------------------------------------------------------------------
# Witt equality over Q(t)


def good_points(q: FunctionFieldForm, how_many: int = 1) -> List[Fraction]:
    out = []
    c = 0
    while len(out) < how_many:
        if c > 10000:
            raise NoGoodSpecializationPoint("no good integer point below 10000")
        cc = Fraction(c)
        if all(e.value_at(cc) != 0 for e in q.entries):
            out.append(cc)
        c += 1
    return out


def kt_witt_equal(q1: FunctionFieldForm, q2: FunctionFieldForm) -> bool:
    """Witt equality in W(Q(t)): all second residues of the difference
    vanish and the constant part specializes to 0 in W(Q)."""
    diff = q1.perp(q2.neg())
    if diff.dim % 2:
        return False
    for pi in diff.support():
        if not residue2_vanishes(diff, Place("poly", pi=pi)):
            return False
    if diff.dim == 0:
        return True
    c = good_points(diff)[0]
    from .quadforms import is_witt_zero

    return is_witt_zero(diff.specialize(c))


def w0_membership(q: FunctionFieldForm,
                  places: Optional[Sequence[Place]] = None) -> bool:
    """Unramifiedness: second residues vanish at the given places, or at
    every finite place of the support when none are supplied."""
    if places is None:
        places = [Place("poly", pi=pi) for pi in q.support()]
    return all(residue2_vanishes(q, v) for v in places)


def conic_w0_places(q: FunctionFieldForm, conic: "ConicData") -> List[Place]:
    """Places of Q(t) corresponding to affine points of the parametrized
    conic that meet the support of q: the parametrization sends the zeros
    of a + b t^2 to the conic's point at infinity (which is excluded),
    while the t-infinite place is an affine conic point (included)."""
    pole = P.monic(P.poly([conic.a, Fraction(0), conic.b]))
    out = [Place("poly", pi=pi) for pi in q.support() if pi != pole]
    out.append(Place("infinite"))
    return out


# ---------------------------------------------------------------------------
# conic parametrization and the generic-splitting map


@dataclass(frozen=True)
class ConicData:
    """Rational parametrization of the conic -a x^2 - b y^2 + ab = 0."""

    a: Fraction
    b: Fraction
    point: Tuple[Fraction, Fraction]
    x_t: RationalFunction
    y_t: RationalFunction


def _conic_point(A: QuatAlgebra, height_bound: int = 60):
    """Rational point of -a x^2 - b y^2 + ab = 0, from a zero of the pure
    norm form with nonzero ij-coordinate."""
    a, b = A.a, A.b
    for h in range(1, height_bound + 1):
        for c3 in range(1, h + 1):
            for c1 in range(-h, h + 1):
                for c2 in range(-h, h + 1):
                    if max(abs(c1), abs(c2), c3) != h:
                        continue
                    if -a * c1 * c1 - b * c2 * c2 + a * b * c3 * c3 == 0:
                        return (Fraction(c1, c3), Fraction(c2, c3))
    raise SearchBoundExceeded("no conic point within the height bound")


def conic_parametrize(A: QuatAlgebra) -> ConicData:
    if not is_split(A):
        raise NotSplit(f"{A!r} is a division algebra; its conic has no"
                       " rational point")
    a, b = A.a, A.b
    x0, y0 = _conic_point(A)
    t = RationalFunction(P.T)
    denom = a + b * t * t
    s = (-2) * (a * x0 + b * y0 * t) / denom
    x_t = x0 + s
    y_t = y0 + t * s
    check = -a * x_t * x_t - b * y_t * y_t + a * b
    assert check.is_zero(), "parametrization does not satisfy the conic"
    return ConicData(a, b, (x0, y0), x_t, y_t)


def omega_bar(A: QuatAlgebra, conic: Optional[ConicData] = None) -> Quaternion:
    """The nilpotent generic pure quaternion x(t) i + y(t) j + ij over Q(t)."""
    if conic is None:
        conic = conic_parametrize(A)
    one = RationalFunction.from_const(1)
    zero = RationalFunction.from_const(0)
    w = Quaternion((zero, conic.x_t, conic.y_t, one), A)
    assert (w * w).is_zero()
    return w


def psi_split(x: MixedClass, conic: Optional[ConicData] = None
              ) -> FunctionFieldForm:
    """Scalar extension to Q(t) on the even part, Morita transfer along
    omega_bar(t) on the odd part."""
    A = x.algebra
    w = omega_bar(A, conic)
    values: List = [Fraction(r) for r in x.even.anis.reps()]
    values.extend(morita_transfer_entries(x.odd, w))
    return ff_form(values)


def kernel_generator(A: QuatAlgebra) -> MixedClass:
    """The mixed class <2><<(ij)^2>> - <ij>_gamma spanning the kernel of
    the generic-splitting map over a split algebra."""
    A.require_generic_basis()
    ij_sq = -A.a * A.b
    even = witt_class(pfister([ij_sq]).scale(square_class(2)))
    return mixed(A, even=even, odd_entries=(-A.ij(),))
