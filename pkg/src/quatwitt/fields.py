"""Base fields: exact arithmetic over Q and F_p (p odd), square classes,
places and the Legendre / Hilbert symbols.

Everything here is deterministic: integer factorization is trial division
up to a configured bound, never probabilistic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from .errors import (
    EvenOrCompositeModulus,
    FactorizationLimitExceeded,
    UnsupportedField,
    ZeroArgument,
    ZeroElement,
)

TRIAL_DIVISION_BOUND = 10**6
FACTOR_BOUND = 10**18


# ---------------------------------------------------------------------------
# field specifications


@dataclass(frozen=True)
class FieldSpec:
    """One of Q, F_p (p an odd prime) or Q(t)."""

    kind: str  # "Q" | "Fp" | "Qt"
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("Q takes no modulus")
        elif self.kind == "Fp":
            if self.p is None or self.p == 2 or not is_prime(self.p):
                raise EvenOrCompositeModulus(f"not an odd prime: {self.p}")
        elif self.kind == "Qt":
            if self.p is not None:
                raise ValueError("only Q(t) is supported, no F_p(t)")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    def __repr__(self):
        if self.kind == "Fp":
            return f"F_{self.p}"
        return "Q" if self.kind == "Q" else "Q(t)"


QQ = FieldSpec("Q")
QT = FieldSpec("Qt")


def Fp(p: int) -> FieldSpec:
    return FieldSpec("Fp", p)


# ---------------------------------------------------------------------------
# integer factorization (trial division only)


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic primality by trial division; n must stay within the
    range where trial division to 10^6 is conclusive."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if d > TRIAL_DIVISION_BOUND:
            raise FactorizationLimitExceeded(f"primality of {n} out of range")
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def factorize(n: int, bound: int = FACTOR_BOUND):
    """Factor a nonzero integer: returns (sign, [(prime, exponent), ...]).

    Pure trial division up to 10^6; anything with a cofactor that cannot
    be certified prime raises FactorizationLimitExceeded.
    """
    if n == 0:
        raise ZeroElement("cannot factor 0")
    if abs(n) > bound:
        raise FactorizationLimitExceeded(f"|{n}| exceeds bound {bound}")
    sign = 1 if n > 0 else -1
    n = abs(n)
    factors = []
    for p in _trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    if n > 1:
        if n > TRIAL_DIVISION_BOUND * TRIAL_DIVISION_BOUND:
            raise FactorizationLimitExceeded(f"cofactor {n} not certified")
        factors.append((n, 1))
    return sign, tuple(factors)


def _trial_primes():
    yield 2
    yield 3
    d = 5
    step = 2
    while d <= TRIAL_DIVISION_BOUND:
        yield d
        d += step
        step = 6 - step


@lru_cache(maxsize=None)
def squarefree_part(n: int) -> int:
    """Squarefree integer representing the square class of n != 0."""
    sign, factors = factorize(n)
    out = sign
    for p, e in factors:
        if e % 2:
            out *= p
    return out


# ---------------------------------------------------------------------------
# square classes


@dataclass(frozen=True)
class SquareClass:
    """Canonical representative of k^x / (k^x)^2.

    Over Q the representative is a squarefree integer; over F_p it is 1 or
    the smallest quadratic non-residue.
    """

    repr: int
    field: FieldSpec

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        if self.field != other.field:
            raise UnsupportedField("square classes over different fields")
        if self.field.kind == "Q":
            # both reps are squarefree, so no fresh factorization is needed
            from math import gcd

            g = gcd(abs(self.repr), abs(other.repr))
            return SquareClass(self.repr * other.repr // (g * g), self.field)
        return square_class(self.repr * other.repr, self.field)

    def __neg__(self) -> "SquareClass":
        return square_class(-self.repr, self.field)

    def is_one(self) -> bool:
        return self.repr == 1


def square_class(x, field: FieldSpec = QQ) -> SquareClass:
    """Canonical square class of a nonzero element.

    Over Q, x may be an int or Fraction: n/d and n*d share a class, so the
    representative is squarefree_part(n*d).  Over F_p the representative
    is 1 or the smallest non-residue.
    """
    if field.kind == "Q":
        x = Fraction(x)
        if x == 0:
            raise ZeroElement("square class of 0")
        # numerator and denominator are coprime, so reduce them separately
        return SquareClass(
            squarefree_part(x.numerator) * squarefree_part(x.denominator),
            field,
        )
    if field.kind == "Fp":
        p = field.p
        r = int(x) % p
        if r == 0:
            raise ZeroElement("square class of 0")
        if legendre_symbol(r, p) == 1:
            return SquareClass(1, field)
        return SquareClass(smallest_nonresidue(p), field)
    raise UnsupportedField("square classes over Q(t) live in funcfield")


def smallest_nonresidue(p: int) -> int:
    for n in range(2, p):
        if legendre_symbol(n, p) == -1:
            return n
    raise EvenOrCompositeModulus(f"no non-residue mod {p}")


# ---------------------------------------------------------------------------
# symbols


@lru_cache(maxsize=None)
def legendre_symbol(a: int, p: int) -> int:
    """(a|p) in {-1, 0, 1} via Euler's criterion; p must be an odd prime."""
    if p == 2 or not is_prime(p):
        raise EvenOrCompositeModulus(f"not an odd prime: {p}")
    a %= p
    if a == 0:
        return 0
    s = pow(a, (p - 1) // 2, p)
    return -1 if s == p - 1 else 1


@dataclass(frozen=True)
class Place:
    """A place of Q or Q(t).

    kind is one of "real", "finite" (p-adic, p prime including 2),
    "poly" (monic irreducible pi of Q[t]) or "infinite" (1/t-adic).
    """

    kind: str
    p: Optional[int] = None
    pi: Optional[Tuple[Fraction, ...]] = None

    def __repr__(self):
        if self.kind == "real":
            return "v_real"
        if self.kind == "finite":
            return f"v_{self.p}"
        if self.kind == "infinite":
            return "v_inf"
        return f"v_({self.pi})"


REAL_PLACE = Place("real")


def finite_place(p: int) -> Place:
    if not is_prime(p):
        raise EvenOrCompositeModulus(f"{p} is not prime")
    return Place("finite", p=p)


def _val_and_unit(x: Fraction, p: int):
    """x = p^v * u with u a p-unit; returns (v, u) as (int, Fraction)."""
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def _unit_mod(u: Fraction, m: int) -> int:
    """u mod m for a fraction whose denominator is invertible mod m."""
    return (u.numerator * pow(u.denominator, -1, m)) % m


def hilbert_symbol(a, b, v: Place) -> int:
    """Hilbert symbol (a, b)_v over the completion of Q at v."""
    # the symbol only depends on square classes, so reduce fractions to
    # integers n*d for fast cache keys
    if not isinstance(a, int):
        a = Fraction(a)
        a = a.numerator * a.denominator
    if not isinstance(b, int):
        b = Fraction(b)
        b = b.numerator * b.denominator
    if a == 0 or b == 0:
        raise ZeroArgument("Hilbert symbol needs nonzero arguments")
    return _hilbert_symbol_cached(a, b, v)


@lru_cache(maxsize=None)
def _hilbert_symbol_cached(a: int, b: int, v: Place) -> int:
    a, b = Fraction(a), Fraction(b)
    if v.kind == "real":
        return -1 if a < 0 and b < 0 else 1
    if v.kind != "finite":
        raise UnsupportedField(f"Hilbert symbol undefined at {v}")
    p = v.p
    alpha, u = _val_and_unit(a, p)
    beta, w = _val_and_unit(b, p)
    if p == 2:
        def eps(x):
            return (_unit_mod(x, 8) - 1) // 2 % 2

        def omega(x):
            return (_unit_mod(x, 8) ** 2 - 1) // 8 % 2

        e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = 1
    if (alpha * beta * (p - 1) // 2) % 2:
        sign = -sign
    if beta % 2:
        sign *= legendre_symbol(_unit_mod(u, p), p)
    if alpha % 2:
        sign *= legendre_symbol(_unit_mod(w, p), p)
    return sign


def is_padic_square(x, p: int) -> bool:
    """Whether a nonzero rational is a square in Q_p."""
    x = Fraction(x)
    if x == 0:
        raise ZeroArgument("0 has no square class")
    v, u = _val_and_unit(x, p)
    if v % 2:
        return False
    if p == 2:
        return _unit_mod(u, 8) == 1
    return legendre_symbol(_unit_mod(u, p), p) == 1


def relevant_primes(values) -> list:
    """Finite primes at which Hilbert symbols of the given nonzero
    rationals can be nontrivial: 2 plus every odd prime in a support."""
    primes = {2}
    for x in values:
        x = Fraction(x)
        for n in (x.numerator, x.denominator):
            _, fs = factorize(n)
            for q, _ in fs:
                primes.add(q)
    return sorted(primes)
