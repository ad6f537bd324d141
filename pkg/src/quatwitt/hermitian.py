"""Anti-hermitian (-1-hermitian) forms over (Q, gamma).

Diagonal forms carry pure invertible quaternion entries.  Gram input is
diagonalized immediately by hermitian Gram-Schmidt with a recorded
change-of-basis certificate.  In the split case Morita transfer along a
nilpotent pure quaternion turns everything into quadratic forms over the
base field, which is where all complete decisions happen.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import List, Optional, Sequence, Tuple

from .errors import (
    AlgebraMismatch,
    DegenerateForm,
    NotNilpotent,
    NotPureInvertible,
    NotSplit,
    SearchBoundExceeded,
)
from .fields import SquareClass, square_class
from .quadforms import QuadForm, qf
from .quaternions import QuatAlgebra, Quaternion, is_split

DEFAULT_SEARCH_BOUND = 8


@dataclass(frozen=True)
class AntiHermForm:
    """Diagonal anti-hermitian form <z_1,...,z_r>_gamma."""

    diag: Tuple[Quaternion, ...]
    algebra: QuatAlgebra

    def __post_init__(self):
        for z in self.diag:
            if z.algebra != self.algebra:
                raise AlgebraMismatch("entry from a different algebra")
            if not z.is_pure() or not z.is_invertible():
                raise NotPureInvertible(f"{z!r} is not pure invertible")

    @property
    def rank(self) -> int:
        return len(self.diag)

    @property
    def reduced_dim(self) -> int:
        return 2 * len(self.diag)

    def perp(self, other: "AntiHermForm") -> "AntiHermForm":
        if self.algebra != other.algebra:
            raise AlgebraMismatch("orthogonal sum across algebras")
        return AntiHermForm(self.diag + other.diag, self.algebra)

    def neg(self) -> "AntiHermForm":
        return AntiHermForm(tuple(-z for z in self.diag), self.algebra)

    def scale(self, c) -> "AntiHermForm":
        """Module action <c><z_1,...> = <c z_1,...> for a scalar c != 0."""
        return AntiHermForm(tuple(z.scale(c) for z in self.diag), self.algebra)

    def __repr__(self):
        return f"Herm<{', '.join(repr(z) for z in self.diag)}>"


def herm_diag(entries: Sequence[Quaternion], algebra: QuatAlgebra) -> AntiHermForm:
    return AntiHermForm(tuple(entries), algebra)


def _gram_eval(gram, x, y):
    """h(x, y) = sum gamma(x_s) G[s][t] y_t for quaternion vectors."""
    n = len(gram)
    acc = None
    for s in range(n):
        for t in range(n):
            term = x[s].conj() * gram[s][t] * y[t]
            acc = term if acc is None else acc + term
    return acc


def _check_skew(gram, algebra):
    n = len(gram)
    for s in range(n):
        for t in range(n):
            if gram[s][t].algebra != algebra:
                raise AlgebraMismatch("Gram entry from a different algebra")
            if not (gram[t][s].conj() + gram[s][t]).is_zero():
                raise NotPureInvertible(
                    "Gram matrix violates gamma(G^T) = -G"
                )


def _quat_inv(x: Quaternion) -> Quaternion:
    n = x.nrd()
    if not n:
        raise ZeroDivisionError("non-invertible quaternion")
    return x.conj().scale(1 / n)


def _small_quaternions(algebra: QuatAlgebra, bound: int):
    """Normalized integer quaternions: gcd 1, first nonzero coord > 0."""
    rng = range(-bound, bound + 1)
    for c in itertools.product(rng, repeat=4):
        if not any(c):
            continue
        g = 0
        for v in c:
            g = gcd(g, abs(v))
        if g != 1:
            continue
        first = next(v for v in c if v)
        if first < 0:
            continue
        yield algebra.element(*(Fraction(v) for v in c))


def herm_diagonalize(h_or_gram, algebra: Optional[QuatAlgebra] = None,
                     search_bound: int = DEFAULT_SEARCH_BOUND):
    """Diagonalize a skew-hermitian Gram matrix.

    Returns (AntiHermForm, U) where the columns of U express the new
    orthogonal basis in the original coordinates, so that
    gamma(U)^T G U is diagonal (checked by the certificate helper).
    Diagonal AntiHermForm input passes straight through.
    """
    if isinstance(h_or_gram, AntiHermForm):
        n = h_or_gram.rank
        alg = h_or_gram.algebra
        ident = [[alg.one() if s == t else alg.element(0, 0, 0, 0)
                  for t in range(n)] for s in range(n)]
        return h_or_gram, ident
    gram = [list(row) for row in h_or_gram]
    if algebra is None:
        algebra = gram[0][0].algebra
    _check_skew(gram, algebra)
    n = len(gram)
    zero = algebra.element(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    basis = [[algebra.one() if s == t else zero for t in range(n)]
             for s in range(n)]  # basis[k] = current k-th vector, old coords
    entries = []
    picked: List[List[Quaternion]] = []
    active = list(range(n))
    while active:
        piv = None
        for k in active:
            val = _gram_eval(gram, basis[k], basis[k])
            if val.is_invertible():
                piv = k
                break
        if piv is None:
            piv = _make_pivot(gram, basis, active, algebra, search_bound)
        v = basis[piv]
        d = _gram_eval(gram, v, v)
        if not d.is_invertible():
            raise DegenerateForm("no invertible pivot available")
        entries.append(d)
        picked.append(v)
        active.remove(piv)
        dinv = _quat_inv(d)
        for k in active:
            c = dinv * _gram_eval(gram, v, basis[k])
            basis[k] = [basis[k][s] - v[s] * c for s in range(n)]
    form = AntiHermForm(tuple(entries), algebra)
    u = [[picked[col][row] for col in range(n)] for row in range(n)]
    return form, u


def _make_pivot(gram, basis, active, algebra, search_bound):
    """All active diagonal values are non-invertible: mix two basis vectors
    with a small quaternion coefficient until one becomes invertible."""
    for s, t in itertools.permutations(active, 2):
        for b in range(1, search_bound + 1):
            for q in _small_quaternions(algebra, b):
                cand = [basis[s][k] + basis[t][k] * q
                        for k in range(len(gram))]
                if _gram_eval(gram, cand, cand).is_invertible():
                    basis[s] = cand
                    return s
    raise SearchBoundExceeded("no invertible pivot within search bound")


def certificate_ok(gram, u, form: AntiHermForm) -> bool:
    """Exact check that gamma(U)^T G U equals diag(form)."""
    n = len(gram)
    cols = [[u[row][col] for row in range(n)] for col in range(n)]
    for s in range(n):
        for t in range(n):
            val = _gram_eval(gram, cols[s], cols[t])
            if s == t:
                if not (val - form.diag[s]).is_zero():
                    return False
            elif not val.is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class HermWittData:
    reduced_dim: int
    disc: SquareClass


def herm_invariants(h: AntiHermForm) -> HermWittData:
    """Reduced dimension and the reduced-norm discriminant."""
    prod = Fraction(1)
    for z in h.diag:
        prod *= z.nrd()
    return HermWittData(h.reduced_dim, square_class(prod))


# ---------------------------------------------------------------------------
# Morita transfer (split case)


def _check_nilpotent(z0: Quaternion):
    if z0.is_zero() or not z0.is_pure() or not (z0 * z0).is_zero():
        raise NotNilpotent(f"{z0!r} is not a nonzero nilpotent pure quaternion")


def morita_transfer_entries(h: AntiHermForm, z0: Quaternion) -> list:
    """Diagonal entries (base-field scalars) of the transferred quadratic
    form: <-T, T z^2> per slot with T = Trd(z z0), hyperbolic when T = 0."""
    _check_nilpotent(z0)
    out = []
    for z in h.diag:
        t = (z * z0).trd()
        if not t:
            out.extend([Fraction(1), Fraction(-1)])
        else:
            zsq = -z.nrd()  # z^2 for pure z
            out.extend([-t, t * zsq])
    return out


def morita_transfer(h: AntiHermForm, z0: Quaternion) -> QuadForm:
    if h.algebra != z0.algebra:
        raise AlgebraMismatch("transfer datum from a different algebra")
    if not is_split(h.algebra):
        raise NotSplit("Morita transfer needs a split algebra")
    return qf(morita_transfer_entries(h, z0))


def morita_gram(z: Quaternion, z0: Quaternion):
    """The 2x2 Gram of b_{z0,z} on the basis (z0, z z0); None when
    Trd(z z0) = 0 (the basis degenerates, the form is hyperbolic)."""
    _check_nilpotent(z0)
    t = (z * z0).trd()
    if not t:
        return None
    # b(z1 z0, z2 z0) = -Trd(z0 gamma(z1) z z2) on the basis (z0, z z0),
    # i.e. z1, z2 running over (1, z)
    gens = [z.algebra.one(), z]
    return [[-(z0 * x.conj() * z * y).trd() for y in gens] for x in gens]


# ---------------------------------------------------------------------------
# hyperbolicity certificates


@dataclass(frozen=True)
class HyperbolicityResult:
    status: str  # "hyperbolic" | "anisotropic-at-bound" | "unknown"
    witness: Optional[Tuple[Tuple[Quaternion, ...], ...]] = None


def _sq_scaling_key(w: Quaternion):
    """Canonical key of a pure quaternion up to positive square rational
    scaling (used to match sandwich values in the isotropy search)."""
    coords = [Fraction(c) for c in w.coords]
    lcm = 1
    for c in coords:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm * lcm) for c in coords]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        return (0, 0, 0, 0)
    s = 1
    d = 2
    while d * d <= g:
        while g % (d * d) == 0:
            g //= d * d
            s *= d
        d += 1
    return tuple(v // (s * s) for v in ints)


def _isotropic_pair_vector(h: AntiHermForm, bound: int):
    """Search v = e_s p + e_t q with h(v, v) = 0, p, q integer quaternions
    of height <= bound; values are matched up to square scaling."""
    alg = h.algebra
    r = h.rank
    quats = list(_small_quaternions(alg, bound))
    tables = []
    for z in h.diag:
        table = {}
        for p in quats:
            val = p.conj() * z * p
            table.setdefault(_sq_scaling_key(val), (p, val))
        tables.append(table)
    for s in range(r):
        for t in range(s + 1, r):
            for kt, (q, qval) in tables[t].items():
                hit = tables[s].get(tuple(-c for c in kt))
                if hit is None:
                    continue
                p, pval = hit
                lam = _square_ratio(pval, qval.scale(Fraction(-1)))
                if lam is None:
                    continue
                vec = [alg.element(0, 0, 0, 0) for _ in range(r)]
                vec[s] = p
                vec[t] = q.scale(lam)
                return vec
    return None


def _raw_quaternions(algebra: QuatAlgebra, bound: int):
    """All integer quaternions of height <= bound, zero included."""
    rng = range(-bound, bound + 1)
    out = []
    for c in itertools.product(rng, repeat=4):
        out.append(algebra.element(*(Fraction(v) for v in c)))
    return out


def _isotropic_hash_vector(h: AntiHermForm, bound: int, single_bound: int = 4):
    """Exact search for isotropic vectors supported on 3 or 4 slots: sums
    of sandwich values gamma(q) z_m q over two slots are hashed and matched
    against the negated contribution of one or two further slots."""
    alg = h.algebra
    r = h.rank
    if r < 3:
        return None
    quats = _raw_quaternions(alg, bound)
    singles = _raw_quaternions(alg, single_bound)
    zero = alg.element(0, 0, 0, 0)

    def sandwich_table(z, qs):
        return [(q, q.conj() * z * q) for q in qs]

    tables = [sandwich_table(z, quats) for z in h.diag]
    single_tables = [sandwich_table(z, singles) for z in h.diag]

    def key(x: Quaternion):
        return tuple(x.coords)

    pair_dicts = {}
    for s in range(r):
        for t in range(s + 1, r):
            d = {}
            for p, ap in tables[s]:
                for q, aq in tables[t]:
                    d.setdefault(key(ap + aq), (p, q))
            pair_dicts[(s, t)] = d

    def build(assign):
        vec = [zero] * r
        for idx, q in assign:
            vec[idx] = q
        if all(q.is_zero() for q in vec):
            return None
        return vec

    # 3-slot support: pair (s, t) against a single slot u
    for (s, t), d in pair_dicts.items():
        for u in range(r):
            if u in (s, t):
                continue
            for w, aw in single_tables[u]:
                hit = d.get(key(-aw))
                if hit is not None:
                    vec = build([(s, hit[0]), (t, hit[1]), (u, w)])
                    if vec is not None:
                        return vec
    # 4-slot support: two disjoint pairs
    pairs = sorted(pair_dicts)
    for i1 in range(len(pairs)):
        s, t = pairs[i1]
        d1 = pair_dicts[pairs[i1]]
        for i2 in range(i1 + 1, len(pairs)):
            u, v2 = pairs[i2]
            if len({s, t, u, v2}) != 4:
                continue
            d2 = pair_dicts[pairs[i2]]
            for k2, (w1, w2) in d2.items():
                neg = tuple(-c for c in k2)
                hit = d1.get(neg)
                if hit is not None:
                    vec = build([(s, hit[0]), (t, hit[1]), (u, w1), (v2, w2)])
                    if vec is not None:
                        return vec
    return None


def _square_ratio(x: Quaternion, y: Quaternion):
    """c > 0 rational with x = c^2 * y, or None."""
    for cx, cy in zip(x.coords, y.coords):
        if cy:
            ratio = Fraction(cx) / Fraction(cy)
            if ratio <= 0:
                return None
            num, den = ratio.numerator, ratio.denominator
            rn, rd = isqrt(num), isqrt(den)
            if rn * rn != num or rd * rd != den:
                return None
            c = Fraction(rn, rd)
            if all(Fraction(a) == c * c * Fraction(b)
                   for a, b in zip(x.coords, y.coords)):
                return c
            return None
    return None


def hyperbolicity_certificate(h: AntiHermForm,
                              bound: int = DEFAULT_SEARCH_BOUND
                              ) -> HyperbolicityResult:
    """Search a totally isotropic half-rank subspace, splitting hyperbolic
    planes off recursively; the witness is re-verified exactly."""
    if h.rank % 2:
        return HyperbolicityResult("anisotropic-at-bound")
    alg = h.algebra
    r0 = h.rank
    zero = alg.element(0, 0, 0, 0)
    # work with the Gram (diagonal) and a basis in original coordinates
    basis = [[alg.one() if s == t else zero for t in range(r0)]
             for s in range(r0)]
    diag = list(h.diag)
    witness = []

    def gram_eval(x, y):
        acc = None
        for idx in range(r0):
            term = x[idx].conj() * h.diag[idx] * y[idx]
            acc = term if acc is None else acc + term
        return acc

    while diag:
        sub = AntiHermForm(tuple(diag), alg)
        found = None
        for b in (1, 2):
            if b > bound:
                break
            found = _isotropic_pair_vector(sub, b)
            if found is not None:
                break
        if found is None:
            found = _isotropic_hash_vector(sub, 1, single_bound=min(bound, 4))
        if found is None and bound >= 4:
            found = _isotropic_pair_vector(sub, 4)
        if found is None and bound > 4:
            found = _isotropic_pair_vector(sub, bound)
        if found is None and bound >= 2 and sub.rank <= 4:
            found = _isotropic_hash_vector(sub, 2, single_bound=2)
        if found is None:
            return HyperbolicityResult("anisotropic-at-bound")
        m = len(diag)
        v = [zero for _ in range(r0)]
        for idx in range(m):
            for k in range(r0):
                v[k] = v[k] + basis[idx][k] * found[idx]
        witness.append(tuple(v))
        # find w in the current span with h(v, w) invertible
        w = None
        for idx in range(m):
            cand = basis[idx]
            if gram_eval(v, cand).is_invertible():
                w = cand
                break
        if w is None:
            for idx in range(m):
                for q in _small_quaternions(alg, 2):
                    cand = [basis[idx][k] * q for k in range(r0)]
                    if gram_eval(v, cand).is_invertible():
                        w = cand
                        break
                if w is not None:
                    break
        if w is None:
            return HyperbolicityResult("unknown")
        beta = gram_eval(v, w)
        binv = _quat_inv(beta)
        hww = gram_eval(w, w)
        gamma_binv = _quat_inv(beta.conj())
        new_basis = []
        for idx in range(m):
            x = basis[idx]
            bcoef = binv * gram_eval(v, x)
            acoef = gamma_binv * (gram_eval(w, x) - hww * bcoef)
            proj = [x[k] - v[k] * acoef - w[k] * bcoef for k in range(r0)]
            new_basis.append(proj)
        # re-diagonalize the projected span; rank drops by exactly 2
        reduced = _rediagonalize(gram_eval, new_basis, alg, bound)
        if reduced is None:
            return HyperbolicityResult("unknown")
        basis, diag = reduced
        if len(diag) != m - 2:
            raise DegenerateForm("hyperbolic split lost the wrong rank")
    # exact verification of the witness
    for x in witness:
        for y in witness:
            val = gram_eval(list(x), list(y))
            assert val.is_zero(), "witness failed exact verification"
    return HyperbolicityResult("hyperbolic", tuple(witness))


def _rediagonalize(gram_eval, vectors, alg, bound):
    """Gram-Schmidt a spanning (possibly dependent) list of vectors against
    the ambient form; returns (orthogonal basis, diagonal values)."""
    basis = []
    diag = []
    pool = [v for v in vectors if not all(c.is_zero() for c in v)]
    while pool:
        piv = None
        for v in pool:
            if gram_eval(v, v).is_invertible():
                piv = v
                break
        if piv is None:
            mixed = False
            for s in range(len(pool)):
                for t in range(len(pool)):
                    if s == t:
                        continue
                    for q in _small_quaternions(alg, 1):
                        cand = [pool[s][k] + pool[t][k] * q
                                for k in range(len(pool[s]))]
                        if gram_eval(cand, cand).is_invertible():
                            pool[s] = cand
                            piv = cand
                            mixed = True
                            break
                    if mixed:
                        break
                if mixed:
                    break
            if piv is None:
                # remaining vectors span nothing nondegenerate: done if they
                # all pair to zero with each other
                for s in range(len(pool)):
                    for t in range(len(pool)):
                        if not gram_eval(pool[s], pool[t]).is_zero():
                            return None
                break
        d = gram_eval(piv, piv)
        basis.append(piv)
        diag.append(d)
        dinv = _quat_inv(d)
        nxt = []
        for v in pool:
            if v is piv:
                continue
            c = dinv * gram_eval(piv, v)
            w = [v[k] - piv[k] * c for k in range(len(v))]
            if not all(x.is_zero() for x in w):
                nxt.append(w)
        pool = nxt
    return basis, diag
