"""Exact coefficient arithmetic for the q-Brauer algebra.

The generic ground ring is the field of fractions of Z[q^{±1}, r^{±1}],
represented by :class:`RatFunc` (a quotient of two :class:`LaurentPoly`
values kept in a canonical coprime form).  Concrete ground fields for
specialised computations are prime fields (:class:`Fp`) and cyclotomic
fields Q(zeta_m) (:class:`Cyclo`); a :class:`Specialization` maps generic
coefficients into such a field by substituting invertible images for q
and r.

All coefficient classes overload the usual arithmetic operators, are
immutable and hashable, and expose ``is_zero``.  Division is exact field
division everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import math

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "Fp",
    "Cyclo",
    "Specialization",
    "quantum_char",
    "DenominatorVanishes",
    "NotInvertible",
    "INFINITY",
]

INFINITY = math.inf


class DenominatorVanishes(ArithmeticError):
    """A denominator (or a required inverse) vanished under a specialization."""


class NotInvertible(ArithmeticError):
    """Division by a non-invertible coefficient."""


# ---------------------------------------------------------------------------
# integer polynomial helpers
#
# A "q-poly" is a dict {exponent: int} with non-negative exponents and no
# zero values.  A "biv poly" is a dict {(dq, dr): int}, likewise with
# non-negative exponents.  These are only used inside gcd computation and
# exact division; LaurentPoly handles the general (possibly negative
# exponent) case.
# ---------------------------------------------------------------------------


def _uni_trim(p):
    return {e: c for e, c in p.items() if c}


def _uni_deg(p):
    return max(p) if p else -1


def _uni_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = out.get(e, 0) + ca * cb
    return _uni_trim(out)


def _uni_add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return _uni_trim(out)


def _uni_scale(a, c):
    if c == 0:
        return {}
    return {e: v * c for e, v in a.items()}


def _uni_content(p):
    g = 0
    for c in p.values():
        g = math.gcd(g, abs(c))
    return g


def _uni_primitive(p):
    g = _uni_content(p)
    if g in (0, 1):
        return dict(p)
    return {e: c // g for e, c in p.items()}


def _uni_divexact(a, b):
    """Exact division of integer q-polys; raises if not exact."""
    if not b:
        raise ZeroDivisionError("q-poly division by zero")
    a = dict(a)
    out = {}
    db, lb = _uni_deg(b), b[_uni_deg(b)]
    while a:
        da = _uni_deg(a)
        la = a[da]
        if da < db or la % lb:
            raise ArithmeticError("inexact q-poly division")
        e, c = da - db, la // lb
        out[e] = c
        for eb, cb in b.items():
            ne = eb + e
            a[ne] = a.get(ne, 0) - cb * c
            if not a[ne]:
                del a[ne]
    return out


def _uni_gcd(a, b):
    """gcd in Z[q] via a primitive polynomial remainder sequence."""
    a, b = _uni_trim(a), _uni_trim(b)
    if not a:
        return _scale_positive_uni(b)
    if not b:
        return _scale_positive_uni(a)
    ca, cb = _uni_content(a), _uni_content(b)
    cg = math.gcd(ca, cb)
    a, b = _uni_primitive(a), _uni_primitive(b)
    while b:
        a, b = b, _uni_primitive(_uni_pseudo_rem(a, b))
    g = _uni_scale(_uni_primitive(a), cg)
    return _scale_positive_uni(g)


def _scale_positive_uni(p):
    if p and p[_uni_deg(p)] < 0:
        return {e: -c for e, c in p.items()}
    return dict(p)


def _uni_pseudo_rem(a, b):
    da, db = _uni_deg(a), _uni_deg(b)
    if da < db:
        return dict(a)
    lb = b[db]
    rem = dict(a)
    for _ in range(da - db + 1):
        dr = _uni_deg(rem)
        if dr < db:
            rem = _uni_scale(rem, lb)
            continue
        lr = rem[dr]
        rem = _uni_scale(rem, lb)
        shift = dr - db
        for eb, cb in b.items():
            e = eb + shift
            rem[e] = rem.get(e, 0) - cb * lr
            if not rem[e]:
                del rem[e]
    return rem


# bivariate polynomials, viewed as polynomials in r with q-poly coefficients


def _biv_to_rform(p):
    out = {}
    for (dq, dr), c in p.items():
        out.setdefault(dr, {})[dq] = c
    return out


def _rform_to_biv(p):
    out = {}
    for dr, qp in p.items():
        for dq, c in qp.items():
            if c:
                out[(dq, dr)] = c
    return out


def _rform_deg(p):
    return max(p) if p else -1


def _rform_trim(p):
    return {d: qp for d, qp in ((d, _uni_trim(qp)) for d, qp in p.items()) if qp}


def _rform_content(p):
    g = {}
    for qp in p.values():
        g = _uni_gcd(g, qp)
        if _uni_deg(g) == 0 and g.get(0) == 1:
            break
    return g


def _rform_map(p, f):
    return _rform_trim({d: f(qp) for d, qp in p.items()})


def _rform_pseudo_rem(a, b):
    da, db = _rform_deg(a), _rform_deg(b)
    lb = b[db]
    rem = {d: dict(qp) for d, qp in a.items()}
    for _ in range(da - db + 1):
        dr = _rform_deg(rem)
        if dr < db:
            rem = _rform_map(rem, lambda qp: _uni_mul(qp, lb))
            continue
        lr = rem[dr]
        rem = _rform_map(rem, lambda qp: _uni_mul(qp, lb))
        shift = dr - db
        for d, qp in b.items():
            t = _uni_mul(qp, lr)
            nd = d + shift
            rem[nd] = _uni_add(rem.get(nd, {}), _uni_scale(t, -1))
        rem = _rform_trim(rem)
    return rem


def _biv_gcd(a, b):
    """gcd in Z[q, r] by content/primitive-part recursion on r."""
    a, b = {k: v for k, v in a.items() if v}, {k: v for k, v in b.items() if v}
    if not a:
        return _biv_positive(b)
    if not b:
        return _biv_positive(a)
    ra, rb = _biv_to_rform(a), _biv_to_rform(b)
    ca, cb = _rform_content(ra), _rform_content(rb)
    cg = _uni_gcd(ca, cb)
    pa = _rform_map(ra, lambda qp: _uni_divexact(qp, ca))
    pb = _rform_map(rb, lambda qp: _uni_divexact(qp, cb))
    if _rform_deg(pa) < _rform_deg(pb):
        pa, pb = pb, pa
    while pb:
        rem = _rform_pseudo_rem(pa, pb)
        c = _rform_content(rem)
        pa, pb = pb, (_rform_map(rem, lambda qp: _uni_divexact(qp, c)) if rem else {})
    g = _rform_map(pa, lambda qp: _uni_mul(qp, cg))
    return _biv_positive(_rform_to_biv(g))


def _biv_positive(p):
    """Normalise sign so the graded-lex leading coefficient is positive."""
    if not p:
        return {}
    lead = max(p, key=lambda k: (k[0] + k[1], k[0]))
    if p[lead] < 0:
        return {k: -v for k, v in p.items()}
    return dict(p)


def _biv_divexact(a, b):
    """Exact multivariate division in Z[q, r]; raises if not exact."""
    if not b:
        raise ZeroDivisionError("poly division by zero")
    a = dict(a)
    out = {}
    kb = max(b, key=lambda k: (k[0] + k[1], k[0]))
    cb = b[kb]
    while a:
        ka = max(a, key=lambda k: (k[0] + k[1], k[0]))
        ca = a[ka]
        dq, dr = ka[0] - kb[0], ka[1] - kb[1]
        if dq < 0 or dr < 0 or ca % cb:
            raise ArithmeticError("inexact poly division")
        c = ca // cb
        out[(dq, dr)] = c
        for k, v in b.items():
            nk = (k[0] + dq, k[1] + dr)
            a[nk] = a.get(nk, 0) - v * c
            if not a[nk]:
                del a[nk]
    return out


# ---------------------------------------------------------------------------
# Laurent polynomials in q and r over Z
# ---------------------------------------------------------------------------


class LaurentPoly:
    """An element of Z[q^{±1}, r^{±1}] as a dict {(q_exp, r_exp): coeff}."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls({(0, 0): int(c)})

    @classmethod
    def monomial(cls, c, dq=0, dr=0):
        return cls({(dq, dr): int(c)})

    @classmethod
    def gen_q(cls, e=1):
        return cls({(e, 0): 1})

    @classmethod
    def gen_r(cls, e=1):
        return cls({(0, e): 1})

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): 1}

    def min_exps(self):
        if not self.terms:
            return (0, 0)
        return (min(k[0] for k in self.terms), min(k[1] for k in self.terms))

    def shifted(self, dq, dr):
        if not (dq or dr):
            return self
        return LaurentPoly({(k[0] + dq, k[1] + dr): v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: v * other for k, v in self.terms.items()})
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = (ka[0] + kb[0], ka[1] + kb[1])
                out[k] = out.get(k, 0) + va * vb
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("LaurentPoly powers must be non-negative")
        out, base = LaurentPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def evaluate(self, q_img, r_img, one):
        """Evaluate at invertible field elements q_img, r_img."""
        q_inv = one / q_img
        r_inv = one / r_img
        total = one - one
        for (dq, dr), c in self.terms.items():
            t = one * c
            t = t * _int_pow(q_img if dq >= 0 else q_inv, abs(dq), one)
            t = t * _int_pow(r_img if dr >= 0 else r_inv, abs(dr), one)
            total = total + t
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (dq, dr), c in sorted(self.terms.items()):
            s = str(c)
            if dq:
                s += f"*q^{dq}" if dq != 1 else "*q"
            if dr:
                s += f"*r^{dr}" if dr != 1 else "*r"
            bits.append(s)
        return " + ".join(bits)


def _int_pow(x, e, one):
    out = one
    for _ in range(e):
        out = out * x
    return out


# ---------------------------------------------------------------------------
# rational functions in q and r
# ---------------------------------------------------------------------------


class RatFunc:
    """Element of Q(q, r) as num/den with a canonical representative.

    Canonical form: den is a genuine polynomial (minimal q and r exponents
    zero) with positive graded-lex leading coefficient, num and den have no
    common polynomial factor, and all monomial units have been absorbed
    into num.  Equality is therefore plain structural equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _canonical=False):
        if den is None:
            den = LaurentPoly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if not _canonical:
            num, den = _rat_canonical(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_int(cls, c):
        return cls(LaurentPoly.const(c))

    @classmethod
    def from_fraction(cls, fr):
        fr = Fraction(fr)
        return cls(LaurentPoly.const(fr.numerator), LaurentPoly.const(fr.denominator))

    @classmethod
    def q(cls, e=1):
        return cls(LaurentPoly.gen_q(e))

    @classmethod
    def r(cls, e=1):
        return cls(LaurentPoly.gen_r(e))

    # -- structure ------------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if self.is_zero() or other.is_zero():
            return RatFunc.from_int(0)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if other.is_zero():
            raise NotInvertible("division by zero RatFunc")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        return other / self

    def inv(self):
        return RatFunc.from_int(1) / self

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        out = RatFunc.from_int(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def _rat_canonical(num, den):
    if num.is_zero():
        return LaurentPoly(), LaurentPoly.const(1)
    # pull all monomial units out of den into num
    dq, dr = den.min_exps()
    den = den.shifted(-dq, -dr)
    num = num.shifted(-dq, -dr)
    if not den.is_one():
        nq, nr = num.min_exps()
        npoly = num.shifted(-nq, -nr).terms
        g = _biv_gcd(npoly, den.terms)
        if g != {(0, 0): 1}:
            npoly = _biv_divexact(npoly, g)
            den = LaurentPoly(_biv_divexact(den.terms, g))
        num = LaurentPoly(npoly).shifted(nq, nr)
        dq, dr = den.min_exps()
        den = den.shifted(-dq, -dr)
        num = num.shifted(-dq, -dr)
    # fix sign via den's graded-lex leading coefficient
    lead = max(den.terms, key=lambda k: (k[0] + k[1], k[0]))
    if den.terms[lead] < 0:
        den, num = -den, -num
    # integer content reduction
    gn = 0
    for c in num.terms.values():
        gn = math.gcd(gn, abs(c))
    gd = 0
    for c in den.terms.values():
        gd = math.gcd(gd, abs(c))
    g = math.gcd(gn, gd)
    if g > 1:
        num = LaurentPoly({k: v // g for k, v in num.terms.items()})
        den = LaurentPoly({k: v // g for k, v in den.terms.items()})
    return num, den


# ---------------------------------------------------------------------------
# prime fields
# ---------------------------------------------------------------------------


class Fp:
    """An element of the prime field F_p."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def is_zero(self):
        return self.v == 0

    def is_one(self):
        return self.v == 1

    def _lift(self, other):
        if isinstance(other, int):
            return Fp(self.p, other)
        if isinstance(other, Fp) and other.p == self.p:
            return other
        raise TypeError(f"cannot coerce {other!r} into F_{self.p}")

    def __add__(self, other):
        other = self._lift(other)
        return Fp(self.p, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return Fp(self.p, -self.v)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        return Fp(self.p, self.v * other.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other.v == 0:
            raise NotInvertible(f"division by zero in F_{self.p}")
        return Fp(self.p, self.v * pow(other.v, self.p - 2, self.p))

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, e):
        if e < 0:
            return (Fp(self.p, 1) / self) ** (-e)
        return Fp(self.p, pow(self.v, e, self.p))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.v == other % self.p
        return isinstance(other, Fp) and self.p == other.p and self.v == other.v

    def __hash__(self):
        return hash(("Fp", self.p, self.v))

    def __repr__(self):
        return f"{self.v}"


# ---------------------------------------------------------------------------
# cyclotomic fields Q(zeta_m)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Coefficient tuple (low to high) of the m-th cyclotomic polynomial."""
    # x^m - 1 divided by the product of Phi_d for proper divisors d of m
    num = {0: -1, m: 1}
    for d in range(1, m):
        if m % d == 0:
            phi_d = dict(enumerate(cyclotomic_poly(d)))
            phi_d = _uni_trim(phi_d)
            num = _uni_divexact(num, phi_d)
    deg = _uni_deg(num)
    return tuple(num.get(i, 0) for i in range(deg + 1))


class Cyclo:
    """An element of Q(zeta_m), as a Fraction vector modulo Phi_m.

    ``Cyclo(1, ...)`` is plain Q, which is used as the exact rational field
    in specialisations that do not need a root of unity.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        self.m = m
        deg = len(cyclotomic_poly(m)) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = _cyclo_reduce(m, cs)
        cs += [Fraction(0)] * (deg - len(cs))
        self.coeffs = tuple(cs)

    @classmethod
    def from_fraction(cls, m, fr):
        return cls(m, [Fraction(fr)])

    @classmethod
    def zeta(cls, m, e=1):
        e %= m
        return cls(m, [Fraction(0)] * e + [Fraction(1)])

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def _lift(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo.from_fraction(self.m, other)
        if isinstance(other, Cyclo) and other.m == self.m:
            return other
        raise TypeError(f"cannot coerce {other!r} into Q(zeta_{self.m})")

    def __add__(self, other):
        other = self._lift(other)
        return Cyclo(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        n = len(self.coeffs)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        return Cyclo(self.m, _cyclo_reduce(self.m, prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return self * other._inverse()

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, e):
        if e < 0:
            return self._inverse() ** (-e)
        out = Cyclo.from_fraction(self.m, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def _inverse(self):
        if self.is_zero():
            raise NotInvertible(f"division by zero in Q(zeta_{self.m})")
        # extended Euclid in Q[x] against Phi_m
        phi = [Fraction(c) for c in cyclotomic_poly(self.m)]
        a = list(self.coeffs)
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(c != 0 for c in r1):
            q, rem = _qpoly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        # r0 is a nonzero constant gcd
        c = next(c for c in r0 if c != 0)
        inv = [x / c for x in s0]
        return Cyclo(self.m, _cyclo_reduce(self.m, inv))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_fraction(self.m, other)
        return isinstance(other, Cyclo) and self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Cyclo", self.m, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                bits.append(str(c))
            elif i == 1:
                bits.append(f"{c}*z" if c != 1 else "z")
            else:
                bits.append(f"{c}*z^{i}" if c != 1 else f"z^{i}")
        return " + ".join(bits)


def _cyclo_reduce(m, coeffs):
    phi = [Fraction(c) for c in cyclotomic_poly(m)]
    deg = len(phi) - 1
    cs = [Fraction(c) for c in coeffs]
    for i in range(len(cs) - 1, deg - 1, -1):
        c = cs[i]
        if c == 0:
            continue
        for j, p in enumerate(phi):
            cs[i - deg + j] -= c * p
    return cs[:deg]


def _qpoly_divmod(a, b):
    a = list(a)
    db = max(i for i, c in enumerate(b) if c != 0)
    q = [Fraction(0)] * max(1, len(a))
    while True:
        da = -1
        for i in range(len(a) - 1, -1, -1):
            if a[i] != 0:
                da = i
                break
        if da < db:
            break
        c = a[da] / b[db]
        q[da - db] += c
        for i in range(db + 1):
            a[da - db + i] -= c * b[i]
    return q, a


def _qpoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# ---------------------------------------------------------------------------
# specializations
# ---------------------------------------------------------------------------


class Specialization:
    """A ring map Z[q^{±1}, r^{±1}] -> F determined by images of q and r.

    ``field`` is one of ``("generic",)``, ``("qq",)``, ``("fp", p)`` or
    ``("cyclo", m)``.  The images must be invertible in F; applying the map
    to a RatFunc whose canonical denominator vanishes raises
    :class:`DenominatorVanishes`.
    """

    def __init__(self, field, q_img, r_img):
        self.field = tuple(field)
        self.q_img = q_img
        self.r_img = r_img
        for name, img in (("q", q_img), ("r", r_img)):
            if img.is_zero():
                raise DenominatorVanishes(f"image of {name} must be invertible")
        if self.one().is_zero():  # pragma: no cover - sanity
            raise ValueError("degenerate target field")

    @classmethod
    def generic(cls):
        return cls(("generic",), RatFunc.q(), RatFunc.r())

    @classmethod
    def rationals(cls, q_img, r_img):
        return cls(("qq",), Cyclo.from_fraction(1, q_img), Cyclo.from_fraction(1, r_img))

    @classmethod
    def prime_field(cls, p, q_img, r_img):
        return cls(("fp", p), Fp(p, q_img), Fp(p, r_img))

    @classmethod
    def cyclotomic(cls, m, q_img, r_img):
        return cls(("cyclo", m), q_img, r_img)

    def one(self):
        return self.q_img / self.q_img

    def zero(self):
        return self.q_img - self.q_img

    def from_int(self, c):
        return self.one() * c

    def __call__(self, x):
        if isinstance(x, int):
            return self.from_int(x)
        if not isinstance(x, RatFunc):
            return x
        one = self.one()
        den = x.den.evaluate(self.q_img, self.r_img, one)
        if den.is_zero():
            raise DenominatorVanishes(f"denominator {x.den!r} vanishes")
        if x.num.is_zero():
            return self.zero()
        num = x.num.evaluate(self.q_img, self.r_img, one)
        return num / den

    def tag(self):
        return (self.field, repr(self.q_img), repr(self.r_img))


def quantum_char(x):
    """Least m >= 1 with 1 + x + ... + x^{m-1} = 0, or INFINITY.

    For x = 1 this is the characteristic of the ground field; otherwise it
    is the multiplicative order of x when finite.
    """
    if isinstance(x, int):
        raise TypeError("quantum_char expects a field element")
    if isinstance(x, Fp):
        if x.is_zero():
            raise ValueError("quantum_char of 0 is undefined")
        if x.is_one():
            return x.p
        order = 1
        y = x
        while not y.is_one():
            y = y * x
            order += 1
        return order
    if isinstance(x, Cyclo):
        if x.is_zero():
            raise ValueError("quantum_char of 0 is undefined")
        if x.is_one():
            return INFINITY
        # roots of unity in Q(zeta_m) have order dividing lcm(2, m)
        lcm = x.m if x.m % 2 == 0 else 2 * x.m
        y = x
        for order in range(1, lcm + 1):
            if y.is_one():
                return order if order > 1 else INFINITY
            y = y * x
        return INFINITY
    if isinstance(x, RatFunc):
        if x.is_zero():
            raise ValueError("quantum_char of 0 is undefined")
        if x.is_one():
            return INFINITY
        if x == RatFunc.from_int(-1):
            return 2
        return INFINITY
    raise TypeError(f"unsupported coefficient type {type(x)!r}")
