"""Exact scalar and univariate polynomial algebra.

Scalars are plain Python numbers: ``fractions.Fraction`` (or ``int``) for
exact work, ``complex`` for numeric work.  ``Poly`` is a dense univariate
polynomial over any such coefficient ring, stored lowest degree first.
Coefficients may themselves be ``Poly`` instances, which is how the few
bivariate computations in this package (models over Q[t], the epsilon
limit) are carried out.

Everything here is immutable and pure; no operation ever rounds a
Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .errors import DomainError, IdentityViolationError


def _is_zero(c):
    """Zero test that works for numbers and nested Poly coefficients."""
    if isinstance(c, Poly):
        return not c.coeffs
    return c == 0


class GaussianRational:
    """Exact complex number with Fraction real and imaginary parts.

    Drop-in replacement for ``complex`` in the reconstruction pipeline:
    it supports the field operations, integer powers, abs() (as float),
    and mixes with int/Fraction operands, so the generic formulas in the
    theta and invariant modules run on it unchanged.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _coerce(cls, v):
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, (int, Fraction)):
            return cls(v)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational((self.re * o.re + self.im * o.im) / n,
                                (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise DomainError("GaussianRational powers must be integers >= 0")
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __abs__(self):
        return abs(complex(self))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def limit(self, digits=50):
        bound = 10**digits
        return GaussianRational(self.re.limit_denominator(bound),
                                self.im.limit_denominator(bound))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


class Poly:
    """Dense univariate polynomial, coefficient list lowest degree first.

    The zero polynomial has an empty coefficient list; otherwise the
    leading (last) coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def x(cls, coeff=1, power=1):
        """coeff * x**power"""
        return cls([0] * power + [coeff])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def from_roots(cls, roots, lead=1):
        p = cls([lead])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    # -- basic structure ----------------------------------------------

    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        # allow comparison against a scalar constant
        if not self.coeffs:
            return _is_zero(other)
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly([-other]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if _is_zero(other):
                return Poly()
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if _is_zero(ca):
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative polynomial power")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value):
        """Horner evaluation; value may be a scalar or a Poly."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, k):
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Poly([0] * k + list(self.coeffs))

    def compose_linear(self, alpha, beta):
        """p(alpha*x + beta), computed by Horner over Poly arithmetic."""
        return self(Poly([beta, alpha]))

    def map_coeffs(self, fn):
        return Poly([fn(c) for c in self.coeffs])

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Poly([Fraction(c, 1) / lc if isinstance(c, int) else c / lc
                     for c in self.coeffs])

    def divmod(self, other):
        """Exact division with remainder (coefficients must form a field)."""
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        q = []
        rem = list(self.coeffs)
        dlc = other.coeffs[-1]
        dd = other.degree()
        while len(rem) - 1 >= dd and rem:
            c = rem[-1] / dlc
            k = len(rem) - 1 - dd
            q.append(c)
            for i, oc in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * oc
            rem.pop()
        q.reverse()
        return Poly(q), Poly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]


# ---------------------------------------------------------------------------
# exact resultants and discriminants
# ---------------------------------------------------------------------------


def _clear_denominators(p):
    """Return (integer-coefficient Poly, positive denominator d) with p = P/d."""
    dens = []
    for c in p.coeffs:
        f = Fraction(c)
        dens.append(f.denominator)
    d = 1
    for q in dens:
        d = d * q // _int_gcd(d, q)
    ints = [int(Fraction(c) * d) for c in p.coeffs]
    return Poly(ints), d


def _bareiss_det(m):
    """Fraction-free determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(p, q):
    """Resultant of two nonzero polynomials over Q, exact.

    Computed as the Sylvester determinant of the denominator-cleared
    integer polynomials, then rescaled.
    """
    if not isinstance(p, Poly) or not isinstance(q, Poly):
        raise DomainError("resultant expects Poly arguments")
    if p.is_zero() or q.is_zero():
        raise DomainError("resultant of the zero polynomial is undefined")
    m, n = p.degree(), q.degree()
    if m == 0:
        return Fraction(p.coeffs[0]) ** n
    if n == 0:
        return Fraction(q.coeffs[0]) ** m
    P, dp = _clear_denominators(p)
    Q, dq = _clear_denominators(q)
    size = m + n
    rows = []
    pc = list(reversed(P.coeffs))  # highest first
    qc = list(reversed(Q.coeffs))
    for i in range(n):
        rows.append([0] * i + pc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qc + [0] * (size - n - 1 - i))
    det = _bareiss_det(rows)
    return Fraction(det, dp**n * dq**m)


def discriminant(p):
    """Discriminant with the monic convention.

    For monic p this equals prod_{i<j} (r_i - r_j)^2 exactly; in general
    it is (-1)^(d(d-1)/2) * res(p, p') / lc(p).
    """
    d = p.degree()
    if d < 2:
        raise DomainError("discriminant needs degree >= 2")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / Fraction(p.lead())


# ---------------------------------------------------------------------------
# gcd and squarefree structure over Q
# ---------------------------------------------------------------------------


def _int_content(p):
    c = 0
    for a in p.coeffs:
        c = _int_gcd(c, abs(a))
    return c or 1


def _primitive(p):
    c = _int_content(p)
    return Poly([a // c for a in p.coeffs])


def poly_gcd(p, q):
    """Monic gcd over Q via a primitive pseudo-remainder sequence."""
    if p.is_zero():
        return q.monic() if not q.is_zero() else Poly()
    if q.is_zero():
        return p.monic()
    a, _ = _clear_denominators(p)
    b, _ = _clear_denominators(q)
    a, b = _primitive(a), _primitive(b)
    if a.degree() < b.degree():
        a, b = b, a
    while not b.is_zero():
        # pseudo-remainder keeps everything over Z
        delta = a.degree() - b.degree() + 1
        r = (a * (b.lead() ** delta)) % b.map_coeffs(Fraction)
        r = Poly([Fraction(c) for c in r.coeffs])
        R, _ = _clear_denominators(r)
        a, b = b, _primitive(R) if not R.is_zero() else Poly()
    return a.map_coeffs(Fraction).monic()


def squarefree_decomposition(p):
    """Yun's algorithm: return [(g_1, 1), (g_2, 2), ...] with p = lc * prod g_i^i.

    Each g_i is monic and squarefree; factors of multiplicity i that are
    trivial (g_i = 1) are omitted.
    """
    if p.degree() < 1:
        return []
    p = p.monic()
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = (p // a).monic()
    c = dp // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree() > 0:
        g = poly_gcd(b, d)
        if g.degree() > 0:
            out.append((g, i))
        b = (b // g).monic()
        c = d // g
        d = c - b.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# formal epsilon expansions
# ---------------------------------------------------------------------------


class EpsSeries:
    """Finite Laurent expansion in a formal parameter eps.

    Terms live in a dict {power: coefficient}; coefficients may be
    scalars or Poly values.  Supports the ring operations needed to
    carry out explicit scaling limits.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for k, v in (terms or {}).items():
            if not _is_zero(v):
                out[k] = v
        self.terms = out

    @classmethod
    def monomial(cls, coeff, power=0):
        return cls({power: coeff})

    def __add__(self, other):
        if not isinstance(other, EpsSeries):
            other = EpsSeries.monomial(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return EpsSeries(out)

    __radd__ = __add__

    def __neg__(self):
        return EpsSeries({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, EpsSeries):
            other = EpsSeries.monomial(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, EpsSeries):
            other = EpsSeries.monomial(other)
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
        return EpsSeries(out)

    __rmul__ = __mul__

    def coeff(self, power):
        return self.terms.get(power, 0)

    def min_power(self):
        return min(self.terms) if self.terms else 0


def laurent_limit(expr, order=0):
    """Coefficient of eps**order, requiring all lower powers to vanish.

    Raises IdentityViolationError if any power below ``order`` survives:
    the scaling used to build ``expr`` was then wrong.
    """
    if not isinstance(expr, EpsSeries):
        raise DomainError("laurent_limit expects an EpsSeries")
    bad = {k: v for k, v in expr.terms.items() if k < order}
    if bad:
        raise IdentityViolationError(
            f"eps powers below {order} survive the limit: {sorted(bad)}")
    return expr.coeff(order)
