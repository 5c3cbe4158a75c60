"""Igusa-Clebsch invariants and the Siegel modular form dictionary.

Invariants of a Rosenhain-form curve come from the explicit quintic
polynomials in the three lambda parameters.  Invariants of a general
degree-5/6 input come from classical transvectants of the binary sextic
form; the linear combinations below were solved once against the
Rosenhain polynomials and are exact:

    I2  = -120 A
    I4  = -720 A^2 + 6750 B
    I6  = 8640 A^3 - 108000 A B + 202500 C
    I10 = disc(f)            (lc^2 * disc for degree-5 input)

with A = (f,f)_6, i = (f,f)_4, B = (i,i)_4, C = (i,(i,i)_2)_4.
The two routes agree exactly on every Rosenhain input, and I10 equals
the monic-convention discriminant throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import DomainError, ProductLocusError
from .qpoly import Poly, discriminant

# ---------------------------------------------------------------------------
# invariant containers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IgusaInvariants:
    """Weighted tuple (I2, I4, I6, I10) of weights (2, 4, 6, 10)."""

    I2: object
    I4: object
    I6: object
    I10: object

    @property
    def degenerate(self):
        return self.I10 == 0

    def astuple(self):
        return (self.I2, self.I4, self.I6, self.I10)

    def scale(self, r):
        """The weighted action I_k -> r^k I_k (same projective point)."""
        return IgusaInvariants(r**2 * self.I2, r**4 * self.I4,
                               r**6 * self.I6, r**10 * self.I10)

    def same_projective_point(self, other):
        """Equality in weighted projective space with weights (2,4,6,10)."""
        pairs = ((self.I2, other.I2, 2), (self.I4, other.I4, 4),
                 (self.I6, other.I6, 6), (self.I10, other.I10, 10))
        # find a weight where both are nonzero to normalize
        for a, b, w in pairs:
            if a != 0 and b != 0:
                # compare a^(k/w) ... use cross powers to stay polynomial
                break
        else:
            return all(a == 0 and b == 0 for a, b, _ in pairs)
        ref_a, ref_b, ref_w = a, b, w
        for a, b, w in pairs:
            if (a == 0) != (b == 0):
                return False
            if a == 0:
                continue
            if a**ref_w * ref_b**w != b**ref_w * ref_a**w:
                return False
        return True


@dataclass(frozen=True)
class AbsoluteInvariants:
    j1: object
    j2: object
    j3: object

    def astuple(self):
        return (self.j1, self.j2, self.j3)


@dataclass(frozen=True)
class SiegelForms:
    """Values of the even generators (psi4, psi6, chi10, chi12)."""

    psi4: object
    psi6: object
    chi10: object
    chi12: object

    def astuple(self):
        return (self.psi4, self.psi6, self.chi10, self.chi12)


@dataclass(frozen=True)
class DerivedForms:
    chi35_squared: object
    q: object


# ---------------------------------------------------------------------------
# Rosenhain route
# ---------------------------------------------------------------------------


def rosenhain_poly(l1, l2, l3):
    """The monic quintic X(X-1)(X-l1)(X-l2)(X-l3)."""
    return Poly.from_roots([0, 1, l1, l2, l3])


def igusa_from_rosenhain(l1, l2, l3):
    """Invariants of Y^2 = X(X-1)(X-l1)(X-l2)(X-l3), exact in the lambdas.

    Repeated or 0/1 lambdas are not rejected: they surface as I10 = 0
    and the ``degenerate`` flag.
    """
    e1 = l1 + l2 + l3
    e2 = l1 * l2 + l1 * l3 + l2 * l3
    e3 = l1 * l2 * l3
    I2 = 40 * e3 - 16 * (1 + e1) * (e3 + e2) + 6 * (e2 + e1) ** 2
    I4 = (-12 * e1**3 * e3 + 4 * e1**2 * e2**2 - 4 * e1**2 * e2 * e3
          + 4 * e1**2 * e3**2 + 12 * e1**2 * e3 - 4 * e1 * e2**2
          + 44 * e1 * e2 * e3 - 12 * e2**3 + 12 * e2**2 * e3
          - 12 * e2 * e3**2 - 12 * e1 * e3 + 4 * e2**2 - 72 * e3**2)
    I6 = (-24 * e1**3 * e3 + 10 * e1**2 * e3**2 + 32 * e2**2 * e3
          + 150 * e2 * e3**2 + 8 * e1**2 * e2**2 * e3**2
          + 118 * e1**3 * e2 * e3 - 194 * e1**2 * e2 * e3**2
          + 118 * e1 * e2**3 * e3 - 66 * e1 * e2**2 * e3**2
          + 76 * e1 * e2 * e3**3 - 194 * e1 * e2**2 * e3
          + 412 * e1 * e2 * e3**2 + 20 * e1**4 * e2 * e3
          - 36 * e1**3 * e2**2 * e3 + 20 * e1**3 * e2 * e3**2
          - 8 * e1**2 * e2**3 * e3 + 8 * e1**2 * e2**2 - 252 * e3**3
          - 36 * e3**4 - 24 * e2**5 + 48 * e2**4 - 24 * e2**3
          + 8 * e1**4 * e2**2 - 8 * e1**3 * e2**3 + 8 * e1**2 * e2**4
          - 8 * e1**3 * e2**2 - 36 * e1**2 * e2**3 + 20 * e1 * e2**4
          + 20 * e1 * e2**3 - 36 * e3**2 - 24 * e1**5 * e3
          + 48 * e1**4 * e3**2 - 24 * e1**3 * e3**3 + 24 * e1**4 * e3
          - 136 * e1**3 * e3**2 + 32 * e1**2 * e3**3 + 24 * e2**4 * e3
          - 24 * e2**3 * e3**2 + 150 * e1 * e3**3 - 136 * e2**3 * e3
          + 10 * e2**2 * e3**2 - 42 * e2 * e3**3 - 42 * e1 * e3**2
          + 76 * e1 * e2 * e3 - 66 * e1**2 * e2 * e3)
    I10 = (e3**2 * (l3 - 1) ** 2 * (l2 - 1) ** 2 * (l2 - l3) ** 2
           * (l1 - 1) ** 2 * (l1 - l3) ** 2 * (l1 - l2) ** 2)
    return IgusaInvariants(I2, I4, I6, I10)


# ---------------------------------------------------------------------------
# general sextic route via transvectants
# ---------------------------------------------------------------------------


def _dx(c, n):
    return [i * c[i] for i in range(1, n + 1)]


def _dy(c, n):
    return [(n - i) * c[i] for i in range(n)]


def _mixed(c, n, kx, ky):
    for _ in range(kx):
        c = _dx(c, n)
        n -= 1
    for _ in range(ky):
        c = _dy(c, n)
        n -= 1
    return c


def _form_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return out


def _transvectant(fc, m, gc, n, k):
    pref = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    acc = None
    for j in range(k + 1):
        term = _form_mul(_mixed(list(fc), m, k - j, j),
                         _mixed(list(gc), n, j, k - j))
        sign = (-1) ** j * comb(k, j)
        term = [sign * t for t in term]
        acc = term if acc is None else [x + y for x, y in zip(acc, term)]
    return [pref * t for t in acc]


def igusa_from_sextic(f):
    """Invariants of Y^2 = f(X) for deg f in {5, 6}.

    Exact over Fraction coefficients; also works with complex
    coefficients (the transvectant arithmetic is generic).
    """
    if not isinstance(f, Poly):
        f = Poly(f)
    deg = f.degree()
    if deg not in (5, 6):
        raise DomainError(f"expected a degree-5 or degree-6 polynomial, got {deg}")
    cs = [Fraction(c) if isinstance(c, int) else c for c in f.coeffs]
    c6 = cs + [0] * (7 - len(cs))
    A = _transvectant(c6, 6, c6, 6, 6)[0]
    i4 = _transvectant(c6, 6, c6, 6, 4)
    B = _transvectant(i4, 4, i4, 4, 4)[0]
    H = _transvectant(i4, 4, i4, 4, 2)
    C = _transvectant(i4, 4, H, 4, 4)[0]
    I2 = -120 * A
    I4 = -720 * A**2 + 6750 * B
    I6 = 8640 * A**3 - 108000 * A * B + 202500 * C
    I10 = discriminant(f)
    if deg == 5:
        I10 = f.lead() ** 2 * I10
    return IgusaInvariants(I2, I4, I6, I10)


# ---------------------------------------------------------------------------
# absolute invariants and the Siegel dictionary
# ---------------------------------------------------------------------------


def _exact(v):
    """Keep integer inputs exact across divisions."""
    return Fraction(v) if isinstance(v, int) else v


def absolute_invariants(inv):
    """(j1, j2, j3) = (I2^5/I10, I4 I2^3/I10, I6 I2^2/I10)."""
    if inv.I10 == 0:
        raise DomainError("I10 = 0: the sextic is singular, no curve")
    I2, I4, I6, I10 = (_exact(v) for v in inv.astuple())
    return AbsoluteInvariants(I2**5 / I10, I4 * I2**3 / I10, I6 * I2**2 / I10)


def igusa_from_absolute(j):
    """A representative with I2 = 1; requires j1 != 0."""
    if j.j1 == 0:
        raise DomainError("j1 = 0 has no representative with I2 = 1")
    j1, j2, j3 = (_exact(v) for v in j.astuple())
    return IgusaInvariants(Fraction(1), j2 / j1, j3 / j1, 1 / j1)


def siegel_from_igusa(inv):
    """Invert the dictionary: even Siegel form values from invariants."""
    I2, I4, I6, I10 = (_exact(v) for v in inv.astuple())
    psi4 = I4 / Fraction(4)
    psi6 = (I2 * I4 - 3 * I6) / Fraction(8)
    chi10 = -I10 / Fraction(2**14)
    chi12 = I2 * I10 / Fraction(3 * 2**17)
    return SiegelForms(psi4, psi6, chi10, chi12)


def igusa_from_siegel(s):
    """The dictionary itself; needs chi10 != 0."""
    if s.chi10 == 0:
        raise ProductLocusError(
            "chi10 = 0: abelian surface is a product of elliptic curves")
    psi4, psi6, chi10, chi12 = (_exact(v) for v in s.astuple())
    I2 = -24 * chi12 / chi10
    I4 = 4 * psi4
    I6 = -Fraction(8, 3) * psi6 - 32 * psi4 * chi12 / chi10
    I10 = -(2**14) * chi10
    return IgusaInvariants(I2, I4, I6, I10)


def q_form(s):
    """The degree-60 polynomial Q in the even generators.

    Q is 2^12 3^9 chi35^2 / chi10 with the chi10 factor cancelled
    symbolically, hence well-defined on the chi10 = 0 boundary.
    """
    p4, p6, c10, c12 = s.astuple()
    return (
        2**24 * 3**15 * c12**5
        - 2**13 * 3**9 * p4**3 * c12**4
        - 2**13 * 3**9 * p6**2 * c12**4
        + 3**3 * p4**6 * c12**3
        - 2 * 3**3 * p4**3 * p6**2 * c12**3
        - 2**14 * 3**8 * p4**2 * p6 * c10 * c12**3
        - 2**23 * 3**12 * 5**2 * p4 * c10**2 * c12**3
        + 3**3 * p6**4 * c12**3
        + 2**11 * 3**6 * 37 * p4**4 * c10**2 * c12**2
        + 2**11 * 3**6 * 5 * 7 * p4 * p6**2 * c10**2 * c12**2
        - 2**23 * 3**9 * 5**3 * p6 * c10**3 * c12**2
        - 3**2 * p4**7 * c10**2 * c12
        + 2 * 3**2 * p4**4 * p6**2 * c10**2 * c12
        + 2**11 * 3**5 * 5 * 19 * p4**3 * p6 * c10**3 * c12
        + 2**20 * 3**8 * 5**3 * 11 * p4**2 * c10**4 * c12
        - 3**2 * p4 * p6**4 * c10**2 * c12
        + 2**11 * 3**5 * 5**2 * p6**3 * c10**3 * c12
        - 2 * p4**6 * p6 * c10**3
        - 2**12 * 3**4 * p4**5 * c10**4
        + 2**2 * p4**3 * p6**3 * c10**3
        + 2**12 * 3**4 * 5**2 * p4**2 * p6**2 * c10**4
        + 2**21 * 3**7 * 5**4 * p4 * p6 * c10**5
        - 2 * p6**5 * c10**3
        + 2**32 * 3**9 * 5**5 * c10**6
    )


def chi35_squared(s):
    """chi35^2 = chi10 * Q / (2^12 3^9), exact."""
    return s.chi10 * q_form(s) / Fraction(2**12 * 3**9)


def derived_forms(s):
    return DerivedForms(chi35_squared=chi35_squared(s), q=q_form(s))


def humbert_predicates(s):
    """Membership flags for the Humbert surfaces H_1 and H_4.

    H_1 (product of elliptic curves) is chi10 = 0; H_4 (Bolza extra
    involution) is Q = 0.
    """
    return {"on_H1": s.chi10 == 0, "on_H4": q_form(s) == 0}
