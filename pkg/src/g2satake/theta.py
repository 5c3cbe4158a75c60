"""Genus-two theta constants with half-integer characteristics.

A characteristic is stored as four integers (m1, m2, n1, n2) in {0, 1},
meaning the column vectors a = (m1/2, m2/2) (top) and b = (n1/2, n2/2)
(bottom).  The ten even characteristics are kept in the fixed order
theta_1 .. theta_10 that every downstream index computation relies on:

    theta_1 = [00;00]   theta_2 = [00;hh]   theta_3  = [00;h0]
    theta_4 = [00;0h]   theta_5 = [h0;00]   theta_6  = [h0;0h]
    theta_7 = [0h;00]   theta_8 = [hh;00]   theta_9  = [0h;h0]
    theta_10 = [hh;hh]            (h = 1/2)

Series are truncated to the lattice box |u|_inf <= radius; the first
omitted shell is summed in absolute value and reported as the tail
estimate.  No reduction of tau into a fundamental domain is attempted:
callers supply tau with a reasonably positive-definite imaginary part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import _kernels
from .errors import DegeneratePointError, DomainError

DEFAULT_RADIUS = 12
TAIL_WARN = 1e-12

EVEN_CHARACTERISTICS = (
    (0, 0, 0, 0),
    (0, 0, 1, 1),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (1, 0, 0, 0),
    (1, 0, 0, 1),
    (0, 1, 0, 0),
    (1, 1, 0, 0),
    (0, 1, 1, 0),
    (1, 1, 1, 1),
)

ODD_CHARACTERISTICS = (
    (0, 1, 0, 1),
    (0, 1, 1, 1),
    (1, 0, 1, 0),
    (1, 1, 1, 0),
    (1, 0, 1, 1),
    (1, 1, 0, 1),
)


def parity(char):
    """+1 for even characteristics, -1 for odd."""
    m1, m2, n1, n2 = char
    return -1 if (m1 * n1 + m2 * n2) % 2 else 1


@dataclass(frozen=True)
class PeriodMatrix:
    """Point tau = [[tau1, z], [z, tau2]] of the Siegel upper half-space."""

    tau1: complex
    z: complex
    tau2: complex

    def __post_init__(self):
        if not (self.tau1.imag * self.tau2.imag > self.z.imag**2
                and self.tau2.imag > 0):
            raise DomainError(
                "imaginary part of the period matrix is not positive definite")


@dataclass(frozen=True)
class ThetaValue:
    value: complex
    tail: float

    @property
    def precise(self):
        return self.tail <= TAIL_WARN * max(abs(self.value), 1e-300)


@dataclass(frozen=True)
class ThetaConstants:
    """The ten even theta constants at z = 0, table order, 1-based access."""

    values: tuple
    tails: tuple = field(default=())
    radius: int = DEFAULT_RADIUS

    def theta(self, i):
        return self.values[i - 1]

    def fourth(self, i):
        return self.values[i - 1] ** 4

    def fourth_powers(self):
        return tuple(v**4 for v in self.values)

    @property
    def max_tail(self):
        return max(self.tails) if self.tails else 0.0

    @classmethod
    def from_fourth_powers(cls, t4):
        """Principal fourth roots; adequate wherever only powers are used."""
        return cls(values=tuple(complex(v) ** 0.25 for v in t4))


def theta_constant(char, tau, radius=DEFAULT_RADIUS):
    """Truncated theta constant for one half-integer characteristic."""
    if radius < 1:
        raise DomainError("radius must be >= 1")
    m1, m2, n1, n2 = char
    if not all(v in (0, 1) for v in char):
        raise DomainError("characteristic entries must be half-integers 0 or 1/2")
    a1, a2, b1, b2 = m1 / 2.0, m2 / 2.0, n1 / 2.0, n2 / 2.0
    val = _kernels.theta_sum(a1, a2, b1, b2, tau.tau1, tau.z, tau.tau2, radius)
    tail = _kernels.theta_shell(a1, a2, b1, b2, tau.tau1, tau.z, tau.tau2, radius)
    return ThetaValue(value=complex(val), tail=float(tail))


def even_theta_constants(tau, radius=DEFAULT_RADIUS):
    vals = []
    tails = []
    for ch in EVEN_CHARACTERISTICS:
        tv = theta_constant(ch, tau, radius)
        vals.append(tv.value)
        tails.append(tv.tail)
    return ThetaConstants(values=tuple(vals), tails=tuple(tails), radius=radius)


# ---------------------------------------------------------------------------
# Frobenius identities and the basis reduction
# ---------------------------------------------------------------------------

# squared-theta identities: name, (i, j) of the product, [(sign, k, l), ...]
_SQUARE_IDENTITIES = (
    ("t5^2 t6^2 = t1^2 t4^2 - t2^2 t3^2", (5, 6), ((1, 1, 4), (-1, 2, 3))),
    ("t7^2 t9^2 = t1^2 t3^2 - t2^2 t4^2", (7, 9), ((1, 1, 3), (-1, 2, 4))),
    ("t8^2 t10^2 = t1^2 t2^2 - t3^2 t4^2", (8, 10), ((1, 1, 2), (-1, 3, 4))),
    ("t5^2 t9^2 = t3^2 t8^2 - t4^2 t10^2", (5, 9), ((1, 3, 8), (-1, 4, 10))),
    ("t5^2 t7^2 = t1^2 t8^2 - t2^2 t10^2", (5, 7), ((1, 1, 8), (-1, 2, 10))),
)

# fourth-power sum identities: name, (i, j), [(coeff, k), ...]
_FOURTH_IDENTITIES = (
    ("t5^4 + t6^4 = t1^4 - t2^4 - t3^4 + t4^4", (5, 6),
     ((1, 1), (-1, 2), (-1, 3), (1, 4))),
    ("t7^4 + t9^4 = t1^4 - t2^4 + t3^4 - t4^4", (7, 9),
     ((1, 1), (-1, 2), (1, 3), (-1, 4))),
    ("t8^4 + t10^4 = t1^4 + t2^4 - t3^4 - t4^4", (8, 10),
     ((1, 1), (1, 2), (-1, 3), (-1, 4))),
)

# reduction of theta_6^4 .. theta_10^4 to the basis theta_1^4 .. theta_5^4
REDUCTION_COEFFS = {
    6: (1, -1, -1, 1, -1),
    7: (0, 0, 1, -1, 1),
    8: (0, 1, 0, -1, 1),
    9: (1, -1, 0, 0, -1),
    10: (1, 0, -1, 0, -1),
}


@dataclass(frozen=True)
class FrobeniusReport:
    residuals: dict

    @property
    def max_residual(self):
        return max(self.residuals.values())

    def __iter__(self):
        return iter(self.residuals.items())


def check_frobenius(tc):
    """Residuals of the eight Frobenius identities and five basis reductions."""
    t2 = [None] + [tc.theta(i) ** 2 for i in range(1, 11)]
    t4 = [None] + [tc.theta(i) ** 4 for i in range(1, 11)]
    res = {}
    for name, (i, j), terms in _SQUARE_IDENTITIES:
        rhs = sum(s * t2[k] * t2[l] for s, k, l in terms)
        res[name] = abs(t2[i] * t2[j] - rhs)
    for name, (i, j), terms in _FOURTH_IDENTITIES:
        rhs = sum(s * t4[k] for s, k in terms)
        res[name] = abs(t4[i] + t4[j] - rhs)
    for i, coeffs in REDUCTION_COEFFS.items():
        rhs = sum(c * t4[k + 1] for k, c in enumerate(coeffs))
        res[f"t{i}^4 reduction"] = abs(t4[i] - rhs)
    return FrobeniusReport(residuals=res)


def reduce_fourth_powers(t4_basis):
    """Extend (t1^4..t5^4) to all ten fourth powers via the basis reduction."""
    out = list(t4_basis[:5])
    for i in range(6, 11):
        out.append(sum(c * t4_basis[k] for k, c in enumerate(REDUCTION_COEFFS[i])))
    return tuple(out)


# ---------------------------------------------------------------------------
# Satake coordinate functions
# ---------------------------------------------------------------------------

# x_i as integer combinations of (t1^4, ..., t5^4)
SATAKE_MATRIX = (
    (-1, 2, 2, -1, 3),
    (-1, 2, -1, -1, 0),
    (-1, -1, -1, 2, 0),
    (2, -1, -1, -1, 0),
    (-1, -1, 2, -1, 0),
    (2, -1, -1, 2, -3),
)

# theta_i^4 = sign/3 * (x_a + x_b + x_c), table order
THETA4_FROM_X = (
    (-1, (2, 3, 5)),
    (-1, (3, 4, 5)),
    (-1, (2, 3, 4)),
    (-1, (2, 4, 5)),
    (1, (1, 3, 4)),
    (-1, (1, 2, 5)),
    (1, (1, 4, 5)),
    (1, (1, 2, 4)),
    (-1, (1, 2, 3)),
    (-1, (1, 3, 5)),
)


@dataclass(frozen=True)
class SatakeCoordinates:
    """The six level-two coordinates x_1..x_6 (they sum to zero)."""

    x: tuple

    def power_sum(self, j):
        return sum(v**j for v in self.x)

    @property
    def sum_residual(self):
        return abs(sum(self.x))

    def quartic_residual(self):
        """|s2^2 - 4 s4| relative to |s2|^2 (Igusa-quartic membership)."""
        s2 = self.power_sum(2)
        s4 = self.power_sum(4)
        scale = max(abs(s2) ** 2, abs(s4), 1e-300)
        return abs(s2**2 - 4 * s4) / scale


def satake_from_theta(tc):
    """The six linear combinations of fourth powers, in the fixed order."""
    t4 = [tc.fourth(i) for i in range(1, 6)]
    x = tuple(sum(c * t4[k] for k, c in enumerate(row)) for row in SATAKE_MATRIX)
    return SatakeCoordinates(x=x)


def theta4_from_satake(coords):
    """Invert satake_from_theta: all ten fourth powers from x_1..x_6.

    Works for exact (Fraction) and numeric coordinates alike; input may
    be a SatakeCoordinates or a plain length-6 sequence.
    """
    x = coords.x if isinstance(coords, SatakeCoordinates) else tuple(coords)
    if len(x) != 6:
        raise DomainError("expected six Satake coordinates")
    out = []
    for sign, idx in THETA4_FROM_X:
        s = x[idx[0] - 1] + x[idx[1] - 1] + x[idx[2] - 1]
        if isinstance(s, int):
            s = Fraction(s)
        out.append(sign * s / 3)
    return tuple(out)


# ---------------------------------------------------------------------------
# Rosenhain parameters
# ---------------------------------------------------------------------------


def _guard_denominator(value, scale, what):
    if abs(value) <= 1e-10 * scale:
        raise DegeneratePointError(
            f"{what} vanishes: tau lies on a boundary divisor (chi10 = 0 locus)")


def rosenhain_from_theta(tc):
    """Picard's lemma: lambda_i as ratios of squared theta constants."""
    t2 = [None] + [tc.theta(i) ** 2 for i in range(1, 11)]
    scale = max(abs(v) for v in t2[1:]) ** 2
    d1 = t2[2] * t2[4]
    d2 = t2[4] * t2[10]
    d3 = t2[2] * t2[10]
    for d, what in ((d1, "t2^2 t4^2"), (d2, "t4^2 t10^2"), (d3, "t2^2 t10^2")):
        _guard_denominator(d, scale, what)
    lam1 = t2[1] * t2[3] / d1
    lam2 = t2[3] * t2[8] / d2
    lam3 = t2[1] * t2[8] / d3
    return lam1, lam2, lam3


def rosenhain_from_theta4(t4):
    """Rosenhain parameters from fourth powers alone (no square-root branch).

    ``t4`` is the full ten-tuple of fourth powers in table order.
    """
    t = [None] + list(t4)
    if len(t) != 11:
        raise DomainError("expected ten fourth powers")
    scale = max(abs(v) for v in t[1:]) ** 2 or 1.0
    d1 = 2 * t[2] * t[4]
    d2 = 2 * t[4] * t[10]
    d3 = 2 * t[2] * t[10]
    for d, what in ((d1, "t2^4 t4^4"), (d2, "t4^4 t10^4"), (d3, "t2^4 t10^4")):
        _guard_denominator(d, scale, what)
    half = Fraction(1, 2)
    lam1 = half + (t[1] * t[3] - t[7] * t[9]) / d1
    lam2 = half + (t[3] * t[8] - t[5] * t[9]) / d2
    lam3 = half + (t[1] * t[8] - t[5] * t[7]) / d3
    return lam1, lam2, lam3
