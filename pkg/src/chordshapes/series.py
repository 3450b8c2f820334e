"""Exact integer polynomials and truncated power series.

Everything here is computed over arbitrary-precision integers; no
floating point is used anywhere.  The kappa numbers come from their
two-term recursion, the one-backbone shape polynomial is

    S_g(z) = sum_{t=1..g} kappa_t^(g) z^(2g+t) (1+z)^(2g+t-1),

and the two-backbone polynomial is obtained by exact division,

    Q_g(z) = S_{g+1}(z)/(1+z) - sum_{i=1..g} S_i(z) S_{g+1-i}(z),

where a non-zero division remainder is an internal-consistency failure.
The fiber generating function of a shape with l non-rainbow arcs is

    C(z)^(2l+2) z^(l+2) / (1 - z C(z)^2)^(l+2)

with C the Catalan series; the variable counts the arcs of the planted
matching (the shape's two rainbows included).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import ConsistencyError, DiagramError


# -- polynomials -----------------------------------------------------------


def _trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    k = len(coeffs)
    while k > 0 and coeffs[k - 1] == 0:
        k -= 1
    return coeffs[:k]


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial with exact integer coefficients (index = degree)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(tuple(int(c) for c in self.coeffs)))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def monomial(coeff: int, degree: int) -> "IntPolynomial":
        return IntPolynomial((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[k] - other[k] for k in range(n)))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by z^k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divide_by_one_plus_z(self) -> tuple["IntPolynomial", int]:
        """Return (quotient, remainder) for division by 1+z; all exact."""
        if not self.coeffs:
            return IntPolynomial.zero(), 0
        q = [0] * len(self.coeffs)
        carry = 0
        for k in range(len(self.coeffs) - 1, 0, -1):
            q[k - 1] = self.coeffs[k] - carry
            carry = q[k - 1]
        remainder = self.coeffs[0] - carry
        return IntPolynomial(tuple(q[: len(self.coeffs) - 1] or ())), remainder


def _one_plus_z_pow(k: int) -> IntPolynomial:
    return IntPolynomial(tuple(comb(k, i) for i in range(k + 1)))


# -- kappa recursion --------------------------------------------------------


@lru_cache(maxsize=None)
def _kappa(g: int, t: int) -> int:
    if t < 1 or t > g:
        return 0
    if g == 1:
        return 1  # kappa_1^(1)
    m = 2 * g + t
    rhs = (2 * m - 3) * (2 * m - 5) * (
        (m - 2) * _kappa(g - 1, t) + 2 * (2 * m - 7) * _kappa(g - 1, t - 1)
    )
    q, r = divmod(rhs, m)
    if r:
        raise ConsistencyError(f"kappa recursion not divisible at g={g}, t={t}")
    return q


def kappa(g: int, t: int) -> int:
    """Exact kappa_t^(g); zero outside 1 <= t <= g."""
    if g < 1:
        raise DiagramError("kappa requires g >= 1")
    return _kappa(g, t)


def kappa_table(max_g: int) -> dict[tuple[int, int], int]:
    """All kappa values for 1 <= g <= max_g as a (g, t) -> value map."""
    return {
        (g, t): kappa(g, t) for g in range(1, max_g + 1) for t in range(1, g + 1)
    }


# -- shape polynomials -------------------------------------------------------


def shape_poly_1bb(g: int) -> IntPolynomial:
    """Generating polynomial of one-backbone shapes of genus g by arc count."""
    if g < 1:
        raise DiagramError("shape_poly_1bb requires g >= 1")
    total = IntPolynomial.zero()
    for t in range(1, g + 1):
        term = _one_plus_z_pow(2 * g + t - 1).scale(kappa(g, t)).shift(2 * g + t)
        total = total + term
    return total


def a_shape_poly(g: int) -> IntPolynomial:
    """Generating polynomial of one-backbone A-shapes: S_g(z) z / (1+z)."""
    q, r = shape_poly_1bb(g).divide_by_one_plus_z()
    if r:
        raise ConsistencyError(f"(1+z) does not divide S_{g}")
    return q.shift(1)


def b_shape_poly(g: int) -> IntPolynomial:
    """Generating polynomial of one-backbone B-shapes: S_g - A_g."""
    return shape_poly_1bb(g) - a_shape_poly(g)


def shape_poly_2bb(g: int) -> IntPolynomial:
    """Generating polynomial of connected two-backbone shapes of genus g.

    Computed as the exact quotient S_{g+1}/(1+z) minus the disconnected
    pairs sum_{i=1..g} S_i S_{g+1-i}.
    """
    if g < 0:
        raise DiagramError("shape_poly_2bb requires g >= 0")
    qp, r = shape_poly_1bb(g + 1).divide_by_one_plus_z()
    if r:
        raise ConsistencyError(f"(1+z) does not divide S_{g + 1}")
    for i in range(1, g + 1):
        qp = qp - shape_poly_1bb(i) * shape_poly_1bb(g + 1 - i)
    return qp


# -- truncated power series ---------------------------------------------------


@dataclass(frozen=True)
class PowerSeries:
    """Power series truncated at ``order``; coefficients are exact integers."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise DiagramError("order must be >= 0")
        cs = tuple(int(c) for c in self.coeffs)
        if len(cs) < self.order + 1:
            cs = cs + (0,) * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", cs[: self.order + 1])

    @staticmethod
    def from_coeffs(order: int, coeffs) -> "PowerSeries":
        return PowerSeries(order, tuple(coeffs))

    @staticmethod
    def one(order: int) -> "PowerSeries":
        return PowerSeries(order, (1,))

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.order:
            raise DiagramError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def _check(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise DiagramError("series orders differ")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return PowerSeries(n, tuple(out))

    def scale(self, c: int) -> "PowerSeries":
        return PowerSeries(self.order, tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by z^k, truncating at the fixed order."""
        return PowerSeries(self.order, (0,) * k + self.coeffs)

    def pow(self, e: int) -> "PowerSeries":
        if e < 0:
            raise DiagramError("negative powers go through inverse()")
        acc = PowerSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse; requires constant term +-1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise DiagramError("inverse needs constant term +1 or -1")
        n = self.order
        inv = [0] * (n + 1)
        inv[0] = c0
        for k in range(1, n + 1):
            s = sum(self.coeffs[i] * inv[k - i] for i in range(1, k + 1))
            inv[k] = -c0 * s
        return PowerSeries(n, tuple(inv))

    @staticmethod
    def from_polynomial(p: IntPolynomial, order: int) -> "PowerSeries":
        return PowerSeries(order, p.coeffs)


@lru_cache(maxsize=8)
def catalan_series(order: int) -> PowerSeries:
    """The series C with C = 1 + z C^2, computed by iterating the equation."""
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(order):
        c[n + 1] = sum(c[i] * c[n - i] for i in range(n + 1))
    return PowerSeries(order, tuple(c))


def fiber_gf(l: int, order: int) -> PowerSeries:
    """Generating function of matchings reducing to a fixed shape with l
    non-rainbow arcs; depends only on l.  First non-zero coefficient is
    1 at degree l+2."""
    if l < 1:
        raise DiagramError("fiber_gf requires l >= 1")
    c = catalan_series(order)
    zc2 = (c * c).shift(1)
    denom_inv = (PowerSeries.one(order) - zc2).inverse()
    return (c.pow(2 * l + 2) * denom_inv.pow(l + 2)).shift(l + 2)


def w_gf(g: int, order: int) -> PowerSeries:
    """Generating function of connected two-backbone matchings of genus g,
    summed over shapes: sum_l q_g(l) fiber_gf(l)."""
    q = shape_poly_2bb(g)
    total = PowerSeries(order, ())
    for degree in range(len(q.coeffs)):
        coeff = q[degree]
        if coeff:
            total = total + fiber_gf(degree - 2, order).scale(coeff)
    return total


def growth_ratio(series: PowerSeries, n: int) -> Fraction:
    """Exact ratio a_{n+1}/a_n of consecutive coefficients."""
    a_n = series[n]
    a_n1 = series[n + 1]
    if a_n == 0 or a_n1 == 0:
        raise DiagramError(f"zero coefficient at {n} or {n + 1}")
    return Fraction(a_n1, a_n)
