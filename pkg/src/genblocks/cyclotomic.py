"""Exact arithmetic in cyclotomic fields.

A Cyclotomic carries an order n and a coefficient vector of length phi(n)
representing the element in the power basis 1, z, ..., z^(phi(n)-1) of
Q(zeta_n), reduced modulo the n-th cyclotomic polynomial.  Reduction modulo
Phi_n (never x^n - 1) makes equality a plain coefficient comparison within one
order; elements of different orders are compared after embedding into the
field of order lcm.  Coefficients are exact rationals, stored as plain int
whenever the denominator is 1; no floats.
"""

from fractions import Fraction
from functools import lru_cache
from math import lcm

from .numtheory import divisors, euler_phi


class NotRationalError(ArithmeticError):
    """Raised when a cyclotomic element outside the prime field is coerced to Q."""


def _poly_divide_exact(num, den):
    """Exact division of integer polynomials (coefficient lists, low to high)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        coeff, rem = divmod(num[shift + len(den) - 1], den[-1])
        if rem:
            raise ArithmeticError("polynomial division is not exact")
        out[shift] = coeff
        for i, d in enumerate(den):
            num[shift + i] -= coeff * d
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients (low to high) of Phi_n, via Phi_n = (x^n-1)/prod Phi_d."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            num = _poly_divide_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(n):
    """x^k mod Phi_n for 0 <= k < max(n, 2*phi(n)), as integer coefficient tuples."""
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    # x^phi = -(lower coefficients), since Phi_n is monic.
    top = [-c for c in poly[:phi]]
    rows = [[0] * phi for _ in range(max(n, 2 * phi))]
    for k in range(phi):
        rows[k][k] = 1
    for k in range(phi, len(rows)):
        prev = rows[k - 1]
        shifted = [0] + prev[:-1]
        carry = prev[-1]
        if carry:
            for i in range(phi):
                shifted[i] += carry * top[i]
        rows[k] = shifted
    return tuple(tuple(r) for r in rows)


def _reduce(n, dense):
    """Reduce a dense coefficient list (any length) modulo Phi_n."""
    phi = euler_phi(n)
    table = _power_table(n)
    out = [0] * phi
    for k, c in enumerate(dense):
        if not c:
            continue
        row = table[k] if k < len(table) else table[k % n]
        for i in range(phi):
            if row[i]:
                out[i] += c * row[i]
    return tuple(out)


class Cyclotomic:
    """An exact element of Q(zeta_n) in canonical power-basis form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        phi = euler_phi(order)
        norm = []
        for c in coeffs:
            if not isinstance(c, int):
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c.denominator == 1:
                    c = c.numerator
            norm.append(c)
        coeffs = tuple(norm)
        if len(coeffs) != phi:
            raise ValueError("expected %d coefficients for order %d" % (phi, order))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("Cyclotomic values are immutable")

    @classmethod
    def from_exponents(cls, order, weights):
        """Sum of weights[k] * zeta_order^k, reduced to canonical form."""
        if order < 1:
            raise ValueError("order must be >= 1")
        dense = [0] * order
        for k, c in weights.items():
            dense[k % order] += c
        return cls(order, _reduce(order, dense))

    @classmethod
    def from_rational(cls, value, order=1):
        return cls.from_exponents(order, {0: Fraction(value)})

    def embed(self, new_order):
        """Image under zeta_n -> zeta_N^(N/n); requires n | N."""
        if new_order % self.order:
            raise ValueError("cannot embed order %d into order %d" % (self.order, new_order))
        if new_order == self.order:
            return self
        step = new_order // self.order
        return Cyclotomic.from_exponents(
            new_order, {i * step: c for i, c in enumerate(self.coeffs) if c})

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        elif not isinstance(other, Cyclotomic):
            return None
        n = lcm(self.order, other.order)
        return self.embed(n), other.embed(n)

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic(self.order, tuple(c * q for c in self.coeffs))
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        phi = len(a.coeffs)
        dense = [0] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    dense[i + j] += x * y
        return Cyclotomic(a.order, _reduce(a.order, dense))

    __rmul__ = __mul__

    def conjugate(self):
        """Complex conjugation, zeta^k -> zeta^(-k)."""
        n = self.order
        return Cyclotomic.from_exponents(
            n, {(-i) % n: c for i, c in enumerate(self.coeffs) if c})

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self):
        if not self.is_rational():
            raise NotRationalError("%r does not lie in the prime field" % (self,))
        return Fraction(self.coeffs[0])

    def __eq__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    __hash__ = None

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "ζ%d^%d" % (self.order, i)
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append("%s*%s" % (c, mono))
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def __repr__(self):
        return "Cyclotomic(%d, %s)" % (self.order, list(self.coeffs))

    def approx(self):
        """Float approximation, for debugging only."""
        from cmath import exp, pi
        return sum(float(c) * exp(2j * pi * i / self.order) for i, c in enumerate(self.coeffs))

    def to_json(self):
        return {"order": self.order,
                "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        return cls(data["order"], [Fraction(int(p), int(q)) for p, q in data["coeffs"]])


def root_of_unity(n, k):
    """zeta_n^k in canonical form; period n in k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Cyclotomic.from_exponents(n, {k % n: 1})


# -- helpers that accept plain numbers as rational scalars --------------------

def value_conjugate(x):
    if isinstance(x, Cyclotomic):
        return x.conjugate()
    return x


def value_is_zero(x):
    if isinstance(x, Cyclotomic):
        return x.is_zero()
    return x == 0


def as_fraction(x):
    """Coerce a table value to Fraction, or raise NotRationalError."""
    if isinstance(x, Cyclotomic):
        return x.as_rational()
    return Fraction(x)


def value_str(x):
    if isinstance(x, Cyclotomic):
        if x.is_rational():
            return str(x.as_rational())
        return str(x)
    return str(Fraction(x))


def value_to_json(x):
    if not isinstance(x, Cyclotomic):
        x = Cyclotomic.from_rational(Fraction(x))
    return x.to_json()
