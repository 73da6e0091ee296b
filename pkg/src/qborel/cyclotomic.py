"""Exact arithmetic in the cyclotomic field Q(zeta_m).

A scalar is a polynomial in zeta = exp(2*pi*i/m) reduced modulo the m-th
cyclotomic polynomial Phi_m, stored densely on the power basis

    1, zeta, zeta^2, ..., zeta^(phi(m)-1)

with Fraction coefficients.  The representation is canonical: two scalars
are equal iff their coefficient vectors are equal, which makes equality
testing (the single most used predicate in this package) a tuple compare.

Scalars that happen to be a rational multiple of a single power of zeta
carry a (rational, exponent) tag so that products of root-of-unity
monomials cost O(1) exponent arithmetic instead of a polynomial
convolution.  Everything else falls back to dense convolution and
reduction by the precomputed remainder table of x^k mod Phi_m.

No floating point anywhere; all arithmetic is exact.
"""

from __future__ import annotations

import functools
from fractions import Fraction

# Arbitrary-precision rational scalar substrate.  Fraction already keeps
# gcd(|num|, den) = 1 and den > 0, which is exactly the invariant needed.
BigRational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _poly_mul(a, b):
    """Product of two integer coefficient lists (low degree first)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod(num, den):
    """Exact division of integer polynomials, den monic; returns (quot, rem)."""
    assert den[-1] == 1, "divisor must be monic"
    num = list(num)
    q = [0] * max(1, len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c:
            q[k] = c
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@functools.cache
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, low degree first, monic with integer entries.

    Computed by dividing x^m - 1 by the product of Phi_d over proper
    divisors d of m; the division is exact and the remainder is asserted
    to vanish.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(3)
    (1, 1, 1)
    >>> cyclotomic_polynomial(9)
    (1, 0, 0, 1, 0, 0, 1)
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    num = [-1] + [0] * (m - 1) + [1]
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    q, r = _poly_divmod(num, den)
    assert r == [0], "cyclotomic division must be exact"
    return tuple(q)


class CycField:
    """The field Q(zeta_m) with precomputed reduction data.

    Use cyc_field(m) to obtain the cached instance; scalars from distinct
    instances never mix.
    """

    def __init__(self, m: int):
        self.order = m
        mod = cyclotomic_polynomial(m)
        self.modulus = mod
        self.degree = len(mod) - 1
        # x^k mod Phi_m for 0 <= k < max(m, 2*degree - 1), as integer tuples.
        # Covers both exponent interning (k < m) and post-convolution
        # reduction (k <= 2*degree - 2).
        top = max(m, 2 * self.degree - 1)
        red = []
        row = [0] * self.degree
        row[0] = 1
        red.append(tuple(row))
        for _ in range(1, top):
            prev = red[-1]
            row = [0] + list(prev[:-1])
            lead = prev[-1]
            if lead:
                for j in range(self.degree):
                    row[j] -= lead * mod[j]
            red.append(tuple(row))
        self.power_reductions = tuple(red)
        self._power_index = {red[k]: k for k in range(m - 1, -1, -1)}
        self.zero = CycScalar(self, (_ZERO,) * self.degree, (_ZERO, 0))
        self._powers = [
            CycScalar(self, tuple(Fraction(c) for c in red[k]), (_ONE, k))
            for k in range(m)
        ]
        self.one = self._powers[0]

    def zeta_pow(self, k: int) -> "CycScalar":
        """The root of unity zeta^k in canonical form (interned)."""
        return self._powers[k % self.order]

    def from_rational(self, r) -> "CycScalar":
        r = Fraction(r)
        if not r:
            return self.zero
        coeffs = (r,) + (_ZERO,) * (self.degree - 1)
        return CycScalar(self, coeffs, (r, 0))

    def from_coeffs(self, coeffs) -> "CycScalar":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.degree:
            raise ValueError("coefficient vector has wrong length")
        return CycScalar(self, coeffs, None)

    def __repr__(self):
        return f"CycField({self.order})"


@functools.cache
def cyc_field(m: int) -> CycField:
    return CycField(m)


def zeta_pow(m: int, k: int) -> "CycScalar":
    """Module-level convenience for cyc_field(m).zeta_pow(k)."""
    return cyc_field(m).zeta_pow(k)


class CycScalar:
    """Immutable element of Q(zeta_m) in canonical dense form.

    The optional _mono tag (r, k) records that the value equals
    r * zeta^k; it is an optimization only and never affects equality,
    which always compares canonical coefficient vectors.
    """

    __slots__ = ("field", "coeffs", "_mono")

    def __init__(self, field: CycField, coeffs: tuple, _mono=None):
        self.field = field
        self.coeffs = coeffs
        self._mono = _mono

    # -- predicates ----------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def as_q_power(self):
        """Exponent k with self == zeta^k, or None if not a pure power."""
        if self._mono is not None and self._mono[0] == 1:
            return self._mono[1] % self.field.order
        key = tuple(int(c) if c.denominator == 1 else None for c in self.coeffs)
        if None in key:
            return None
        return self.field._power_index.get(key)

    # -- coercion ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.field is not self.field:
                raise ValueError("scalars from different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._mono, other._mono
        if a is not None and b is not None and a[1] % self.field.order == b[1] % self.field.order:
            r = a[0] + b[0]
            mono = (r, a[1] % self.field.order)
        else:
            mono = None
        coeffs = tuple(x + y for x, y in zip(self.coeffs, other.coeffs))
        return CycScalar(self.field, coeffs, mono)

    __radd__ = __add__

    def __neg__(self):
        mono = (-self._mono[0], self._mono[1]) if self._mono is not None else None
        return CycScalar(self.field, tuple(-c for c in self.coeffs), mono)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._mono, other._mono
        if a is not None and b is not None:
            r = a[0] * b[0]
            if not r:
                return self.field.zero
            k = (a[1] + b[1]) % self.field.order
            if r == 1:
                return self.field._powers[k]
            red = self.field.power_reductions[k]
            return CycScalar(self.field, tuple(r * c for c in red), (r, k))
        if a is not None:
            return other._scale_shift(a)
        if b is not None:
            return self._scale_shift(b)
        return self._dense_mul(other)

    __rmul__ = __mul__

    def _scale_shift(self, mono):
        """self * (r * zeta^k) via the reduction table, no full convolution."""
        r, k = mono
        if not r:
            return self.field.zero
        field = self.field
        deg = field.degree
        out = [_ZERO] * deg
        for i, c in enumerate(self.coeffs):
            if c:
                rc = r * c
                row = field.power_reductions[(i + k) % field.order]
                for j, rj in enumerate(row):
                    if rj:
                        out[j] += rc * rj
        return CycScalar(field, tuple(out), None)

    def _dense_mul(self, other):
        field = self.field
        deg = field.degree
        prod = [_ZERO] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:deg])
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                row = field.power_reductions[k]
                for j, rj in enumerate(row):
                    if rj:
                        out[j] += c * rj
        return CycScalar(field, tuple(out), None)

    def inv(self):
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_m)")
        if self._mono is not None:
            r, k = self._mono
            return self.field.from_rational(1 / r) * self.field.zeta_pow(-k)
        # extended Euclid in Q[x] against the (irreducible) modulus
        field = self.field
        mod = [Fraction(c) for c in field.modulus]
        a = list(self.coeffs)
        while len(a) > 1 and not a[-1]:
            a.pop()
        # invariants: r0 = s0*a (mod Phi), r1 = s1*a (mod Phi)
        r0, s0 = mod, [_ZERO]
        r1, s1 = a, [_ONE]
        while True:
            if len(r1) == 1:
                c = r1[0]
                assert c, "modulus is irreducible, gcd must be a unit"
                out = [x / c for x in s1]
                out += [_ZERO] * (field.degree - len(out))
                return CycScalar(field, tuple(out[: field.degree]), None)
            q, r = _frac_divmod(r0, r1)
            s = _frac_sub(s0, _frac_mul(q, s1))
            r0, s0, r1, s1 = r1, s1, r, s

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    # -- equality ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    def __repr__(self):
        if not self:
            return "Cyc(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                if i == 0:
                    parts.append(str(c))
                elif i == 1:
                    parts.append(f"{c}*z" if c != 1 else "z")
                else:
                    parts.append(f"{c}*z^{i}" if c != 1 else f"z^{i}")
        return f"Cyc[{self.field.order}]({' + '.join(parts)})"


def _frac_divmod(num, den):
    num = list(num)
    dn = len(den) - 1
    inv_lead = 1 / den[-1]
    q = [_ZERO] * max(1, len(num) - dn)
    for k in range(len(num) - dn - 1, -1, -1):
        c = num[k + dn] * inv_lead
        if c:
            q[k] = c
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    while len(num) > 1 and not num[-1]:
        num.pop()
    return q, num


def _frac_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _frac_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
