"""Exact arithmetic in the 8th cyclotomic field Q(z), z = exp(2*pi*i/8).

Elements are stored as four integer numerators over one positive common
denominator, in the power basis 1, z, z^2, z^3 with z^4 = -1.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["Cyclo8", "root_of_unity", "inv_sqrt_pow2", "ZERO", "ONE", "Z", "SQRT2"]


def _normalize(nums, den):
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        nums = [-n for n in nums]
        den = -den
    g = den
    for n in nums:
        g = gcd(g, n)
        if g == 1:
            break
    if g > 1:
        nums = [n // g for n in nums]
        den //= g
    return tuple(nums), den


class Cyclo8:
    """Element c0 + c1*z + c2*z^2 + c3*z^3 of Q(z)."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        cs = [Fraction(c) for c in (c0, c1, c2, c3)]
        den = 1
        for c in cs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in cs]
        self._n, self._d = _normalize(nums, den)
        self._hash = None

    @classmethod
    def _raw(cls, nums, den):
        obj = object.__new__(cls)
        obj._n, obj._d = _normalize(nums, den)
        obj._hash = None
        return obj

    @classmethod
    def from_ints(cls, nums, den=1):
        """Build from integer numerators and a common denominator."""
        return cls._raw([int(n) for n in nums], int(den))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Cyclo8):
            return x
        if isinstance(x, int):
            return cls._raw([x, 0, 0, 0], 1)
        if isinstance(x, Rational):
            return cls._raw([x.numerator, 0, 0, 0], x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclo8")

    # -- accessors ---------------------------------------------------------
    @property
    def numerators(self):
        return self._n

    @property
    def denominator(self):
        return self._d

    @property
    def coeffs(self):
        return tuple(Fraction(n, self._d) for n in self._n)

    c0 = property(lambda self: Fraction(self._n[0], self._d))
    c1 = property(lambda self: Fraction(self._n[1], self._d))
    c2 = property(lambda self: Fraction(self._n[2], self._d))
    c3 = property(lambda self: Fraction(self._n[3], self._d))

    def is_zero(self):
        return not any(self._n)

    def is_rational(self):
        return not (self._n[1] or self._n[2] or self._n[3])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._n[0], self._d)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        try:
            o = Cyclo8.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._n, o._n
        da, db = self._d, o._d
        if da == db:
            return Cyclo8._raw([a[i] + b[i] for i in range(4)], da)
        return Cyclo8._raw([a[i] * db + b[i] * da for i in range(4)], da * db)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo8._raw([-n for n in self._n], self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = Cyclo8.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return Cyclo8.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclo8._raw([n * other for n in self._n], self._d)
        try:
            o = Cyclo8.coerce(other)
        except TypeError:
            return NotImplemented
        a0, a1, a2, a3 = self._n
        b0, b1, b2, b3 = o._n
        # z^4 = -1
        c0 = a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1
        c1 = a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2
        c2 = a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3
        c3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        return Cyclo8._raw([c0, c1, c2, c3], self._d * o._d)

    __rmul__ = __mul__

    def galois(self, k):
        """Image under the automorphism z -> z^k, k odd."""
        if k % 2 == 0:
            raise ValueError("k must be odd")
        out = [0, 0, 0, 0]
        for r, n in enumerate(self._n):
            e = (r * k) % 8
            if e >= 4:
                out[e - 4] -= n
            else:
                out[e] += n
        return Cyclo8._raw(out, self._d)

    def conjugate(self):
        return self.galois(7)

    def norm(self):
        """Field norm down to Q (product of the four conjugates)."""
        p = self * self.galois(3) * self.galois(5) * self.galois(7)
        return p.to_fraction()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(z)")
        others = self.galois(3) * self.galois(5) * self.galois(7)
        n = (self * others).to_fraction()
        return others * Fraction(1, 1) / n

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Cyclo8):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclo8._raw([n * q.denominator for n in self._n], self._d * q.numerator)
        try:
            o = Cyclo8.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Cyclo8.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclo8):
            return self._d == other._d and self._n == other._n
        try:
            o = Cyclo8.coerce(other)
        except TypeError:
            return NotImplemented
        return self._d == o._d and self._n == o._n

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._n[0], self._d))
            else:
                self._hash = hash((self._n, self._d))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- conversions ---------------------------------------------------------
    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / 8)
        return sum(n * z**r for r, n in enumerate(self._n)) / self._d

    def to_json(self):
        return [[n // gcd(n, self._d), self._d // gcd(n, self._d)] for n in self._n]

    @classmethod
    def from_json(cls, data):
        if len(data) != 4:
            raise ValueError("expected four [num, den] pairs")
        return cls(*(Fraction(int(p), int(q)) for p, q in data))

    def __str__(self):
        parts = []
        for r, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if r == 0:
                body = str(mag)
            else:
                zp = "z" if r == 1 else f"z^{r}"
                body = zp if mag == 1 else f"{mag}*{zp}"
            parts.append((sign, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Cyclo8({self})"

    @classmethod
    def parse(cls, text):
        """Parse the text form produced by ``str`` (also accepts ``1/4*z^3``)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty cyclotomic literal")
        if s[0] not in "+-":
            s = "+" + s
        terms = re.findall(r"([+-])([^+-]+)", s)
        if "".join(a + b for a, b in terms) != s:
            raise ValueError(f"cannot parse {text!r}")
        cs = [Fraction(0)] * 4
        for sign, body in terms:
            m = re.fullmatch(r"(?:(\d+(?:/\d+)?)\*?)?(z(?:\^(\d+))?)?", body)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"bad term {body!r} in {text!r}")
            coef = Fraction(m.group(1)) if m.group(1) else Fraction(1)
            power = 0
            if m.group(2):
                power = int(m.group(3)) if m.group(3) else 1
            coef = -coef if sign == "-" else coef
            power %= 8
            if power >= 4:
                coef, power = -coef, power - 4
            cs[power] += coef
        return cls(*cs)


def root_of_unity(k):
    """e(k/8) = z^k."""
    k %= 8
    nums = [0, 0, 0, 0]
    if k >= 4:
        nums[k - 4] = -1
    else:
        nums[k] = 1
    return Cyclo8._raw(nums, 1)


ZERO = Cyclo8._raw([0, 0, 0, 0], 1)
ONE = Cyclo8._raw([1, 0, 0, 0], 1)
Z = root_of_unity(1)
SQRT2 = Cyclo8._raw([0, 1, 0, -1], 1)  # z - z^3


def inv_sqrt_pow2(m):
    """2^(-m/2), using sqrt(2) = z - z^3."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    q, r = divmod(m, 2)
    val = Cyclo8._raw([1, 0, 0, 0], 2**q)
    if r:
        # 1/sqrt(2) = sqrt(2)/2
        val = val * SQRT2 / 2
    return val
