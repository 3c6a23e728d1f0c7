"""Dense univariate polynomials over Q with exact Fraction coefficients.

Coefficients are stored lowest degree first; the zero polynomial has an
empty coefficient list.  Everything here is immutable and hashable so
polynomials can key caches.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class UniPoly:
    """Univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((1,))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((0, 1))

    @staticmethod
    def constant(c) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def from_int_coeffs(coeffs) -> "UniPoly":
        return UniPoly(coeffs)

    # -- basic structure ----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (Fraction(1),)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                        for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                        for i in range(n)])

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return UniPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "UniPoly":
        return UniPoly([ci * _frac(c) for ci in self.coeffs])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.leading()
        return self if lc == 1 else self.scale(Fraction(1) / lc)

    def shift(self, n: int) -> "UniPoly":
        """Multiply by x^n."""
        if self.is_zero():
            return self
        return UniPoly((Fraction(0),) * n + self.coeffs)

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lc = other.leading()
        if self.degree < d:
            return UniPoly(()), self
        quot = [Fraction(0)] * (self.degree - d + 1)
        for i in range(self.degree - d, -1, -1):
            c = rem[i + d] / lc
            if c != 0:
                quot[i] = c
                for j, oc in enumerate(other.coeffs):
                    rem[i + j] -= c * oc
        return UniPoly(quot), UniPoly(rem[:d])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def divides(self, other: "UniPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    def pow(self, n: int) -> "UniPoly":
        result = UniPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def pow_mod(self, n: int, modulus: "UniPoly") -> "UniPoly":
        result = UniPoly.one() % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        """Horner evaluation; x may be a Fraction, int, or any ring element."""
        if not self.coeffs:
            return 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * other + UniPoly.constant(c)
        return acc

    # -- gcd and content ----------------------------------------------

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def xgcd(self, other: "UniPoly"):
        """Return (g, s, t) with s*self + t*other = g, g monic (or zero)."""
        r0, r1 = self, other
        s0, s1 = UniPoly.one(), UniPoly.zero()
        t0, t1 = UniPoly.zero(), UniPoly.one()
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        lc = r0.leading()
        inv = Fraction(1) / lc
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive; 0 if zero."""
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "UniPoly":
        """Integer primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        p = self.scale(Fraction(1) / self.content())
        return p if p.leading() > 0 else -p

    def int_coeffs(self) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("polynomial is not integral")
            out.append(c.numerator)
        return out

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "UniPoly(" + " + ".join(terms) + ")"
