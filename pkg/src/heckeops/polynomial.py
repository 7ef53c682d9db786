"""Dense univariate polynomials over exact cyclotomic numbers.

Coefficients are CycNum, stored ascending with trailing zeros stripped, so
the zero polynomial has empty coefficients and degree -1.  Products of
rational-coefficient polynomials drop to a packed integer convolution; the
general path multiplies coefficient by coefficient.

Also houses Sturm-chain real-root counting, used to certify that a
characteristic polynomial factor has no real zeros at all.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

from .cyclotomic import BigRat, CycNum, _conv
from .errors import HeckeError


class Poly:
    """Polynomial over Q(zeta_N) coefficients, ascending order."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        lst = [c if isinstance(c, CycNum) else CycNum(c) for c in coeffs]
        while lst and lst[-1].is_zero():
            lst.pop()
        self._c = tuple(lst)

    @staticmethod
    def _raw(coeffs: tuple[CycNum, ...]) -> Poly:
        obj = object.__new__(Poly)
        obj._c = coeffs
        return obj

    # -- structure ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[CycNum, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def coeff(self, i: int) -> CycNum:
        return self._c[i] if 0 <= i < len(self._c) else CycNum(0)

    @property
    def leading(self) -> CycNum:
        if not self._c:
            raise HeckeError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def constant(self) -> CycNum:
        return self.coeff(0)

    def is_rational_poly(self) -> bool:
        return all(c.is_rational() for c in self._c)

    def is_real_poly(self) -> bool:
        return all(c.is_real() for c in self._c)

    def rational_coeffs(self) -> list[Fraction]:
        return [c.as_fraction() for c in self._c]

    def _int_vector(self) -> tuple[list[int], int] | None:
        """(integer coeffs, common denominator) when rational, else None."""
        if not self.is_rational_poly():
            return None
        den = 1
        fracs = [c.as_fraction() for c in self._c]
        for f in fracs:
            den = lcm(den, f.denominator)
        return [int(f * den) for f in fracs], den

    # -- ring operations -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._c == other._c

    __hash__ = None

    def __neg__(self) -> Poly:
        return Poly._raw(tuple(-c for c in self._c))

    def __add__(self, other: Poly) -> Poly:
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (CycNum, int, Fraction)):
            s = other if isinstance(other, CycNum) else CycNum(other)
            return Poly([c * s for c in self._c])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        ra, rb = self._int_vector(), other._int_vector()
        if ra is not None and rb is not None:
            va, da = ra
            vb, db = rb
            prod = _conv(va, vb)
            d = da * db
            return Poly([CycNum(Fraction(x, d)) for x in prod])
        a, b = self._c, other._c
        out = [CycNum(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise HeckeError("negative polynomial power")
        out = Poly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self._c)
        b = other._c
        db = len(b) - 1
        if len(a) - 1 < db:
            return Poly(), self
        inv_lead = other.leading.inverse()
        q: list[CycNum] = [CycNum(0)] * (len(a) - db)
        for i in range(len(a) - db - 1, -1, -1):
            c = a[i + db] * inv_lead
            q[i] = c
            if c:
                for j in range(db + 1):
                    a[i + j] = a[i + j] - c * b[j]
        return Poly(q), Poly(a[:db])

    def rem(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise HeckeError("polynomial division is not exact")
        return q

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = self.leading.inverse()
        return Poly([c * inv for c in self._c])

    # -- evaluation and transforms ---------------------------------------------

    def __call__(self, x: CycNum | int | Fraction) -> CycNum:
        x = x if isinstance(x, CycNum) else CycNum(x)
        acc = CycNum(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly([c * i for i, c in enumerate(self._c)][1:])

    def compose_power(self, p: int) -> Poly:
        """A(x) -> A(x^p)."""
        if p < 1:
            raise HeckeError("power must be >= 1")
        if self.is_zero():
            return self
        out = [CycNum(0)] * (self.degree * p + 1)
        for i, c in enumerate(self._c):
            out[i * p] = c
        return Poly._raw(tuple(out))

    def scale_arg(self, s: CycNum) -> Poly:
        """A(x) -> A(s*x)."""
        out = []
        power = CycNum(1)
        for c in self._c:
            out.append(c * power)
            power = power * s
        return Poly(out)

    def reversed_coeffs(self, length: int | None = None) -> Poly:
        """A(x) -> x^d * A(1/x), with d = length-1 if given, else deg A."""
        d = self.degree if length is None else length - 1
        if d < self.degree:
            raise HeckeError("reversal length below degree")
        out = [CycNum(0)] * (d + 1)
        for i, c in enumerate(self._c):
            out[d - i] = c
        return Poly(out)

    def shift(self, k: int) -> Poly:
        """Multiply by x^k."""
        if self.is_zero() or k == 0:
            return self
        return Poly._raw(tuple([CycNum(0)] * k) + self._c)

    def primitive_rational(self) -> tuple[Poly, Fraction]:
        """For rational polys: (integer-coprime poly, factor) with self = factor*poly."""
        vec = self._int_vector()
        if vec is None:
            raise HeckeError("not a rational-coefficient polynomial")
        ints, den = vec
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g == 0:
            return Poly(), Fraction(0)
        return Poly([Fraction(x, g) for x in ints]), Fraction(g, den)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self._c)}])"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a.rem(b)
    return a.monic() if not a.is_zero() else a


def poly_x() -> Poly:
    return Poly([0, 1])


def _positive_primitive(p: Poly) -> Poly:
    """Scale by a positive rational to keep Sturm chain coefficients small."""
    den = 1
    num_gcd = 0
    for c in p.coeffs:
        den = lcm(den, c._den)
        g = 0
        for x in c._num:
            g = gcd(g, x)
        num_gcd = gcd(num_gcd, g)
    if num_gcd == 0:
        return p
    return p * Fraction(den, num_gcd)


def count_real_roots(p: Poly) -> int:
    """Number of distinct real roots, by Sturm's theorem.

    Coefficients must be real cyclotomic numbers; signs at the endpoints of
    (-inf, inf) come from exact leading-coefficient signs.
    """
    if not p.is_real_poly():
        raise HeckeError("Sturm counting needs real coefficients")
    if p.degree <= 0:
        return 0
    g = poly_gcd(p, p.derivative())
    if g.degree > 0:
        p = p.exact_div(g)
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2].rem(chain[-1])
        if r.is_zero():
            raise HeckeError("squarefree part still shares a factor with its derivative")
        chain.append(_positive_primitive(-r))
    if chain[-1].is_zero():
        chain.pop()

    def changes(at_plus_infinity: bool) -> int:
        signs = []
        for q in chain:
            s = q.leading.sign()
            if not at_plus_infinity and q.degree % 2 == 1:
                s = -s
            if s:
                signs.append(s)
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    return changes(False) - changes(True)
