"""Proper rational functions A/B with B(0) = 1, and their pole structure.

These are the power series Sum a_n x^n whose coefficients satisfy a linear
recurrence with constant coefficients: deg A < deg B keeps the series free
of a polynomial part, and B(0) != 0 makes the expansion at 0 well defined.
The denominator is normalized to constant term 1, but numerator and
denominator are NOT forced coprime: equality compares cross products
A1*B2 = A2*B1, and an explicit reduced() exists for callers that want the
lowest form.  No operation reduces implicitly.

Pole bookkeeping records each denominator factor (1 - g x) with g a root of
unity, by the exact multiplicative order of g and the exponent within that
order.  Coefficient closed forms a_n = Sum C * n^(m-1) * zeta_L^(l*n) are
solved exactly against the series and re-verified on a window of further
terms before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .cyclotomic import MAX_CONDUCTOR, BigRat, CycNum, conductor_reduce, root_of_unity
from .errors import (
    DegreeViolation,
    DenVanishesAtZero,
    HeckeError,
    InternalMismatch,
    NotInSpace,
    PoleNotRootOfUnity,
)
from .numtheory import euler_phi
from .polynomial import Poly, poly_gcd

# Denominator roots are searched among roots of unity of order up to this
# bound; raise it per call via the max_level arguments below.
DEFAULT_MAX_LEVEL = 210


class RatFun:
    """A/B with deg A < deg B and B(0) = 1; common factors are permitted."""

    __slots__ = ("_num", "_den")

    def __init__(self, num: Poly | list, den: Poly | list):
        num = num if isinstance(num, Poly) else Poly(num)
        den = den if isinstance(den, Poly) else Poly(den)
        c0 = den.constant()
        if not c0:
            raise DenVanishesAtZero("denominator vanishes at 0")
        if c0 != CycNum(1):
            inv = c0.inverse()
            num = num * inv
            den = den * inv
        if num.is_zero():
            den = Poly([1])
        elif num.degree >= den.degree:
            raise DegreeViolation(
                f"numerator degree {num.degree} not below denominator degree {den.degree}"
            )
        self._num = num
        self._den = den

    @staticmethod
    def zero() -> RatFun:
        return RatFun(Poly(), Poly([1]))

    @staticmethod
    def from_ints(num: list, den: list) -> RatFun:
        return RatFun(Poly(num), Poly(den))

    @property
    def num(self) -> Poly:
        return self._num

    @property
    def den(self) -> Poly:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def __bool__(self) -> bool:
        return not self._num.is_zero()

    def is_rational_function_over_q(self) -> bool:
        return self._num.is_rational_poly() and self._den.is_rational_poly()

    def reduced(self) -> RatFun:
        """Lowest form with gcd(num, den) = 1; the only place reduction happens."""
        if self.is_zero():
            return self
        g = poly_gcd(self._num, self._den)
        if g.degree <= 0:
            return self
        g = g * g.constant().inverse()
        return RatFun(self._num.exact_div(g), self._den.exact_div(g))

    # -- ring operations ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFun):
            return NotImplemented
        if self._den == other._den:
            return self._num == other._num
        return self._num * other._den == other._num * self._den

    __hash__ = None

    def __neg__(self) -> RatFun:
        return RatFun(-self._num, self._den)

    def __add__(self, other: RatFun) -> RatFun:
        if not isinstance(other, RatFun):
            return NotImplemented
        g = poly_gcd(self._den, other._den)
        if g.degree > 0:
            g = g * g.constant().inverse()
            db = other._den.exact_div(g)
            num = self._num * db + other._num * self._den.exact_div(g)
            den = self._den * db
        else:
            num = self._num * other._den + other._num * self._den
            den = self._den * other._den
        return RatFun(num, den)

    def __sub__(self, other: RatFun) -> RatFun:
        return self + (-other)

    def __mul__(self, other) -> RatFun:
        if isinstance(other, (CycNum, int, Fraction)):
            return RatFun(self._num * other, self._den)
        if not isinstance(other, RatFun):
            return NotImplemented
        return RatFun(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_ratfun(self)

    def __repr__(self) -> str:
        return f"RatFun({format_ratfun(self)!r})"

    # -- series ---------------------------------------------------------------

    def series(self, count: int) -> list[CycNum]:
        """First `count` power series coefficients a_0 .. a_{count-1}."""
        if count <= 0:
            return []
        num_iv = self._num._int_vector()
        den_iv = self._den._int_vector()
        if num_iv is not None and den_iv is not None:
            avec, aden = num_iv
            bvec, bden = den_iv
            out_fracs = _series_rational(avec, aden, bvec, bden, count)
            return [CycNum(f) for f in out_fracs]
        a = self._num.coeffs
        b = self._den.coeffs
        d = len(b) - 1
        out: list[CycNum] = []
        for n in range(count):
            acc = a[n] if n < len(a) else CycNum(0)
            for k in range(1, min(n, d) + 1):
                if b[k]:
                    acc = acc - b[k] * out[n - k]
            out.append(acc)
        return out

    def coefficient(self, n: int) -> CycNum:
        return self.series(n + 1)[n]

    # -- structural transforms ---------------------------------------------------

    def weight_raise(self, k: int = 1) -> RatFun:
        """Apply (x d/dx) k times: a_n -> n^k a_n.

        The derivative quotient is formed over g*h^2 where B = g*h and
        g = gcd(B, B'), so repeated poles do not inflate the denominator:
        (x/(1-x)^2)' stays over (1-x)^3, not (1-x)^4.
        """
        if k < 0:
            raise HeckeError("weight_raise needs k >= 0")
        f = self
        for _ in range(k):
            if f.is_zero():
                return f
            a, b = f._num, f._den
            g = poly_gcd(b, b.derivative())
            if g.degree > 0:
                g = g * g.constant().inverse()
                h = b.exact_div(g)
                num = (a.derivative() * h - a * b.derivative().exact_div(g)).shift(1)
                f = RatFun(num, g * h * h)
            else:
                num = (a.derivative() * b - a * b.derivative()).shift(1)
                f = RatFun(num, b * b)
        return f

    def substitute_power(self, p: int) -> RatFun:
        """f(x) -> f(x^p)."""
        if p < 1:
            raise HeckeError("substitution power must be >= 1")
        return RatFun(self._num.compose_power(p), self._den.compose_power(p))

    def invert_x(self) -> RatFun:
        """f(x) -> f(1/x), re-expanded at 0; needs vanishing constant term."""
        if self.is_zero():
            return self
        if self._num.constant():
            raise NotInSpace("f(1/x) lies outside the space unless a_0 = 0")
        d = self._den.degree
        num = self._num.reversed_coeffs(d + 1)
        den = self._den.reversed_coeffs(d + 1)
        return RatFun(num, den)

    def scale_arg(self, s: CycNum) -> RatFun:
        """f(x) -> f(s*x)."""
        return RatFun(self._num.scale_arg(s), self._den.scale_arg(s))


def linear_combine(pairs) -> RatFun:
    """Sum of c * f over (c, f) pairs, formed over a common denominator."""
    total = RatFun.zero()
    for c, f in pairs:
        total = total + f * (c if isinstance(c, CycNum) else CycNum(c))
    return total


def _series_rational(
    avec: list[int], aden: int, bvec: list[int], bden: int, count: int
) -> list[Fraction]:
    """Series of (avec/aden)/(bvec/bden) with integer work in the hot loop."""
    d = len(bvec) - 1
    b0 = bvec[0]
    scale = Fraction(bden, aden)
    if b0 == 1:
        ints: list[int] = []
        for n in range(count):
            acc = avec[n] if n < len(avec) else 0
            for k in range(1, min(n, d) + 1):
                if bvec[k]:
                    acc -= bvec[k] * ints[n - k]
            ints.append(acc)
        return [x * scale for x in ints]
    fracs: list[Fraction] = []
    for n in range(count):
        acc = Fraction(avec[n] if n < len(avec) else 0)
        for k in range(1, min(n, d) + 1):
            if bvec[k]:
                acc -= bvec[k] * fracs[n - k]
        fracs.append(acc / b0)
    return [x * scale for x in fracs]


# -- recurrences -----------------------------------------------------------------


@dataclass(frozen=True)
class Recurrence:
    """Order-d recurrence a_n = -(alphas[0] a_{n-1} + ... + alphas[d-1] a_{n-d}).

    `alphas` are the denominator coefficients past the constant 1, so the
    generating function is A(x) / (1 + alphas[0] x + ... + alphas[d-1] x^d);
    `initial` fixes a_0 .. a_{d-1}.  The top coefficient must be nonzero so
    the order is exact.
    """

    alphas: tuple[CycNum, ...]
    initial: tuple[CycNum, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(CycNum(c) if not isinstance(c, CycNum) else c for c in self.alphas))
        object.__setattr__(self, "initial", tuple(CycNum(c) if not isinstance(c, CycNum) else c for c in self.initial))
        if len(self.initial) != len(self.alphas):
            raise HeckeError("need exactly d initial terms for an order-d recurrence")
        if self.alphas and self.alphas[-1].is_zero():
            raise HeckeError("top recurrence coefficient must be nonzero")

    @property
    def order(self) -> int:
        return len(self.alphas)

    def extend(self, count: int) -> list[CycNum]:
        out = list(self.initial)
        d = self.order
        coeffs = self.alphas
        while len(out) < count:
            n = len(out)
            acc = CycNum(0)
            for k in range(1, d + 1):
                if coeffs[k - 1]:
                    acc = acc - coeffs[k - 1] * out[n - k]
            out.append(acc)
        return out[:count]


def to_recurrence(f: RatFun) -> Recurrence:
    d = f.den.degree
    coeffs = tuple(f.den.coeff(k) for k in range(1, d + 1))
    return Recurrence(coeffs, tuple(f.series(d)))


def from_recurrence(rec: Recurrence) -> RatFun:
    """Rational function whose series obeys the recurrence."""
    den = Poly([CycNum(1)] + list(rec.alphas))
    d = den.degree
    series = list(rec.initial)
    # numerator coefficient A_n = sum_k den_k a_{n-k}; degree < d is automatic
    num_coeffs = []
    for n in range(d):
        acc = CycNum(0)
        for k in range(n + 1):
            c = den.coeff(k)
            if c:
                acc = acc + c * series[n - k]
        num_coeffs.append(acc)
    f = RatFun(Poly(num_coeffs), den)
    if f.series(2 * d + 4) != rec.extend(2 * d + 4):
        raise InternalMismatch("recurrence reconstruction failed its replay check")
    return f


# -- pole structure ----------------------------------------------------------------


@dataclass(frozen=True)
class PoleFactor:
    """Denominator factor (1 - zeta_order^exponent * x)^multiplicity."""

    order: int
    exponent: int
    multiplicity: int

    def growth_root(self) -> CycNum:
        return root_of_unity(self.order, self.exponent)


def _one_minus_root_x(g: CycNum) -> Poly:
    return Poly([CycNum(1), -g])


def pole_factors(f: RatFun, max_level: int = DEFAULT_MAX_LEVEL) -> list[PoleFactor]:
    """Factor the denominator into (1 - g x) powers with each g a root of unity.

    Raises PoleNotRootOfUnity when some denominator root is not a root of
    unity of order up to max_level.
    """
    remaining = f.den
    found: list[PoleFactor] = []
    order = 0
    while remaining.degree > 0:
        order += 1
        if order > max_level:
            raise PoleNotRootOfUnity(
                f"a pole is not at a root of unity of order <= {max_level}"
            )
        if _min_conjugates(order, remaining) > remaining.degree:
            continue
        probe = poly_gcd(remaining, _x_pow_minus_one(order, remaining))
        if probe.degree <= 0:
            continue
        for exponent in range(order):
            if gcd(exponent, order) != 1 and order > 1:
                continue
            g = root_of_unity(order, exponent)
            factor = _one_minus_root_x(g)
            multiplicity = 0
            while True:
                q, r = divmod(remaining, factor)
                if not r.is_zero():
                    break
                remaining = q
                multiplicity += 1
            if multiplicity:
                found.append(PoleFactor(order, exponent % order, multiplicity))
    found.sort(key=lambda pf: (pf.order, pf.exponent))
    if sum(pf.multiplicity for pf in found) != f.den.degree:
        raise InternalMismatch("pole multiplicities do not account for the denominator")
    return found


def _min_conjugates(order: int, remaining: Poly) -> int:
    """Conjugate count of a primitive order-th root over the coefficient field.

    A root of that order forces at least this many denominator roots, so
    orders whose count exceeds the remaining degree cannot occur.
    """
    n = 1
    for c in remaining.coeffs:
        n = lcm(n, c.conductor)
    return euler_phi(lcm(order, n)) // euler_phi(n)


def _x_pow_minus_one(order: int, modulus: Poly) -> Poly:
    """(x^order - 1) reduced mod modulus, so the gcd probe stays small."""
    result = Poly([1])
    base = Poly([0, 1]).rem(modulus)
    e = order
    while e:
        if e & 1:
            result = (result * base).rem(modulus)
        e >>= 1
        if e:
            base = (base * base).rem(modulus)
    return result - Poly([1])


def is_root_of_unity_poles(f: RatFun, max_level: int = DEFAULT_MAX_LEVEL) -> bool:
    try:
        pole_factors(f, max_level)
        return True
    except PoleNotRootOfUnity:
        return False


def level_of(f: RatFun, max_level: int = DEFAULT_MAX_LEVEL) -> int:
    """Smallest L with denominator dividing (1 - x^L)^deg."""
    if f.is_zero():
        return 1
    level = 1
    for pf in pole_factors(f, max_level):
        level = lcm(level, pf.order)
    if level > MAX_CONDUCTOR:
        raise PoleNotRootOfUnity(f"pole orders combine past {MAX_CONDUCTOR}")
    return level


# -- coefficient closed forms ---------------------------------------------------------


@dataclass(frozen=True)
class ClosedFormTerm:
    """Contribution coef * n^(mult-1) * zeta_level^(root_exp * n)."""

    coef: CycNum
    root_exp: int
    mult: int


@dataclass(frozen=True)
class ClosedForm:
    """a_n = sum of terms, valid for every n >= 0 (with 0^0 = 1)."""

    level: int
    terms: tuple[ClosedFormTerm, ...]

    @property
    def weight(self) -> int:
        """Largest multiplicity; the uniform growth exponent when homogeneous."""
        return max((t.mult for t in self.terms), default=1)

    def evaluate(self, n: int) -> CycNum:
        total = CycNum(0)
        for t in self.terms:
            npow = 1 if t.mult == 1 else n ** (t.mult - 1)
            total = total + t.coef * npow * root_of_unity(self.level, t.root_exp * n)
        return total

    def has_uniform_mult(self) -> bool:
        mults = {t.mult for t in self.terms}
        return len(mults) <= 1


def closed_form(
    f: RatFun, verify_terms: int = 12, max_level: int = DEFAULT_MAX_LEVEL
) -> ClosedForm:
    """Exact coefficient formula a_n = Sum C * n^(m-1) * zeta_L^(l n).

    Solved as a linear system against the series, then replayed against
    `verify_terms` further coefficients.
    """
    if f.is_zero():
        return ClosedForm(1, ())
    factors = pole_factors(f, max_level)
    level = 1
    for pf in factors:
        level = lcm(level, pf.order)
    if level > MAX_CONDUCTOR:
        raise PoleNotRootOfUnity(f"pole orders combine past {MAX_CONDUCTOR}")
    basis: list[tuple[int, int]] = []  # (root_exp mod level, mult)
    for pf in factors:
        j = pf.exponent * (level // pf.order) % level
        for m in range(1, pf.multiplicity + 1):
            basis.append((j, m))
    basis.sort()
    d = len(basis)
    sample = f.series(d + verify_terms)
    rows = []
    for n in range(d):
        row = []
        for j, m in basis:
            npow = 1 if m == 1 else n ** (m - 1)
            row.append(CycNum(npow) * root_of_unity(level, j * n))
        rows.append(row)
    from .linalg import solve

    coeffs = solve(rows, sample[:d])
    if coeffs is None:
        raise InternalMismatch("closed form system was inconsistent")
    terms = tuple(
        ClosedFormTerm(conductor_reduce(c), j, m)
        for c, (j, m) in zip(coeffs, basis)
        if not c.is_zero()
    )
    cf = ClosedForm(level, terms)
    for n in range(d, d + verify_terms):
        if cf.evaluate(n) != sample[n]:
            raise InternalMismatch("closed form failed replay verification")
    return cf


def qp_decompose(f: RatFun) -> list[tuple[CycNum, int, int, int]]:
    """Write f as Sum c * (x d/dx)^k (x^j / (1 - x^L)), L the level of f.

    Entries are (c, k, j, L) sorted by (j, k).  On the residue class
    n = j mod L the coefficient a_n is the polynomial Sum_k c_{j,k} n^k,
    read off the closed form via c_{j,k} = Sum_l C_{l,k+1} zeta_L^(l j).
    """
    cf = closed_form(f)
    out: list[tuple[CycNum, int, int, int]] = []
    level = cf.level
    for j in range(level):
        by_k: dict[int, CycNum] = {}
        for t in cf.terms:
            k = t.mult - 1
            contrib = t.coef * root_of_unity(level, t.root_exp * j)
            by_k[k] = by_k.get(k, CycNum(0)) + contrib
        for k in sorted(by_k):
            c = conductor_reduce(by_k[k])
            if not c.is_zero():
                out.append((c, k, j, level))
    return out


def qp_reassemble(parts: list[tuple[CycNum, int, int, int]]) -> RatFun:
    """Inverse of qp_decompose: rebuild Sum c * (x d/dx)^k (x^j / (1 - x^L))."""
    pairs = []
    for c, k, j, level in parts:
        base = RatFun(Poly([0] * j + [1]), Poly([1] + [0] * (level - 1) + [-1]))
        pairs.append((c, base.weight_raise(k)))
    return linear_combine(pairs)


# -- text form -----------------------------------------------------------------------


def _format_coef(c: CycNum) -> tuple[str, bool]:
    """(text, needs_parens). Rational coefficients print bare."""
    if c.is_rational():
        fr = c.as_fraction()
        if fr.denominator == 1:
            return str(fr.numerator), False
        return f"{fr.numerator}/{fr.denominator}", False
    from .cyclotomic import format_cyc

    return f"({format_cyc(c)})", True


def format_poly(p: Poly) -> str:
    """Ascending-degree text like '1-2*x+x^3'."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        if c.is_rational():
            fr = c.as_fraction()
            negative = fr < 0
            mag = -fr if negative else fr
            mag_text = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if i == 0:
                term = mag_text
            else:
                xpart = "x" if i == 1 else f"x^{i}"
                term = xpart if mag == 1 else f"{mag_text}*{xpart}"
            sign = "-" if negative else "+"
        else:
            coef_text, _ = _format_coef(c)
            xpart = "" if i == 0 else ("*x" if i == 1 else f"*x^{i}")
            term = f"{coef_text}{xpart}"
            sign = "+"
        if not parts:
            parts.append(term if sign == "+" else f"-{term}")
        else:
            parts.append(f"{sign}{term}")
    return "".join(parts)


def format_ratfun(f: RatFun) -> str:
    if f.is_zero():
        return "0"
    return f"({format_poly(f.num)})/({format_poly(f.den)})"
