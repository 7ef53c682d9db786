"""The sifting operators f = Sum a_n x^n -> Sum a_{pn} x^n on rational functions.

The action is computed exactly: the image denominator has each pole root
raised to its p-th power, built from Newton power sums so all work stays in
the coefficient field, and the image numerator is read off by matching
sifted series coefficients.  Every application is re-verified against a
window of further sifted coefficients before being returned.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycNum, conductor_reduce, root_of_unity
from .errors import (
    HeckeError,
    IndexOutOfRange,
    InternalMismatch,
    NotAnEigenfunction,
)
from .polynomial import Poly
from .ratfun import RatFun, linear_combine

# -- symmetric function plumbing -------------------------------------------------


def power_sums_from_poly(b: Poly, count: int) -> list[CycNum]:
    """Power sums s_1..s_count of the inverse roots of b, with b(0) = 1.

    b = prod (1 - g_j x) has elementary symmetric e_k = (-1)^k b_k; Newton's
    identities convert to s_k = sum g_j^k without leaving the field.
    """
    d = b.degree
    e = [CycNum(0)] * (count + 1)
    for k in range(1, min(d, count) + 1):
        e[k] = b.coeff(k) * ((-1) ** k)
    s: list[CycNum] = [CycNum(0)] * (count + 1)
    for k in range(1, count + 1):
        acc = e[k] * ((-1) ** (k - 1) * k) if k <= d else CycNum(0)
        for i in range(1, min(k - 1, d) + 1):
            if e[i]:
                acc = acc + e[i] * s[k - i] * ((-1) ** (i - 1))
        s[k] = acc
    return s[1:]


def poly_from_power_sums(s: list[CycNum], d: int) -> Poly:
    """Monic-at-0 polynomial prod (1 - g_j x) of degree d from s_1..s_d."""
    e = [CycNum(0)] * (d + 1)
    e[0] = CycNum(1)
    for k in range(1, d + 1):
        acc = CycNum(0)
        for i in range(1, k + 1):
            term = e[k - i] * s[i - 1]
            if i % 2 == 0:
                term = -term
            acc = acc + term
        e[k] = acc * Fraction(1, k)
    coeffs = [e[k] * ((-1) ** k) for k in range(d + 1)]
    return Poly(coeffs)


def denominator_power_map(b: Poly, p: int) -> Poly:
    """The same-degree polynomial whose inverse roots are p-th powers of b's."""
    if b.constant() != CycNum(1):
        raise HeckeError("power map needs constant term 1")
    d = b.degree
    if d == 0 or p == 1:
        return b
    s = power_sums_from_poly(b, p * d)
    sp = [s[p * k - 1] for k in range(1, d + 1)]
    return poly_from_power_sums(sp, d)


def norm_product(b: Poly, p: int) -> Poly:
    """prod_{j=0}^{p-1} b(zeta_p^j x), conductor-reduced coefficientwise."""
    if p < 1:
        raise HeckeError("need p >= 1")
    out = Poly([1])
    for j in range(p):
        out = out * b.scale_arg(root_of_unity(p, j))
    return Poly([conductor_reduce(c) for c in out.coeffs])


# -- the operator itself -----------------------------------------------------------


def hecke_apply(f: RatFun, p: int) -> RatFun:
    """Exact rational form of Sum a_{pn} x^n.

    The image denominator comes from denominator_power_map; the numerator's
    d coefficients equal the truncated convolution den * sifted-series. The
    result is replayed against 2d further sifted coefficients.
    """
    if p < 1:
        raise HeckeError("operator index must be >= 1")
    if p == 1 or f.is_zero():
        return f
    d = f.den.degree
    den = denominator_power_map(f.den, p)
    sample = f.series(p * (3 * d - 1) + 1)
    sifted = sample[::p]
    dc = den.coeffs
    num_coeffs = []
    for k in range(d):
        acc = CycNum(0)
        for i in range(min(k, den.degree) + 1):
            if dc[i]:
                acc = acc + dc[i] * sifted[k - i]
        num_coeffs.append(acc)
    result = RatFun(Poly(num_coeffs), den)
    if result.series(3 * d) != sifted[: 3 * d]:
        raise InternalMismatch("sifted series does not match its rational form")
    return result


def eigenvalue_of(f: RatFun, p: int) -> CycNum:
    """The λ with U_p f = λ f, when one exists."""
    if f.is_zero():
        raise NotAnEigenfunction("the zero function is excluded")
    g = hecke_apply(f, p)
    a = f.series(f.den.degree + 1)
    b = g.series(f.den.degree + 1)
    lam = None
    for an, bn in zip(a, b):
        if an:
            lam = bn / an
            break
    if lam is None:
        raise InternalMismatch("nonzero function with vanishing leading series")
    if g != f * lam:
        raise NotAnEigenfunction(f"not an eigenfunction of the index-{p} operator")
    return lam


def p_section_check(f: RatFun, p: int, lam) -> bool:
    """Exact identity λ f(x^p) = (1/p) Sum_j f(zeta_p^j x)."""
    lam = lam if isinstance(lam, CycNum) else CycNum(lam)
    if lam.is_zero():
        raise HeckeError("the section identity needs λ != 0")
    if p < 1:
        raise HeckeError("need p >= 1")
    pairs = [(CycNum(Fraction(1, p)), f.scale_arg(root_of_unity(p, j))) for j in range(p)]
    rhs = linear_combine(pairs)
    lhs = f.substitute_power(p) * lam
    return lhs == rhs


def kernel_element(g: RatFun, p: int, j: int) -> RatFun:
    """x^j g(x^p), annihilated by the index-p operator."""
    if not 1 <= j < p:
        raise IndexOutOfRange(f"need 1 <= j < p, got j={j}, p={p}")
    num = g.num.compose_power(p).shift(j)
    den = g.den.compose_power(p)
    return RatFun(num, den)


def hecke_compose_check(f: RatFun, m: int, n: int) -> bool:
    """U_m U_n = U_{mn} = U_n U_m on f, checked exactly."""
    if m < 1 or n < 1:
        raise HeckeError("need m, n >= 1")
    via_m = hecke_apply(hecke_apply(f, n), m)
    via_n = hecke_apply(hecke_apply(f, m), n)
    direct = hecke_apply(f, m * n)
    return via_m == direct and via_n == direct
