"""Spectral zeta functions: spectra of the sifting operators and tensor products.

The operator for index p acting on the graded space has point spectrum
{p^k : k >= 0}, each simple, witnessed by the weighted geometric family.
Tensoring operators for distinct prime indices multiplies spectra, so the
tensor over a prime set S has spectrum the S-smooth integers, and the tensor
over all primes enumerates every positive integer exactly once.  The zeta
functions here are always finite truncations of the corresponding sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .cyclotomic import CycNum
from .eigen import phi_k
from .errors import DuplicatePrime, HeckeError, InternalMismatch, SBelowAbscissa
from .hecke import hecke_apply
from .numtheory import is_prime, primes_upto
from .ratfun import RatFun

__all__ = [
    "SpectrumEnum",
    "TensorElement",
    "ZetaValue",
    "eigen_witness",
    "spectrum_Up",
    "tensor_apply",
    "tensor_spectrum",
    "witness_verified",
    "zeta_US",
    "zeta_U_truncated",
]

DEFAULT_DPS = 30


def spectrum_Up(p: int, k_max: int) -> list[int]:
    """Eigenvalues p^0..p^k_max of the index-p operator, each simple."""
    if p < 2:
        raise HeckeError("operator index must be at least 2")
    if k_max < 0:
        raise HeckeError("k_max must be nonnegative")
    return [p**k for k in range(k_max + 1)]


@dataclass(frozen=True)
class TensorElement:
    """Decomposable tensor represented by its factor list.

    Factors beyond the list are implicitly the constant function 1, so the
    representation does not fix an arity.
    """

    factors: tuple[RatFun, ...]

    def __len__(self) -> int:
        return len(self.factors)


def tensor_apply(elem: TensorElement, primes: tuple[int, ...]) -> TensorElement:
    """Apply the tensor operator factor-wise, one prime index per slot."""
    if len(primes) != len(elem.factors):
        raise HeckeError("one prime index required per tensor factor")
    return TensorElement(tuple(hecke_apply(f, p) for f, p in zip(elem.factors, primes)))


def _validate_primes(s_list) -> tuple[int, ...]:
    out: list[int] = []
    seen: set[int] = set()
    for p in s_list:
        p = int(p)
        if not is_prime(p):
            raise HeckeError(f"{p} is not prime")
        if p in seen:
            raise DuplicatePrime(f"prime {p} repeated")
        seen.add(p)
        out.append(p)
    return tuple(sorted(out))


def _smooth_factorization(primes: tuple[int, ...], value: int) -> list[int]:
    exps = []
    rest = value
    for p in primes:
        k = 0
        while rest % p == 0:
            rest //= p
            k += 1
        exps.append(k)
    if rest != 1:
        raise HeckeError(f"{value} is not smooth over {list(primes)}")
    return exps


def eigen_witness(primes, lam: int) -> TensorElement:
    """Decomposable eigenfunction with tensor eigenvalue lam."""
    primes = _validate_primes(primes)
    exps = _smooth_factorization(primes, lam)
    return TensorElement(tuple(phi_k(k) for k in exps))


def witness_verified(primes, lam: int) -> bool:
    """Replay the defining relation on the witness for eigenvalue lam."""
    primes = _validate_primes(primes)
    exps = _smooth_factorization(primes, lam)
    elem = eigen_witness(primes, lam)
    applied = tensor_apply(elem, primes)
    product = 1
    for before, after, p, k in zip(elem.factors, applied.factors, primes, exps):
        scale = p**k
        if after != before * CycNum(scale):
            return False
        product *= scale
    return product == lam


@dataclass(frozen=True)
class SpectrumEnum:
    """Sorted truncated spectrum of a tensor operator, all eigenvalues simple."""

    primes: tuple[int, ...]
    bound: int
    eigenvalues: tuple[int, ...]

    def multiplicity(self, lam: int) -> int:
        return 1 if lam in self.eigenvalues else 0


def _smooth_upto(primes: tuple[int, ...], bound: int) -> list[int]:
    found: list[int] = []
    seen: set[int] = set()

    def extend(i: int, product: int) -> None:
        if product in seen:
            raise InternalMismatch("smooth enumeration produced a duplicate")
        seen.add(product)
        found.append(product)
        for j in range(i, len(primes)):
            nxt = product * primes[j]
            if nxt <= bound:
                extend(j, nxt)

    extend(0, 1)
    return sorted(found)


def tensor_spectrum(s_list, bound: int) -> SpectrumEnum:
    """All S-smooth eigenvalues up to bound, each with multiplicity one."""
    primes = _validate_primes(s_list)
    if bound < 1:
        raise HeckeError("bound must be at least 1")
    return SpectrumEnum(primes, bound, tuple(_smooth_upto(primes, bound)))


@dataclass(frozen=True)
class ZetaValue:
    """Truncated spectral zeta sum next to its limiting closed form.

    partial_sum and closed_form are mpmath floats; the exact fields are
    populated when s is an integer.  tail_bound is an upper bound on
    closed_form - partial_sum.
    """

    s: object
    bound: int
    partial_sum: object
    closed_form: object
    tail_bound: object
    partial_exact: Fraction | None = None
    closed_exact: Fraction | None = None


def _check_s(s) -> None:
    if isinstance(s, bool) or not isinstance(s, (int, float, Fraction)):
        raise HeckeError("s must be a real number")
    if not s > 1:
        raise SBelowAbscissa(f"s = {s} is not above the abscissa s = 1")


def _exact_mode(s) -> int | None:
    if isinstance(s, bool):
        return None
    if isinstance(s, int):
        return s
    if isinstance(s, Fraction) and s.denominator == 1:
        return int(s)
    return None


def zeta_US(s_list, s, bound: int, dps: int = DEFAULT_DPS) -> ZetaValue:
    """Zeta of the tensor over the prime set, truncated at the given bound."""
    _check_s(s)
    spectrum = tensor_spectrum(s_list, bound)
    s_int = _exact_mode(s)
    partial_exact = closed_exact = None
    with mpmath.workdps(dps):
        if s_int is not None:
            partial_exact = sum(
                (Fraction(1, lam**s_int) for lam in spectrum.eigenvalues),
                Fraction(0),
            )
            closed_exact = Fraction(1)
            for p in spectrum.primes:
                closed_exact *= Fraction(p**s_int, p**s_int - 1)
            partial = mpmath.mpf(partial_exact.numerator) / partial_exact.denominator
            closed = mpmath.mpf(closed_exact.numerator) / closed_exact.denominator
        else:
            partial = mpmath.mpf(0)
            for lam in spectrum.eigenvalues:
                partial += mpmath.power(lam, -s)
            closed = mpmath.mpf(1)
            for p in spectrum.primes:
                closed /= 1 - mpmath.power(p, -s)
        tail = closed - partial
        if tail < 0:
            raise InternalMismatch("partial sum exceeded its closed form")
    return ZetaValue(s, bound, partial, closed, tail, partial_exact, closed_exact)


def zeta_U_truncated(s, bound: int, dps: int = DEFAULT_DPS) -> ZetaValue:
    """Zeta of the all-primes tensor, truncated: the Riemann partial sum.

    The spectrum slice [1, bound] is enumerated through prime factorizations
    and checked against the integer range before summing, and the ascending
    spectral sum is checked against a direct range sum.
    """
    _check_s(s)
    if bound < 1:
        raise HeckeError("bound must be at least 1")
    primes = tuple(primes_upto(bound))
    enumerated = _smooth_upto(primes, bound)
    if enumerated != list(range(1, bound + 1)):
        raise InternalMismatch("spectrum enumeration missed part of the range")
    s_int = _exact_mode(s)
    partial_exact = None
    with mpmath.workdps(dps):
        if s_int is not None:
            partial_exact = sum(
                (Fraction(1, n**s_int) for n in enumerated), Fraction(0)
            )
            direct = sum(
                (Fraction(1, n**s_int) for n in range(1, bound + 1)), Fraction(0)
            )
            if direct != partial_exact:
                raise InternalMismatch("spectral and direct sums disagree")
            partial = mpmath.mpf(partial_exact.numerator) / partial_exact.denominator
        else:
            partial = mpmath.mpf(0)
            for lam in enumerated:
                partial += mpmath.power(lam, -s)
            direct = mpmath.mpf(0)
            for n in range(1, bound + 1):
                direct += mpmath.power(n, -s)
            if abs(direct - partial) > mpmath.mpf(10) ** (5 - dps):
                raise InternalMismatch("spectral and direct sums disagree")
        closed = mpmath.zeta(mpmath.mpf(str(s)) if isinstance(s, Fraction) else mpmath.mpf(s))
        s_float = float(s)
        tail = mpmath.power(bound, 1 - s_float) / (s_float - 1)
        if closed - partial < 0:
            raise InternalMismatch("partial sum exceeded the zeta value")
    return ZetaValue(s, bound, partial, closed, tail, partial_exact, None)
