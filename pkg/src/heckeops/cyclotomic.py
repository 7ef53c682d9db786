"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A CycNum is stored in the power basis 1, z, ..., z^(phi(N)-1) of Q(zeta_N),
where z = exp(2*pi*i/N), reduced mod the N-th cyclotomic polynomial.  The
coefficient vector is kept as integers over a single positive denominator,
with the joint gcd divided out, so the representation is canonical: two
CycNum with the same conductor are equal iff their fields are equal.

Conductors are normalized to never be 2 mod 4 (Q(zeta_{2m}) = Q(zeta_m) for
odd m), so the lcm of two conductors is again a valid conductor.  Rational
numbers live at conductor 1; BigRat is the exact rational scalar type.

Multiplication packs coefficient vectors into big integers (signed Kronecker
substitution) so convolution rides the interpreter's bigint multiply; the
naive loop is kept for small vectors and as a cross-check in tests.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import HeckeError
from .numtheory import divisors, euler_phi

BigRat = Fraction

# Conductors above this are refused up front; desk-scale work stays far below.
MAX_CONDUCTOR = 1000

_APPROX_GUARD_BITS = 20


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree."""
    if n < 1:
        raise HeckeError("cyclotomic polynomial needs n >= 1")
    if n == 1:
        return (-1, 1)
    poly = [0] * (n + 1)
    poly[0] = -1
    poly[n] = 1
    for d in divisors(n)[:-1]:
        poly = _div_exact_monic(poly, cyclotomic_poly(d))
    return tuple(poly)


def _div_exact_monic(a: list[int], b: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials, b monic; ascending coeffs."""
    a = list(a)
    db = len(b) - 1
    da = len(a) - 1
    q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = a[i + db]
        if c:
            q[i] = c
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    if any(a):
        raise HeckeError("non-exact polynomial division")
    return q


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row m-phi(n) is x^m reduced mod Phi_n, for m = phi(n) .. n-1."""
    poly = cyclotomic_poly(n)
    deg = len(poly) - 1
    rows: list[tuple[int, ...]] = []
    if deg >= n:
        return ()
    row = tuple(-c for c in poly[:deg])
    rows.append(row)
    for _ in range(deg + 1, n):
        top = row[deg - 1]
        base = rows[0]
        row = tuple((row[i - 1] if i else 0) + top * base[i] for i in range(deg))
        rows.append(row)
    return tuple(rows)


_NAIVE_CONV_CUTOFF = 256


def _conv_naive(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _conv(a: list[int], b: list[int]) -> list[int]:
    """Integer convolution; packed multiply for larger vectors."""
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    if la * lb <= _NAIVE_CONV_CUTOFF:
        return _conv_naive(a, b)
    ma = max(map(abs, a))
    mb = max(map(abs, b))
    if ma == 0 or mb == 0:
        return [0] * (la + lb - 1)
    # Every convolution digit is bounded by min(la, lb)*ma*mb, which must
    # stay under half the digit modulus for balanced digits to be unique.
    width = (min(la, lb) * ma * mb).bit_length() + 2
    packed_a = 0
    for x in reversed(a):
        packed_a = (packed_a << width) + x
    packed_b = 0
    for x in reversed(b):
        packed_b = (packed_b << width) + x
    prod = packed_a * packed_b
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    modulus = 1 << width
    out = []
    for _ in range(la + lb - 1):
        d = prod & mask
        if d >= half:
            d -= modulus
        out.append(d)
        prod = (prod - d) >> width
    if prod:
        raise AssertionError("packed convolution leftover")
    return out


def _reduce_dense(n: int, dense: list[int]) -> list[int]:
    """Reduce a length-n coefficient vector (exponents mod n) mod Phi_n."""
    phi = euler_phi(n)
    vec = dense[:phi]
    if len(vec) < phi:
        vec = vec + [0] * (phi - len(vec))
    rows = _reduction_rows(n)
    for e in range(phi, min(len(dense), n)):
        c = dense[e]
        if c:
            row = rows[e - phi]
            for i, r in enumerate(row):
                if r:
                    vec[i] += c * r
    return vec


def _check_conductor(n: int) -> None:
    if n > MAX_CONDUCTOR:
        raise HeckeError(f"conductor {n} exceeds the configured cap {MAX_CONDUCTOR}")


class CycNum:
    """An element of Q(zeta_N), exact, in reduced power-basis form."""

    __slots__ = ("_n", "_num", "_den")

    def __init__(self, value: int | Fraction | CycNum = 0):
        if isinstance(value, CycNum):
            self._n, self._num, self._den = value._n, value._num, value._den
        elif isinstance(value, int):
            self._n, self._num, self._den = 1, (value,), 1
        elif isinstance(value, Fraction):
            self._n = 1
            self._num = (value.numerator,)
            self._den = value.denominator
        else:
            raise TypeError(f"cannot build a cyclotomic number from {type(value).__name__}")

    @staticmethod
    def _raw(n: int, num: tuple[int, ...], den: int) -> CycNum:
        obj = object.__new__(CycNum)
        obj._n, obj._num, obj._den = n, num, den
        return obj

    @staticmethod
    def _make(n: int, num: list[int], den: int) -> CycNum:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [-x for x in num]
        g = den
        for x in num:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            den //= g
            num = [x // g for x in num]
        return CycNum._raw(n, tuple(num), den)

    # -- structure ---------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Power-basis coordinates as exact rationals, length phi(N)."""
        d = self._den
        return tuple(Fraction(x, d) for x in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise HeckeError("not a rational number")
        return Fraction(self._num[0], self._den)

    # -- conductor handling -------------------------------------------------

    def _embed(self, target: int) -> CycNum:
        if target == self._n:
            return self
        _check_conductor(target)
        step = target // self._n
        dense = [0] * target
        for i, c in enumerate(self._num):
            if c:
                dense[i * step] += c
        return CycNum._raw(target, tuple(_reduce_dense(target, dense)), self._den)

    @staticmethod
    def _unify(a: CycNum, b: CycNum) -> tuple[CycNum, CycNum, int]:
        na, nb = a._n, b._n
        if na == nb:
            return a, b, na
        t = lcm(na, nb)
        return a._embed(t), b._embed(t), t

    def reduce_conductor(self) -> CycNum:
        """Re-express at the smallest cyclotomic conductor containing the value."""
        n = self._n
        if n == 1:
            return self
        if self.is_rational():
            return CycNum._raw(1, (self._num[0],), self._den)
        for m in divisors(n)[1:-1]:
            if m % 4 == 2:
                continue
            sol = _subfield_solve(n, m, self._num)
            if sol is not None:
                num, scale = sol
                return CycNum._make(m, num, self._den * scale)
        return self

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(value) -> CycNum | None:
        if isinstance(value, CycNum):
            return value
        if isinstance(value, (int, Fraction)):
            return CycNum(value)
        return None

    def __add__(self, other) -> CycNum:
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        a, b, n = CycNum._unify(self, other)
        if a._den == b._den:
            num = [x + y for x, y in zip(a._num, b._num)]
            return CycNum._make(n, num, a._den)
        d = lcm(a._den, b._den)
        sa, sb = d // a._den, d // b._den
        num = [x * sa + y * sb for x, y in zip(a._num, b._num)]
        return CycNum._make(n, num, d)

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum._raw(self._n, tuple(-x for x in self._num), self._den)

    def __sub__(self, other) -> CycNum:
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> CycNum:
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> CycNum:
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        if self._n == 1 and other._n == 1:
            return CycNum._make(1, [self._num[0] * other._num[0]], self._den * other._den)
        a, b, n = CycNum._unify(self, other)
        conv = _conv(list(a._num), list(b._num))
        dense = [0] * n
        for e, c in enumerate(conv):
            if c:
                dense[e % n] += c
        return CycNum._make(n, _reduce_dense(n, dense), a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self._n == 1:
            return CycNum._make(1, [self._den], self._num[0])
        inv = _power_basis_inverse(self._n, self._num)
        # inv is a Fraction vector with (num_vec/1) * inv = 1; scale by den.
        den_lcm = 1
        for f in inv:
            den_lcm = lcm(den_lcm, f.denominator)
        num = [int(f * den_lcm) * self._den for f in inv]
        return CycNum._make(self._n, num, den_lcm)

    def __truediv__(self, other) -> CycNum:
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        if self._n == 1 and other._n == 1:
            if not any(other._num):
                raise ZeroDivisionError("division by zero")
            return CycNum._make(1, [self._num[0] * other._den], self._den * other._num[0])
        return self * other.inverse()

    def __rtruediv__(self, other) -> CycNum:
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> CycNum:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = CycNum._coerce(other)
        if other is None:
            return NotImplemented
        if self._n == other._n:
            return self._num == other._num and self._den == other._den
        a, b, _ = CycNum._unify(self, other)
        return a._num == b._num and a._den == b._den

    __hash__ = None  # canonical hashing would need conductor reduction; use sort_key

    # -- Galois actions ------------------------------------------------------

    def galois(self, k: int) -> CycNum:
        """Apply zeta -> zeta^k; k must be a unit mod the conductor."""
        n = self._n
        if n == 1:
            return self
        k %= n
        if gcd(k, n) != 1:
            raise HeckeError(f"{k} is not a unit mod {n}")
        dense = [0] * n
        for i, c in enumerate(self._num):
            if c:
                dense[i * k % n] += c
        return CycNum._raw(n, tuple(_reduce_dense(n, dense)), self._den)

    def conjugate(self) -> CycNum:
        return self.galois(self._n - 1) if self._n > 1 else self

    def is_real(self) -> bool:
        return self._n == 1 or self.conjugate() == self

    # -- numerics ------------------------------------------------------------

    def approx(self, precision_bits: int = 53):
        """(re, im) floating pair with error below 2^-precision_bits."""
        if precision_bits < 53:
            raise HeckeError("precision_bits must be at least 53")
        from mpmath import mp, mpf

        n = self._n
        with mp.workprec(precision_bits + _APPROX_GUARD_BITS):
            re = mpf(0)
            im = mpf(0)
            two_pi = 2 * mp.pi
            for i, c in enumerate(self._num):
                if c:
                    ang = two_pi * i / n
                    re += c * mp.cos(ang)
                    im += c * mp.sin(ang)
            re /= self._den
            im /= self._den
            return (+re, +im)

    def sign(self) -> int:
        """Exact sign of a real cyclotomic number (-1, 0, +1)."""
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self._num[0] > 0 else -1
        if not self.is_real():
            raise HeckeError("sign of a non-real number")
        from mpmath import iv

        prec = 64
        n = self._n
        while prec <= 1 << 14:
            saved = iv.prec
            try:
                iv.prec = prec
                total = iv.mpf(0)
                two_pi = 2 * iv.pi
                for i, c in enumerate(self._num):
                    if c:
                        total += c * iv.cos(two_pi * i / n)
            finally:
                iv.prec = saved
            if total.a > 0:
                return 1
            if total.b < 0:
                return -1
            prec *= 2
        raise HeckeError("sign refinement did not separate a nonzero value from 0")

    def abs_square(self) -> CycNum:
        """|a|^2 = a * conj(a), always real."""
        return self * self.conjugate()

    # -- ordering and text ----------------------------------------------------

    def sort_key(self):
        """Arbitrary but fixed total order key, for deterministic output."""
        return (self._n, self._den, self._num)

    def __str__(self) -> str:
        return format_cyc(self)

    def __repr__(self) -> str:
        return f"CycNum({format_cyc(self)!r})"


def root_of_unity(order: int, k: int = 1) -> CycNum:
    """zeta_order^k at its minimal conductor."""
    if order < 1:
        raise HeckeError("root order must be >= 1")
    k %= order
    g = gcd(k, order) if k else order
    order //= g
    k //= g
    if order == 1:
        return CycNum(1)
    if order == 2:
        return CycNum(-1)
    if order % 4 == 2:
        m = order // 2
        a = root_of_unity(m, k * ((m + 1) // 2) % m)
        return -a if k % 2 else a
    _check_conductor(order)
    phi = euler_phi(order)
    if k < phi:
        num = [0] * phi
        num[k] = 1
    else:
        num = list(_reduction_rows(order)[k - phi])
    return CycNum._raw(order, tuple(num), 1)


# -- subfield membership ------------------------------------------------------


def _power_basis_inverse(n: int, num: tuple[int, ...]) -> list[Fraction]:
    """Inverse of sum(num[i] z^i) mod Phi_n as a Fraction vector."""
    phi_poly = [Fraction(c) for c in cyclotomic_poly(n)]
    a = [Fraction(c) for c in num]
    # extended Euclid: maintain s with s*a = r mod Phi
    r0, s0 = phi_poly, [Fraction(0)]
    r1, s1 = list(a), [Fraction(1)]
    while True:
        while r1 and r1[-1] == 0:
            r1.pop()
        if len(r1) <= 1:
            break
        q, rem = _frac_poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s_new = _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        s0, s1 = s1, s_new
    if not r1:
        raise ZeroDivisionError("inverse of zero")
    c = r1[0]
    phi = euler_phi(n)
    out = [f / c for f in s1]
    # s1 has degree < deg Phi already, but pad to length phi
    out = out[:phi] + [Fraction(0)] * max(0, phi - len(out))
    return out


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - db)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] * inv_lead
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    la, lb = len(a), len(b)
    return [
        (a[i] if i < la else Fraction(0)) - (b[i] if i < lb else Fraction(0))
        for i in range(max(la, lb))
    ]


@lru_cache(maxsize=None)
def _subfield_basis_echelon(n: int, m: int):
    """Echelon data for deciding membership of Q(zeta_n) elements in Q(zeta_m).

    Returns (pivots, transform) where transform is a phi(n) x phi(n) Fraction
    matrix T with T*E in reduced echelon form, E the embedding matrix whose
    columns are the power-basis images of zeta_m^i.
    """
    phi_n = euler_phi(n)
    phi_m = euler_phi(m)
    step = n // m
    cols = []
    for i in range(phi_m):
        dense = [0] * n
        dense[i * step] = 1
        cols.append(_reduce_dense(n, dense))
    rows = [
        [Fraction(cols[j][i]) for j in range(phi_m)] + _unit_row(phi_n, i)
        for i in range(phi_n)
    ]
    pivots = []
    r = 0
    for c in range(phi_m):
        pivot = next((i for i in range(r, phi_n) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(phi_n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    transform = tuple(tuple(row[phi_m:]) for row in rows)
    return tuple(pivots), transform, r


def _unit_row(width: int, i: int) -> list[Fraction]:
    row = [Fraction(0)] * width
    row[i] = Fraction(1)
    return row


def _subfield_solve(n: int, m: int, num: tuple[int, ...]):
    """Coordinates of the value in Q(zeta_m)'s power basis, or None.

    Returns (int_vector, scale) with value = int_vector / (den*scale)."""
    pivots, transform, rank = _subfield_basis_echelon(n, m)
    phi_n = euler_phi(n)
    w = []
    for row in transform:
        acc = Fraction(0)
        for x, c in zip(row, num):
            if c:
                acc += x * c
        w.append(acc)
    if any(w[i] != 0 for i in range(rank, phi_n)):
        return None
    coords = [Fraction(0)] * euler_phi(m)
    for r, c in enumerate(pivots):
        coords[c] = w[r]
    scale = 1
    for f in coords:
        scale = lcm(scale, f.denominator)
    return [int(f * scale) for f in coords], scale


# -- text form ------------------------------------------------------------------


def format_cyc(a: CycNum) -> str:
    """Rationals as p/q; otherwise 'Q(zeta N): c0 + c1 z - ... z^k'."""
    if a.is_rational():
        f = a.as_fraction()
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    parts = []
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        coef = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        if i == 0:
            term = coef
        else:
            var = "z" if i == 1 else f"z^{i}"
            term = var if mag == 1 else f"{coef}*{var}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return f"Q(zeta {a.conductor}): " + " ".join(parts)


def parse_cyc(text: str) -> CycNum:
    """Inverse of format_cyc."""
    text = text.strip()
    if not text.startswith("Q(zeta"):
        if "/" in text:
            p, q = text.split("/")
            return CycNum(Fraction(int(p), int(q)))
        return CycNum(int(text))
    head, _, body = text.partition(":")
    n = int(head[len("Q(zeta") : -1].strip())
    _check_conductor(n)
    z = root_of_unity(n)
    total = CycNum(0)
    tokens = body.replace("-", " - ").replace("+", " + ").split()
    sign = 1
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok == "+":
            sign = 1
            i += 1
            continue
        if tok == "-":
            sign = -1
            i += 1
            continue
        coef = Fraction(1)
        power = 0
        for piece in tok.split("*"):
            if piece.startswith("z"):
                power = 1 if piece == "z" else int(piece[2:])
            else:
                coef = Fraction(piece)
        total = total + CycNum(sign * coef) * z**power
        sign = 1
        i += 1
    return total


def conductor_reduce(a: CycNum) -> CycNum:
    """Module-level alias for CycNum.reduce_conductor."""
    return a.reduce_conductor()
