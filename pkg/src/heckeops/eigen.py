"""Eigenfunctions of the sifting operators and their graded spaces.

Everything here revolves around one finite-dimensional reduction: when the
denominator B has its inverse-root multiset permuted by gamma -> gamma^p, the
operator U_p maps numerators over B to numerators over B, and that action is
the square matrix built by matrix_B.  Eigenfunction search, eigenvalue
candidates, the graded spaces of fixed weight and level, and the certified
spectrum scans are all exact linear algebra over cyclotomic numbers on top of
that matrix.

The module also carries Dirichlet characters (the arithmetic source of the
sign patterns the eigenvalues follow), the weighted geometric family obtained
by repeatedly applying x d/dx to 1/(1-x), and classifiers that recognize when
a rational function is a simultaneous eigenfunction or has completely
multiplicative coefficients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import factorial, gcd, lcm

from .cyclotomic import CycNum, conductor_reduce, root_of_unity
from .errors import (
    AdmissibilityFailed,
    HeckeError,
    InternalMismatch,
    NonUniformMultiplicity,
    NotAnEigenfunction,
    StructureViolated,
)
from .hecke import denominator_power_map, eigenvalue_of, hecke_apply, p_section_check
from .linalg import charpoly, mat_sub, nullspace, rank, rref, scalar_mat
from .numtheory import divisors
from .polynomial import Poly, count_real_roots
from .ratfun import (
    ClosedForm,
    RatFun,
    closed_form,
    level_of,
    pole_factors,
)

__all__ = [
    "DirichletChar",
    "PoleOrbitAtom",
    "EigenData",
    "SpaceBasis",
    "SpectrumProfile",
    "CertifiedForm",
    "SimultaneousReport",
    "MultiplicativeReport",
    "pole_orbit_atoms",
    "admissible_denominators",
    "matrix_B",
    "appendix_matrix_p2",
    "candidate_eigenvalues",
    "eigenspace",
    "eigen_data",
    "weight_of",
    "chi_value",
    "structure_closed_form",
    "periodicity_check",
    "char_eigenfunction",
    "phi_k",
    "eulerian_poly",
    "space_basis",
    "simultaneous_classify",
    "classify_multiplicative",
    "kernel_membership",
    "spectrum_profile",
    "involution_identity_holds",
    "minus_one_multiplicity",
]


# -- Dirichlet characters ---------------------------------------------------


@dataclass(frozen=True)
class DirichletChar:
    """Completely multiplicative residue function of period `modulus`.

    `values[j]` is the value at residue j.  It vanishes exactly on residues
    sharing a factor with the modulus, and values[1] is 1.  Modulus 1 is the
    constant function 1, including at 0.
    """

    modulus: int
    values: tuple[CycNum, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise HeckeError("character modulus must be positive")
        vals = tuple(v if isinstance(v, CycNum) else CycNum(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.modulus:
            raise HeckeError("character needs one value per residue")
        for j, v in enumerate(vals):
            if (gcd(j, self.modulus) == 1) == v.is_zero():
                raise HeckeError("character must vanish exactly off the units")
        if vals[1 % self.modulus] != CycNum(1):
            raise HeckeError("character must take value 1 at residue 1")
        units = [j for j in range(self.modulus) if gcd(j, self.modulus) == 1]
        for a in units:
            for b in units:
                if a <= b and vals[(a * b) % self.modulus] != vals[a] * vals[b]:
                    raise HeckeError("character values are not multiplicative")

    @classmethod
    def principal(cls, modulus: int) -> DirichletChar:
        """1 on residues coprime to the modulus, 0 elsewhere."""
        vals = [CycNum(1 if gcd(j, modulus) == 1 else 0) for j in range(modulus)]
        return cls(modulus, tuple(vals))

    @classmethod
    def quadratic(cls, modulus: int) -> DirichletChar:
        """The real character that is -1 exactly on the non-square units.

        Exists only when the squares have index 2 in the unit group, which
        pins the character down uniquely.
        """
        units = [j for j in range(modulus) if gcd(j, modulus) == 1]
        squares = {(j * j) % modulus for j in units}
        if len(units) != 2 * len(squares):
            raise HeckeError(
                "modulus %d has no unique quadratic character" % modulus
            )
        vals = []
        for j in range(modulus):
            if gcd(j, modulus) != 1:
                vals.append(CycNum(0))
            else:
                vals.append(CycNum(1 if j in squares else -1))
        return cls(modulus, tuple(vals))

    @classmethod
    def from_values(cls, modulus: int, values) -> DirichletChar:
        return cls(modulus, tuple(values))

    def __call__(self, n: int) -> CycNum:
        return self.values[n % self.modulus]

    def is_principal(self) -> bool:
        return all(v.is_zero() or v == CycNum(1) for v in self.values)

    def is_real(self) -> bool:
        return all(v.is_real() for v in self.values)


# -- admissible denominators ------------------------------------------------


@dataclass(frozen=True)
class PoleOrbitAtom:
    """Minimal real factor whose inverse roots are permuted by gamma -> gamma^p.

    The inverse roots are one power orbit of primitive order-`order` roots of
    unity, joined with the conjugate orbit when that is distinct, so the
    polynomial has real (not always rational) cyclotomic coefficients.
    """

    order: int
    exponents: tuple[int, ...]
    poly: Poly

    @property
    def size(self) -> int:
        return len(self.exponents)


def _orbit_closure(start: int, p: int, order: int) -> tuple[int, ...]:
    seen: set[int] = set()
    frontier = [start]
    while frontier:
        u = frontier.pop()
        if u in seen:
            continue
        seen.add(u)
        frontier.append((u * p) % order)
        frontier.append((-u) % order)
    return tuple(sorted(seen))


def _candidate_orders(p: int, max_size: int) -> list[int]:
    # The power map has orbit length ord_o(p) on primitive order-o roots, so
    # any order fitting in max_size divides p^t - 1 for some t <= max_size.
    orders: set[int] = {1}
    for t in range(1, max_size + 1):
        orders.update(divisors(p**t - 1))
    return sorted(orders)


def pole_orbit_atoms(p: int, max_size: int) -> list[PoleOrbitAtom]:
    """All conjugation-closed power orbits of roots of unity, up to max_size."""
    if p < 2:
        raise HeckeError("sifting index must be at least 2")
    atoms: list[PoleOrbitAtom] = []
    for order in _candidate_orders(p, max_size):
        if order == 1:
            atoms.append(PoleOrbitAtom(1, (0,), Poly([1, -1])))
            continue
        done: set[int] = set()
        for u in range(1, order):
            if u in done or gcd(u, order) != 1:
                continue
            exps = _orbit_closure(u, p, order)
            done.update(exps)
            if len(exps) > max_size:
                continue
            factor = Poly([1])
            for e in exps:
                factor = factor * Poly([CycNum(1), -root_of_unity(order, e)])
            factor = Poly([conductor_reduce(c) for c in factor.coeffs])
            if not factor.is_real_poly():
                raise InternalMismatch("conjugation-closed orbit gave complex factor")
            atoms.append(PoleOrbitAtom(order, exps, factor))
    return atoms


def admissible_denominators(p: int, max_degree: int) -> list[Poly]:
    """Every product of atom powers with degree at most max_degree.

    Each atom may enter with any multiplicity, independently of the others.
    The returned polynomials all satisfy B(x^p) = prod_j B(zeta_p^j x); the
    construction guarantees it and the power-map identity re-checks it.
    """
    if p < 2:
        raise HeckeError("sifting index must be at least 2")
    atoms = pole_orbit_atoms(p, max_degree)
    found: list[Poly] = []

    def extend(i: int, room: int, product: Poly, nonempty: bool) -> None:
        if nonempty:
            found.append(product)
        for j in range(i, len(atoms)):
            power = product
            left = room
            while left >= atoms[j].size:
                power = power * atoms[j].poly
                left -= atoms[j].size
                extend(j + 1, left, power, True)

    extend(0, max_degree, Poly([1]), False)
    for b in found:
        if denominator_power_map(b, p) != b:
            raise InternalMismatch("orbit product failed the power-map identity")
    return sorted(found, key=_poly_sort_key)


def _poly_sort_key(b: Poly):
    return (b.degree, tuple(c.sort_key() for c in b.coeffs))


# -- the sifting matrix -----------------------------------------------------

# Keyed on the coefficient representation, so a hit proves the same b was
# already validated; misses only ever cost a recompute.
_MATRIX_CACHE: dict[tuple, list[list[CycNum]]] = {}
_MATRIX_CACHE_LIMIT = 4096


def matrix_B(b: Poly, p: int) -> list[list[CycNum]]:
    """Matrix of U_p on numerators over the admissible denominator b.

    Writing C = B(x^p)/B, the operator sends A/B to S(AC)/B where S keeps
    every p-th coefficient, so entry (k, m) is the coefficient of x^(pk-m)
    in C.  Raises AdmissibilityFailed when the inverse-root multiset of b is
    not permuted by gamma -> gamma^p, which is exactly when the division by
    B would not be exact.
    """
    if p < 2:
        raise HeckeError("sifting index must be at least 2")
    if b.degree < 0 or b.constant() != CycNum(1):
        raise HeckeError("denominator must have constant term 1")
    d = b.degree
    if d == 0:
        return []
    key = (p, _poly_sort_key(b))
    hit = _MATRIX_CACHE.get(key)
    if hit is not None:
        return [row[:] for row in hit]
    if denominator_power_map(b, p) != b:
        raise AdmissibilityFailed(
            "inverse roots of the denominator are not permuted by the power map"
        )
    cofactor = b.compose_power(p).exact_div(b)
    rows = [
        [conductor_reduce(cofactor.coeff(p * k - m)) for m in range(d)]
        for k in range(d)
    ]
    if len(_MATRIX_CACHE) >= _MATRIX_CACHE_LIMIT:
        _MATRIX_CACHE.clear()
    _MATRIX_CACHE[key] = [row[:] for row in rows]
    return rows


def appendix_matrix_p2(b: Poly) -> list[list[CycNum]]:
    """The printed alternating-sign matrix for p = 2, acting on x..x^(d-1).

    With b = 1 + a_1 x + ... + a_d x^d, entry (j, k) is (-1)^k a_(2j-k) for
    j, k = 1..d-1.  Requires the doubled-coefficient identity
    B(x)B(-x) = B(x^2) and the palindrome a_j = (-1)^d a_(d-j); it then
    equals the minor of matrix_B(b, 2) obtained by dropping the constant
    row and column.
    """
    if b.degree < 1 or b.constant() != CycNum(1):
        raise HeckeError("denominator must have constant term 1 and degree >= 1")
    d = b.degree
    if b * b.scale_arg(CycNum(-1)) != b.compose_power(2):
        raise AdmissibilityFailed("doubled-coefficient identity fails")
    sign = CycNum((-1) ** d)
    if b.reversed_coeffs(d + 1) != b * sign:
        raise AdmissibilityFailed("coefficient palindrome fails")
    return [
        [conductor_reduce(b.coeff(2 * j - k) * CycNum((-1) ** k)) for k in range(1, d)]
        for j in range(1, d)
    ]


# -- eigenvalues and eigenspaces --------------------------------------------


def _uniform_multiplicity(f: RatFun) -> int:
    mults = {pf.multiplicity for pf in pole_factors(f)}
    if len(mults) != 1:
        raise NonUniformMultiplicity("pole multiplicities are mixed: %s" % sorted(mults))
    return mults.pop()


def candidate_eigenvalues(p: int, b: Poly) -> list[CycNum]:
    """The two possible nonzero eigenvalues over denominator b: +-p^(kappa-1)."""
    if p < 2:
        raise HeckeError("sifting index must be at least 2")
    if b.degree < 1:
        raise HeckeError("denominator must have positive degree")
    kappa = _uniform_multiplicity(RatFun(Poly([1]), b))
    lam = p ** (kappa - 1)
    return [CycNum(lam), CycNum(-lam)]


def _canonical_rows(vectors: list[list[CycNum]]) -> list[list[CycNum]]:
    if not vectors:
        return []
    echelon, pivots = rref(vectors)
    return echelon[: len(pivots)]


def eigenspace(
    b: Poly, p: int, lam, constant_term_zero: bool = False
) -> list[Poly]:
    """Basis of numerators A with U_p(A/b) = lam * (A/b), canonically reduced.

    The basis is the reduced row echelon form of the nullspace of the sifting
    matrix minus lam, sorted by degree; every member is re-verified through
    the series-level operator before being returned.
    """
    lam = lam if isinstance(lam, CycNum) else CycNum(lam)
    mat = matrix_B(b, p)
    d = len(mat)
    rows = mat_sub(mat, scalar_mat(d, lam))
    if constant_term_zero:
        rows = rows + [[CycNum(1 if m == 0 else 0) for m in range(d)]]
    vectors = nullspace(rows)
    basis = [Poly(v) for v in _canonical_rows(vectors)]
    basis.sort(key=_poly_sort_key)
    for num in basis:
        f = RatFun(num, b)
        if hecke_apply(f, p) != f * lam:
            raise InternalMismatch("matrix eigenvector failed the operator replay")
    return basis


@dataclass(frozen=True)
class EigenData:
    """A verified eigenpair with its structural invariants.

    weight is the uniform pole multiplicity of the reduced function, level
    the least common multiple of its pole orders, char_value the sign of the
    eigenvalue, and is_rational records whether numerator and denominator
    have rational coefficients.
    """

    func: RatFun
    p: int
    eigenvalue: CycNum
    weight: int
    level: int
    char_value: int
    is_rational: bool


def eigen_data(f: RatFun, p: int) -> EigenData:
    """Verify that f is a nonzero-eigenvalue eigenfunction and package it."""
    lam = eigenvalue_of(f, p)
    if lam.is_zero():
        raise NotAnEigenfunction("kernel members carry no eigenvalue data")
    if not p_section_check(f, p, lam):
        raise InternalMismatch("eigenvalue failed the section identity")
    red = f.reduced()
    kappa = _uniform_multiplicity(red)
    level = level_of(red)
    if lam * lam != CycNum(p ** (2 * (kappa - 1))):
        raise InternalMismatch("eigenvalue size disagrees with the pole multiplicity")
    if gcd(p, level) != 1:
        raise InternalMismatch("eigenfunction level shares a factor with p")
    if not lam.is_real():
        raise StructureViolated("eigenvalue of a real-structure eigenpair is complex")
    chi = lam.sign()
    rational = f.num.is_rational_poly() and f.den.is_rational_poly()
    return EigenData(f, p, lam, kappa, level, chi, rational)


def weight_of(f: RatFun, p: int) -> int:
    """Pole multiplicity kappa of the eigenfunction f, with |lam| = p^(kappa-1)."""
    return eigen_data(f, p).weight


def chi_value(f: RatFun, p: int) -> int:
    """Sign of the eigenvalue of f under U_p: -1, 0 (kernel), or +1."""
    if hecke_apply(f, p).is_zero():
        return 0
    return eigen_data(f, p).char_value


def structure_closed_form(f: RatFun, p: int) -> ClosedForm:
    """Coefficient formula of an eigenfunction: pure n^(kappa-1) times periodics.

    Raises StructureViolated when any surviving term has multiplicity other
    than the weight.  The formula is replayed against the series out to
    index 50.
    """
    data = eigen_data(f, p)
    form = closed_form(f, verify_terms=51)
    if not form.has_uniform_mult() or form.weight != data.weight:
        raise StructureViolated("closed form mixes power weights")
    return form


def periodicity_check(f: RatFun, p: int, m_max: int = 3) -> bool:
    """U_(p+mL) f = chi * (p+mL)^(kappa-1) f for m = 1..m_max."""
    data = eigen_data(f, p)
    for m in range(1, m_max + 1):
        q = p + m * data.level
        expected = f * CycNum(data.char_value * q ** (data.weight - 1))
        if hecke_apply(f, q) != expected:
            return False
    return True


def kernel_membership(f: RatFun, p: int) -> bool:
    """Whether U_p annihilates f."""
    return hecke_apply(f, p).is_zero()


# -- explicit eigenfunction families ----------------------------------------


def char_eigenfunction(chi: DirichletChar, kappa: int) -> RatFun:
    """Sum of chi(n) n^(kappa-1) x^n, an eigenfunction of every operator.

    U_p multiplies it by chi(p) p^(kappa-1) for all p, including p sharing a
    factor with the modulus (where it is annihilated).  The construction is
    verified for every p up to modulus + 2 before returning.
    """
    if kappa < 1:
        raise HeckeError("weight must be at least 1")
    L = chi.modulus
    num = Poly([chi(j) for j in range(L)])
    den = Poly([CycNum(1)] + [CycNum(0)] * (L - 1) + [CycNum(-1)])
    f = RatFun(num, den).weight_raise(kappa - 1)
    for p in range(2, L + 3):
        expected = f * (chi(p) * CycNum(p ** (kappa - 1)))
        if hecke_apply(f, p) != expected:
            raise InternalMismatch("character series failed the operator check")
    return f


def phi_k(k: int) -> RatFun:
    """(x d/dx)^k applied to 1/(1-x): coefficients n^k, eigenvalue p^k for all p."""
    if k < 0:
        raise HeckeError("derivative count must be nonnegative")
    return RatFun(Poly([1]), Poly([1, -1])).weight_raise(k)


def eulerian_poly(k: int) -> Poly:
    """Numerator of phi_k over (1-x)^(k+1), via the weighted-subset identity.

    Built as sum over l of S(k, l) l! x^l (1-x)^(k-l) with S the Stirling
    subset numbers, which keeps everything in integer arithmetic.
    """
    if k < 1:
        raise HeckeError("index must be at least 1")
    stirling = [[0] * (k + 1) for _ in range(k + 1)]
    stirling[0][0] = 1
    for n in range(1, k + 1):
        for l in range(1, n + 1):
            stirling[n][l] = l * stirling[n - 1][l] + stirling[n - 1][l - 1]
    one_minus_x = Poly([1, -1])
    total = Poly([0])
    for l in range(1, k + 1):
        term = Poly([0] * l + [stirling[k][l] * factorial(l)])
        total = total + term * one_minus_x ** (k - l)
    return total


# -- graded eigenspaces ------------------------------------------------------


@dataclass(frozen=True)
class SpaceBasis:
    """Basis of the span of eigenfunctions of fixed weight and exact level.

    Every basis element satisfies U_p f = s_p p^(weight-1) f for each listed
    operator index, with signs s_p depending on the element.  When
    constant_term_zero is set the space is cut down to functions vanishing
    at 0.
    """

    weight: int
    level: int
    operators: tuple[int, ...]
    constant_term_zero: bool
    basis: tuple[RatFun, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def space_basis(
    kappa: int, level: int, ps, constant_term_zero: bool = True
) -> SpaceBasis:
    """Compute the eigenfunction span of weight kappa and exact level `level`.

    All candidates live over the one maximal denominator (1 - x^level)^kappa,
    so the search is a nullspace per sign vector of the stacked shifted
    sifting matrices.  A sign vector's solution space enters only when the
    lcm of its members' levels is exactly `level`; a strictly smaller lcm
    means the whole space belongs to a lower level.
    """
    ps = tuple(sorted(set(int(p) for p in ps)))
    if kappa < 1 or level < 1:
        raise HeckeError("weight and level must be positive")
    if not ps or any(p < 2 for p in ps):
        raise HeckeError("need at least one sifting index, each at least 2")
    if any(gcd(p, level) != 1 for p in ps):
        return SpaceBasis(kappa, level, ps, constant_term_zero, ())
    den = Poly([CycNum(1)] + [CycNum(0)] * (level - 1) + [CycNum(-1)]) ** kappa
    d = kappa * level
    mats = {p: matrix_B(den, p) for p in ps}
    scale = kappa - 1
    collected: list[RatFun] = []
    for signs in itertools.product((1, -1), repeat=len(ps)):
        rows: list[list[CycNum]] = []
        for p, s in zip(ps, signs):
            shifted = mat_sub(mats[p], scalar_mat(d, CycNum(s * p**scale)))
            rows.extend(shifted)
        if constant_term_zero:
            rows.append([CycNum(1 if m == 0 else 0) for m in range(d)])
        vectors = nullspace(rows)
        if not vectors:
            continue
        funcs = [RatFun(Poly(v), den) for v in vectors]
        joint = reduce(lcm, (level_of(g.reduced()) for g in funcs), 1)
        if joint != level:
            continue
        for g in funcs:
            for p, s in zip(ps, signs):
                if hecke_apply(g, p) != g * CycNum(s * p**scale):
                    raise InternalMismatch("space member failed the operator replay")
        collected.extend(funcs)
    kept: list[RatFun] = []
    rows_so_far: list[list[CycNum]] = []
    prefix = d + 1
    for g in collected:
        trial = rows_so_far + [g.series(prefix)]
        if rank(trial) > len(rows_so_far):
            kept.append(g)
            rows_so_far = trial
    normalized: list[RatFun] = []
    for g in kept:
        red = g.reduced()
        lead = next(c for c in red.series(prefix) if not c.is_zero())
        normalized.append(red * lead.inverse())
    basis = sorted(
        normalized,
        key=lambda g: (_poly_sort_key(g.den), _poly_sort_key(g.num)),
    )
    return SpaceBasis(kappa, level, ps, constant_term_zero, tuple(basis))


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class CertifiedForm:
    """Closed form certified by exact reconstruction.

    kind is "geometric" for a0/(1-x), "phi" for a1 (x d/dx)^(weight-1)
    applied to 1/(1-x) with weight at least 2, and "character" for a1 times
    a character series of the given weight and level.
    """

    kind: str
    scalar: CycNum
    weight: int
    level: int
    char: DirichletChar | None


def _multiplicative_model(f: RatFun) -> tuple[CertifiedForm, RatFun] | None:
    """Candidate closed form for a simultaneous eigenfunction, or None."""
    a0 = f.coefficient(0)
    if not a0.is_zero():
        model = RatFun(Poly([a0]), Poly([1, -1]))
        return CertifiedForm("geometric", a0, 1, 1, None), model
    red = f.reduced()
    if red.is_zero():
        return None
    mults = {pf.multiplicity for pf in pole_factors(red)}
    if len(mults) != 1:
        return None
    kappa = mults.pop()
    level = level_of(red)
    a1 = f.coefficient(1)
    if a1.is_zero():
        return None
    if level == 1:
        if kappa < 2:
            # A zero-constant level-1 function of weight 1 would need the
            # series a_1 x/(1-x), which breaks the degree constraint.
            return None
        model = RatFun(Poly([1]), Poly([1, -1])).weight_raise(kappa - 1) * a1
        return CertifiedForm("phi", a1, kappa, 1, None), model
    series = f.series(level)
    vals: list[CycNum] = []
    for j in range(level):
        if gcd(j, level) != 1:
            vals.append(CycNum(0))
        else:
            scale = a1 * CycNum(j ** (kappa - 1))
            vals.append(series[j] * scale.inverse())
    try:
        chi = DirichletChar.from_values(level, vals)
    except HeckeError:
        return None
    try:
        model = char_eigenfunction(chi, kappa) * a1
    except InternalMismatch:
        return None
    return CertifiedForm("character", a1, kappa, level, chi), model


@dataclass(frozen=True)
class SimultaneousReport:
    """Eigen status of one function across all operator indices up to p_max."""

    p_max: int
    eigen_pairs: tuple[tuple[int, CycNum], ...]
    kernel_indices: tuple[int, ...]
    non_eigen: tuple[int, ...]
    certified: CertifiedForm | None


def simultaneous_classify(f: RatFun, p_max: int) -> SimultaneousReport:
    """Check U_p f = lam_p f for every index 2..p_max and certify if global.

    When f is an eigenfunction (or annihilated) for every index up to
    max(level, p_max), the classifier reconstructs the unique closed form the
    simultaneous theory allows and certifies it by exact comparison.
    """
    if p_max < 2:
        raise HeckeError("need at least index 2")
    try:
        top = max(p_max, level_of(f.reduced()))
    except HeckeError:
        top = p_max
    eigen: list[tuple[int, CycNum]] = []
    kernel: list[int] = []
    failed: list[int] = []
    for p in range(2, top + 1):
        if hecke_apply(f, p).is_zero():
            kernel.append(p)
            continue
        try:
            eigen.append((p, eigenvalue_of(f, p)))
        except NotAnEigenfunction:
            failed.append(p)
    certified = None
    if not failed:
        model = _multiplicative_model(f)
        if model is not None and model[1] == f:
            certified = model[0]
    return SimultaneousReport(
        p_max,
        tuple((p, lam) for p, lam in eigen if p <= p_max),
        tuple(p for p in kernel if p <= p_max),
        tuple(p for p in failed if p <= p_max),
        certified,
    )


@dataclass(frozen=True)
class MultiplicativeReport:
    """Outcome of the completely-multiplicative coefficient scan."""

    bound: int
    multiplicative: bool
    first_violation: tuple[int, int] | None
    certified: CertifiedForm | None


def classify_multiplicative(f: RatFun, bound: int) -> MultiplicativeReport:
    """Test a_(mn) = a_m a_n for all m <= n with mn <= bound, then match forms.

    A clean scan is certified against the two closed-form families: the
    geometric a0/(1-x) when a0 is nonzero, and a weighted character tail when
    a0 vanishes.  The first violating pair is reported in ascending (m, n)
    order.
    """
    if bound < 1:
        raise HeckeError("bound must be positive")
    coeffs = f.series(bound + 1)
    for m in range(1, bound + 1):
        if m * m > bound:
            break
        for n in range(m, bound // m + 1):
            if coeffs[m * n] != coeffs[m] * coeffs[n]:
                return MultiplicativeReport(bound, False, (m, n), None)
    certified = None
    model = _multiplicative_model(f)
    if model is not None and model[1] == f:
        certified = model[0]
    return MultiplicativeReport(bound, True, None, certified)


# -- certified spectrum scans -------------------------------------------------


@dataclass(frozen=True)
class SpectrumProfile:
    """Characteristic polynomial of a sifting matrix, split over {0, +-p^k}.

    power_roots lists (sign, k, multiplicity) for each root sign*p^k found.
    residual_real_roots counts real roots of what remains after dividing all
    of those out; a clean profile has none, so every real eigenvalue is zero
    or a signed power of p.
    """

    matrix_size: int
    zero_multiplicity: int
    power_roots: tuple[tuple[int, int, int], ...]
    residual_degree: int
    residual_real_roots: int

    @property
    def clean(self) -> bool:
        return self.residual_real_roots == 0

    @property
    def max_power(self) -> int:
        return max((k for _, k, _ in self.power_roots), default=0)


def spectrum_profile(b: Poly, p: int) -> SpectrumProfile:
    """Certify that the sifting matrix over b has real spectrum in {0, +-p^k}."""
    mat = matrix_B(b, p)
    d = len(mat)
    cp = charpoly(mat)
    coeffs = list(cp.coeffs)
    zero_mult = 0
    while zero_mult < len(coeffs) and coeffs[zero_mult].is_zero():
        zero_mult += 1
    remaining = Poly(coeffs[zero_mult:])
    roots: list[tuple[int, int, int]] = []
    for k in range(d):
        for sign in (1, -1):
            val = CycNum(sign * p**k)
            linear = Poly([-val, CycNum(1)])
            mult = 0
            while remaining.degree >= 1:
                quotient, rem = divmod(remaining, linear)
                if not all(c.is_zero() for c in rem.coeffs):
                    break
                remaining = quotient
                mult += 1
            if mult:
                roots.append((sign, k, mult))
    if remaining.degree >= 1:
        real_roots = count_real_roots(remaining)
    else:
        real_roots = 0
    return SpectrumProfile(d, zero_mult, tuple(roots), remaining.degree, real_roots)


# -- involution diagnostics ---------------------------------------------------


def involution_identity_holds(b: Poly) -> bool:
    """Whether x^d b(1/x) = (-1)^d b(x), the printed denominator symmetry."""
    d = b.degree
    if d < 0:
        raise HeckeError("zero polynomial has no involution identity")
    return b.reversed_coeffs(d + 1) == b * CycNum((-1) ** d)


def minus_one_multiplicity(b: Poly) -> int:
    """Multiplicity of -1 as a root of b; odd values break the involution."""
    count = 0
    current = b
    factor = Poly([1, 1])
    while current.degree >= 1:
        quotient, rem = divmod(current, factor)
        if not all(c.is_zero() for c in rem.coeffs):
            break
        current = quotient
        count += 1
    return count
