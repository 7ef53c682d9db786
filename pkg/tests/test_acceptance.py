"""End-to-end acceptance checks, one per numbered shipping criterion.

Each test prints exactly one verdict line (through capsys so the line
survives capture) and enforces its wall-clock budget with time.monotonic.
Two criteria are honest failures: the claimed invariants behind them are
refuted by exact computation, so those tests pin the refutation down to
frozen counts and named witnesses and print FAIL.  The analysis lives in
the project decisions ledger; nothing here is loosened to go green.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm

import mpmath
import pytest

from heckeops.appendix import eigen_table, level_seven_pair, verify_appendix
from heckeops.cli import canonical_form, conjecture_scan, unimodality_check
from heckeops.cyclotomic import CycNum, root_of_unity
from heckeops.eigen import (
    DirichletChar,
    admissible_denominators,
    char_eigenfunction,
    eigenspace,
    eulerian_poly,
    involution_identity_holds,
    minus_one_multiplicity,
    phi_k,
    pole_orbit_atoms,
    spectrum_profile,
)
from heckeops.errors import NotAnEigenfunction
from heckeops.expr import parse_ratfun
from heckeops.hecke import hecke_apply, eigenvalue_of
from heckeops.linalg import rank
from heckeops.polynomial import Poly
from heckeops.ratfun import RatFun, format_ratfun
from heckeops.zeta import tensor_spectrum, zeta_US, zeta_U_truncated


def _verdict(capsys, line: str) -> None:
    with capsys.disabled():
        print(line, flush=True)


def _conductor(b: Poly) -> int:
    n = 1
    for c in b.coeffs:
        n = lcm(n, c.conductor)
    return n


def _atom_parts(den: Poly, atoms) -> list:
    """Multiset of pole-orbit atoms whose product is den, by exact division.

    Atoms from incompatible cyclotomic fields are skipped up front; within
    the swept degree range no denominator mixes two such fields, so the skip
    never hides a genuine factor.
    """
    parts = []
    rem = den
    for atom in atoms:
        ac = _conductor(atom.poly)
        while rem.degree >= atom.poly.degree:
            if lcm(ac, _conductor(rem)) > 1000:
                break
            q, r = divmod(rem, atom.poly)
            if not r.is_zero():
                break
            rem = q
            parts.append(atom)
    assert rem.degree == 0 and rem.coeff(0) == CycNum(1)
    return parts


def _atom_reduce(num: Poly, den: Poly, parts) -> RatFun:
    """Cancel shared atom factors, at most the multiplicity den carries.

    Same result as RatFun.reduced(), but by trial division against the known
    factorization instead of a euclidean gcd, which is far cheaper in the
    larger cyclotomic fields.  The sweep fixture cross-checks the two routes.
    """
    mults: dict = {}
    for atom in parts:
        key = (atom.order, atom.exponents)
        entry = mults.get(key)
        mults[key] = (atom, entry[1] + 1) if entry else (atom, 1)
    for atom, avail in mults.values():
        while avail > 0:
            q, r = divmod(num, atom.poly)
            if not r.is_zero():
                break
            num = q
            den = den.exact_div(atom.poly)
            avail -= 1
    return RatFun(num, den)


def _structure(parts) -> tuple[int | None, int, int, int]:
    """(uniform multiplicity or None, level, multiplicity of -1, max mult).

    Uniformity is per pole orbit; a denominator may carry different
    multiplicities on different orbits, in which case the first entry is
    None but the last still bounds the reachable eigenvalue exponents.
    """
    counts: dict = {}
    for a in parts:
        key = (a.order, a.exponents)
        counts[key] = counts.get(key, 0) + 1
    mults = set(counts.values())
    kappa = (mults.pop() if len(mults) == 1 else None) if counts else None
    level = 1
    for a in parts:
        level = lcm(level, a.order)
    m2 = sum(1 for a in parts if a.order == 2)
    cmax = max(counts.values(), default=0)
    return kappa, level, m2, cmax


def _progression_values(f: RatFun, kappa: int, level: int, nmax: int = 20) -> list[CycNum]:
    """Coefficients a_(n*level) for 1 <= n <= nmax, by the binomial formula.

    Writes f = N / (1 - x^level)^kappa and expands the geometric factors, so
    only the first kappa coefficients of N at multiples of level enter.
    """
    full = Poly([1] + [0] * (level - 1) + [-1]) ** kappa
    N = f.num * full.exact_div(f.den)
    out = []
    for n in range(1, nmax + 1):
        total = CycNum(0)
        for j in range(0, min(kappa - 1, n) + 1):
            total = total + N.coeff(j * level) * CycNum(comb(kappa - 1 + n - j, kappa - 1))
        out.append(total)
    return out


# -- the exhaustive sweep, shared by criteria 2 and 3 -------------------------

SWEEP_PRIMES = (2, 3, 5)
SWEEP_DEGREE = 6

# Denominator and distinct-eigenpair counts per index, and the census of
# pairs by (index, weight, eigenvalue sign).  These are regression pins:
# the sweep recomputes everything, the constants freeze what it must find.
DEN_COUNTS = {2: 21, 3: 78, 5: 248}
PAIR_COUNTS = {2: 30, 3: 106, 5: 530}
WEIGHT_SIGN_CENSUS = {
    (2, 1, 1): 15, (2, 1, -1): 4,
    (2, 2, 1): 4, (2, 2, -1): 1,
    (2, 3, 1): 2, (2, 3, -1): 1,
    (2, 4, 1): 1, (2, 5, 1): 1, (2, 6, 1): 1,
    (3, 1, 1): 69, (3, 1, -1): 17,
    (3, 2, 1): 7, (3, 2, -1): 1,
    (3, 3, 1): 5, (3, 3, -1): 1,
    (3, 4, 1): 2, (3, 5, 1): 2, (3, 6, 1): 2,
    (5, 1, 1): 390, (5, 1, -1): 96,
    (5, 2, 1): 26, (5, 2, -1): 2,
    (5, 3, 1): 8, (5, 3, -1): 2,
    (5, 4, 1): 2, (5, 5, 1): 2, (5, 6, 1): 2,
}


@dataclass
class SweepPair:
    func: RatFun            # reduced representative
    p: int
    eigenvalue: CycNum
    sign: int
    k: int                  # |eigenvalue| = p**k
    key: tuple


@dataclass
class SweepResult:
    atoms: dict
    den_counts: dict
    profiles_clean: bool
    max_power_bounded: bool
    dim_bounds_ok: bool
    pairs: list = field(default_factory=list)
    seconds: float = 0.0
    reduction_cross_checked: int = 0


@pytest.fixture(scope="module")
def sweep() -> SweepResult:
    """Enumerate every admissible denominator up to degree 6 for p in
    {2, 3, 5}, certify each spectrum profile, and collect one reduced
    representative per eigenspace basis element at the signed power roots.
    The recorded wall time is charged against criterion 2's budget."""
    t0 = time.monotonic()
    atoms = {p: pole_orbit_atoms(p, SWEEP_DEGREE) for p in SWEEP_PRIMES}
    den_counts: dict = {}
    profiles_clean = True
    max_power_bounded = True
    dim_bounds_ok = True
    pairs: list[SweepPair] = []
    seen: set = set()
    for p in SWEEP_PRIMES:
        dens = admissible_denominators(p, SWEEP_DEGREE)
        den_counts[p] = len(dens)
        for b in dens:
            parts = _atom_parts(b, atoms[p])
            cmax = _structure(parts)[3]
            prof = spectrum_profile(b, p)
            profiles_clean = profiles_clean and prof.clean
            max_power_bounded = max_power_bounded and prof.max_power <= cmax - 1
            for sign, k, mult in prof.power_roots:
                lam = CycNum(sign * p**k)
                basis = eigenspace(b, p, lam)
                dim_bounds_ok = dim_bounds_ok and 1 <= len(basis) <= mult
                for num in basis:
                    g = _atom_reduce(num, b, parts)
                    key = (p, format_ratfun(g))
                    if key in seen:
                        continue
                    seen.add(key)
                    pairs.append(SweepPair(g, p, lam, sign, k, key))
    seconds = time.monotonic() - t0

    # Validate the fast reduction against the generic one: every pair over a
    # rational denominator, plus a fixed stride of the irrational ones.
    checked = 0
    irrational = 0
    for pair in pairs:
        cond = _conductor(pair.func.den)
        if cond > 1:
            irrational += 1
            if irrational % 40 != 1:
                continue
        full = RatFun(pair.func.num, pair.func.den).reduced()
        assert format_ratfun(full) == format_ratfun(pair.func)
        checked += 1

    return SweepResult(
        atoms, den_counts, profiles_clean, max_power_bounded, dim_bounds_ok,
        pairs, seconds, checked,
    )


# -- criterion 1: recorded tables ---------------------------------------------

EXPECTED_EIGENVALUES = [2, -1, 4, 1, 8, -2, 2, -1, 16, 1, 32, -4, 4, 2, 2, -1, -1, 1, 1]


def test_criterion_1_recorded_tables(capsys) -> None:
    t0 = time.monotonic()
    report = verify_appendix()
    table = eigen_table()
    assert len(table) == 19
    assert [pair.eigenvalue for pair in table] == [CycNum(v) for v in EXPECTED_EIGENVALUES]
    assert len(report.items) == 67
    assert report.ok, [item.name for item in report.failures()]

    # The linear relation among the three weight-2 level-3 entries carries a
    # corrected coefficient: +6 holds exactly, the historically printed -6
    # does not.  Both directions are recomputed here, independent of the
    # report items that cover the same ground.
    by_name = {pair.name: pair for pair in table}
    f43, f64, f65 = (by_name[n].func for n in ("f4_3", "f6_4", "f6_5"))
    assert f65 - f43 == f64 * CycNum(6)
    assert f65 - f43 != f64 * CycNum(-6)

    elapsed = time.monotonic() - t0
    assert elapsed < 30.0
    _verdict(
        capsys,
        "[criterion  1] PASS  recorded tables: 67 items recomputed and confirmed "
        "(19 eigenpairs, 4 matrix templates, graded dimensions; relation "
        f"coefficient verified as +6, printed -6 refuted)  {elapsed:.1f}s",
    )


# -- criterion 2: exhaustive eigenvalue search --------------------------------


def test_criterion_2_exhaustive_search(capsys, sweep) -> None:
    """Every admissible denominator up to degree 6 for p in {2, 3, 5} has a
    certified spectrum: no real eigenvalues besides signed powers of p, and
    each eigenpair's reduced weight kappa satisfies |lambda| = p**(kappa-1)."""
    t0 = time.monotonic()
    assert sweep.den_counts == DEN_COUNTS
    assert sweep.profiles_clean
    assert sweep.max_power_bounded
    assert sweep.dim_bounds_ok

    census: dict = {}
    counts: dict = {}
    for pair in sweep.pairs:
        counts[pair.p] = counts.get(pair.p, 0) + 1
        parts = _atom_parts(pair.func.den, sweep.atoms[pair.p])
        kappa = _structure(parts)[0]
        assert kappa is not None, format_ratfun(pair.func)
        assert kappa == pair.k + 1, format_ratfun(pair.func)
        census_key = (pair.p, kappa, pair.sign)
        census[census_key] = census.get(census_key, 0) + 1
    assert counts == PAIR_COUNTS
    assert census == WEIGHT_SIGN_CENSUS

    elapsed = (time.monotonic() - t0) + sweep.seconds
    assert elapsed < 120.0
    total = sum(counts.values())
    _verdict(
        capsys,
        f"[criterion  2] PASS  exhaustive search: {sum(DEN_COUNTS.values())} "
        f"denominators swept, {total} eigenpairs, every nonzero eigenvalue is "
        f"a signed power of p with |lambda| = p**(weight-1)  {elapsed:.1f}s",
    )


# -- criterion 3: structural invariants over every found eigenpair ------------

# Frozen violation census.  Two of the six claimed invariants are false as
# universal statements; the counts and witnesses below are exact and the
# failing sets are fully characterized.
POPULATION_SIZE = 670
INVOLUTION_VIOLATORS = 187
PROGRESSION_VIOLATORS = 59
PROGRESSION_HISTOGRAM = {
    (2, 2): 3, (2, 3): 3, (2, 4): 1, (2, 5): 1, (2, 6): 1,
    (3, 2): 6, (3, 3): 4, (3, 4): 2, (3, 5): 2, (3, 6): 2,
    (5, 2): 22, (5, 3): 6, (5, 4): 2, (5, 5): 2, (5, 6): 2,
}


def test_criterion_3_structural_invariants(capsys, sweep) -> None:
    population: dict = {}
    for pair in sweep.pairs:
        population[pair.key] = (pair.func, pair.p, pair.eigenvalue)
    for entry in eigen_table() + level_seven_pair():
        g = entry.func.reduced()
        key = (2, format_ratfun(g))
        population.setdefault(key, (g, 2, entry.eigenvalue))
    assert len(population) == POPULATION_SIZE

    t0 = time.monotonic()
    table = {pair.name: (2, format_ratfun(pair.func.reduced())) for pair in eigen_table()}
    inv_violators: set = set()
    prog_violators: set = set()
    prog_hist: dict = {}
    invx_failures = 0
    for key, (g, p, lam) in population.items():
        parts = _atom_parts(g.den, sweep.atoms[p])
        kappa, level, m2, _ = _structure(parts)

        # uniform pole multiplicity: holds everywhere
        assert kappa is not None, key

        # level coprime to the index: holds everywhere
        assert gcd(p, level) == 1, key

        # reversal identity on the denominator: fails exactly when the pole
        # at -1 has odd multiplicity
        holds = involution_identity_holds(g.den)
        assert minus_one_multiplicity(g.den) == m2
        assert holds == (m2 % 2 == 0), key
        if not holds:
            inv_violators.add(key)

        a0 = g.series(1)[0]
        if not a0.is_zero():
            # nonzero constant coefficient forces eigenvalue 1: holds everywhere
            assert lam == CycNum(1), key
        else:
            # vanishing along multiples of the level: fails only at weight >= 2
            values = _progression_values(g, kappa, level)
            if any(not v.is_zero() for v in values):
                assert kappa >= 2, key
                prog_violators.add(key)
                hist_key = (p, kappa)
                prog_hist[hist_key] = prog_hist.get(hist_key, 0) + 1

        # coefficient reversal preserves the eigenvalue away from lambda = 1:
        # holds everywhere
        if lam != CycNum(1):
            h = g.invert_x()
            if hecke_apply(h, p) != h * lam:
                invx_failures += 1

    elapsed = time.monotonic() - t0
    assert elapsed < 60.0

    assert len(inv_violators) == INVOLUTION_VIOLATORS
    assert len(prog_violators) == PROGRESSION_VIOLATORS
    assert prog_hist == PROGRESSION_HISTOGRAM
    assert invx_failures == 0
    # named witnesses on both sides of the progression property at weight 2
    assert table["f2_1"] in prog_violators
    assert table["f4_3"] in prog_violators
    assert table["f4_2"] not in prog_violators
    assert table["f6_5"] not in prog_violators

    _verdict(
        capsys,
        f"[criterion  3] FAIL  structural invariants over {POPULATION_SIZE} "
        f"eigenpairs: 4 of 6 hold universally; the denominator reversal "
        f"identity fails for {INVOLUTION_VIOLATORS} pairs (exactly those with "
        f"odd pole multiplicity at -1) and vanishing along level multiples "
        f"fails for {PROGRESSION_VIOLATORS} pairs (all of weight >= 2); see "
        f"the decisions ledger  {elapsed:.1f}s",
    )


# -- criterion 4: operator identities on random inputs ------------------------


def _random_function(rng: random.Random) -> RatFun:
    den_deg = rng.randint(1, 5)
    den = [CycNum(1)]
    den += [CycNum(rng.randint(-3, 3)) for _ in range(den_deg - 1)]
    den.append(CycNum(rng.choice([1, -1, 2, -2, 3, -3])))
    num = [CycNum(rng.randint(-4, 4)) for _ in range(den_deg)]
    return RatFun(Poly(num), Poly(den))


def test_criterion_4_operator_identities(capsys) -> None:
    """Section, composition, derivation, and sifting identities on 200
    seeded random functions with denominator degree up to 5."""
    t0 = time.monotonic()
    rng = random.Random(90210)
    for _ in range(200):
        f = _random_function(rng)
        p = rng.randint(2, 5)
        q = rng.randint(2, 5)

        assert hecke_apply(f.substitute_power(p), p) == f

        via_p_then_q = hecke_apply(hecke_apply(f, p), q)
        assert via_p_then_q == hecke_apply(f, p * q)
        assert via_p_then_q == hecke_apply(hecke_apply(f, q), p)

        lhs = hecke_apply(f.weight_raise(1), p)
        rhs = hecke_apply(f, p).weight_raise(1) * CycNum(p)
        assert lhs == rhs

        source = f.series(30 * p + 1)
        sifted = hecke_apply(f, p).series(31)
        assert all(sifted[n] == source[p * n] for n in range(31))

    elapsed = time.monotonic() - t0
    assert elapsed < 120.0
    _verdict(
        capsys,
        "[criterion  4] PASS  operator identities: 200 random functions, "
        "section / composition / derivation identities exact, sifting checked "
        f"against 31 series terms  {elapsed:.1f}s",
    )


# -- criterion 5: sign-flip families ------------------------------------------


def test_criterion_5_sign_flip_families(capsys) -> None:
    t0 = time.monotonic()
    # even family: (x - x^p)/(1 - x^(p+1)) is flipped by the index-p operator
    for p in (2, 4, 6):
        f = parse_ratfun(f"(x-x^{p})/(1-x^{p + 1})")
        assert hecke_apply(f, p) == f * CycNum(-1)
    # odd family: x/(1+x^q) is flipped by the index q*l + 1
    for q, ell in ((2, 1), (2, 3), (4, 1)):
        p = q * ell + 1
        f = parse_ratfun(f"x/(1+x^{q})")
        assert hecke_apply(f, p) == f * CycNum(-1)
    elapsed = time.monotonic() - t0
    _verdict(
        capsys,
        "[criterion  5] PASS  sign-flip families: indices {2,4,6} on the even "
        "family and {3,7,5} on the odd family all give U f = -f exactly  "
        f"{elapsed:.1f}s",
    )


# -- criterion 6: weighted-permutation numerators ------------------------------

EULERIAN_LITERALS = {
    1: [0, 1],
    2: [0, 1, 1],
    3: [0, 1, 4, 1],
    4: [0, 1, 11, 11, 1],
    5: [0, 1, 26, 66, 26, 1],
    6: [0, 1, 57, 302, 302, 57, 1],
}


def test_criterion_6_power_series_numerators(capsys) -> None:
    """The numerators of sum n^k x^n by two independent routes, against
    frozen literals, plus linear independence of the first nine series."""
    t0 = time.monotonic()
    one_minus_x = Poly([1, -1])
    for k, coeffs in EULERIAN_LITERALS.items():
        literal = Poly(coeffs)
        assert eulerian_poly(k) == literal
        assert phi_k(k) == RatFun(literal, one_minus_x ** (k + 1))
    rows = [phi_k(k).series(9) for k in range(9)]
    assert rank(rows) == 9
    elapsed = time.monotonic() - t0
    _verdict(
        capsys,
        "[criterion  6] PASS  power-series numerators: iterated x d/dx and "
        "the subset-number formula agree with all six literals; the first "
        f"nine series have full rank 9  {elapsed:.1f}s",
    )


# -- criterion 7: character eigenfunctions -------------------------------------


def _order_four_characters() -> list[DirichletChar]:
    i = root_of_unity(4)
    return [
        DirichletChar.from_values(5, (CycNum(0), CycNum(1), i, -i, CycNum(-1))),
        DirichletChar.from_values(5, (CycNum(0), CycNum(1), -i, i, CycNum(-1))),
    ]


def test_criterion_7_character_eigenfunctions(capsys) -> None:
    t0 = time.monotonic()
    # headline: the quadratic character mod 3 at weight 1 is the second
    # recorded eigenpair
    f = char_eigenfunction(DirichletChar.quadratic(3), 1)
    assert f == eigen_table()[1].func

    characters = [
        DirichletChar.principal(3), DirichletChar.quadratic(3),
        DirichletChar.principal(4), DirichletChar.quadratic(4),
        DirichletChar.principal(5), DirichletChar.quadratic(5),
        *_order_four_characters(),
    ]
    checked = 0
    for chi in characters:
        for kappa in (1, 2):
            g = char_eigenfunction(chi, kappa)
            for p in (2, 3, 5, 7, 11):
                expected = g * (chi(p) * CycNum(p ** (kappa - 1)))
                assert hecke_apply(g, p) == expected
                checked += 1
    elapsed = time.monotonic() - t0
    _verdict(
        capsys,
        "[criterion  7] PASS  character eigenfunctions: 8 characters mod "
        "{3,4,5} (including both complex quartic ones) at weights 1 and 2, "
        f"{checked} operator evaluations exact  {elapsed:.1f}s",
    )


# -- criterion 8: the level-7 pair ---------------------------------------------


def test_criterion_8_level_seven(capsys) -> None:
    t0 = time.monotonic()
    f = parse_ratfun("(x+x^2+x^4)/(1-x^7)")
    assert eigenvalue_of(f, 2) == CycNum(1)
    assert eigenvalue_of(f, 4) == CycNum(1)
    for p in (3, 5, 6):
        with pytest.raises(NotAnEigenfunction):
            eigenvalue_of(f, p)
    mirror = parse_ratfun("(x^3+x^5+x^6)/(1-x^7)")
    assert f.invert_x() == mirror * CycNum(-1)
    elapsed = time.monotonic() - t0
    _verdict(
        capsys,
        "[criterion  8] PASS  level-7 pair: fixed by indices 2 and 4, not an "
        "eigenfunction at 3, 5, 6; argument inversion lands on minus the "
        f"mirror entry  {elapsed:.1f}s",
    )


# -- criterion 9: spectral zeta values ------------------------------------------


def test_criterion_9_spectral_zeta(capsys) -> None:
    t0 = time.monotonic()
    z2 = zeta_US([2], 2, 2**20)
    assert abs(float(z2.partial_sum) - 4 / 3) < 1e-10

    z23 = zeta_US([2, 3], 2, 10**6)
    assert abs(float(z23.partial_sum) - 3 / 2) < 1e-8

    spectrum = tensor_spectrum([2, 3], 12)
    assert list(spectrum.eigenvalues) == [1, 2, 3, 4, 6, 8, 9, 12]
    assert all(spectrum.multiplicity(lam) == 1 for lam in spectrum.eigenvalues)

    # the constructor itself recounts the spectrum slice against 1..bound and
    # raises on any mismatch, so a normal return certifies the enumeration
    zt = zeta_U_truncated(2, 1000)
    assert zt.partial_exact == sum((Fraction(1, n * n) for n in range(1, 1001)), Fraction(0))
    with mpmath.workdps(30):
        assert abs(float(zt.partial_sum - mpmath.pi**2 / 6)) < 1.1e-3

    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    _verdict(
        capsys,
        "[criterion  9] PASS  spectral zeta: {2}-smooth and {2,3}-smooth "
        "partial sums within 1e-10 / 1e-8 of closed forms, 12-bounded tensor "
        "spectrum exact, truncated full sum within 1.1e-3 of pi^2/6  "
        f"{elapsed:.1f}s",
    )


# -- criterion 10: unimodality sweep --------------------------------------------

# Frozen scan results.  The degree-8 sweep at index 2 was required to report
# zero counterexamples; it reports sixteen, five of them from one-dimensional
# eigenspaces where no change of basis can rescue the shape.
SCAN_RESULTS = {
    (2, 1): (1, 1, 0, 0),
    (2, 4): (9, 12, 0, 0),
    (2, 6): (21, 30, 2, 1),
    (3, 4): (24, 32, 1, 1),
    (2, 8): (45, 67, 16, 5),
}

QUANTIFIER_WITNESS = "(x+x^2-5*x^3+x^4-5*x^5-5*x^6)/(1-x^7)"
INDEX3_WITNESS = "(4-3*x+2*x^2-x^3)/(1-x+x^2-x^3+x^4)"
INDEX3_CANONICAL = [4, 1, -1, 1, -1, -4, -1, 1, -1, 1]


def test_criterion_10_unimodality_sweep(capsys) -> None:
    t0 = time.monotonic()
    reports = {}
    for (p, deg), expected in SCAN_RESULTS.items():
        rep = conjecture_scan(p, deg)
        observed = (
            rep.denominator_count,
            rep.function_count,
            len(rep.counterexamples),
            len(rep.forced()),
        )
        assert observed == expected, (p, deg, observed)
        reports[(p, deg)] = rep

    main = reports[(2, 8)]
    for c in main.counterexamples:
        # replay: each recorded function really is an eigenfunction and its
        # canonical numerator really is non-unimodal
        assert hecke_apply(c.func, 2) == c.func * c.eigenvalue
        assert not unimodality_check(canonical_form(c.func).num)
    f63 = eigen_table()[12]
    assert f63.name == "f6_3"
    assert any(
        c.func * CycNum(-1) == f63.func and c.eigenvalue == CycNum(4)
        for c in main.forced()
    )

    # quantifier witness: a function fixed by the index-2 operator whose
    # canonical numerator shape cannot be blamed on basis choice issues
    g = parse_ratfun(QUANTIFIER_WITNESS)
    assert hecke_apply(g, 2) == g
    cg = canonical_form(g)
    assert cg.den_exponents == (7,)
    assert not unimodality_check(cg.num)

    h = parse_ratfun(INDEX3_WITNESS)
    assert hecke_apply(h, 3) == h
    ch = canonical_form(h)
    assert ch.den_exponents == (10,)
    assert ch.num == Poly(INDEX3_CANONICAL)
    assert not unimodality_check(ch.num)

    elapsed = time.monotonic() - t0
    assert elapsed < 300.0
    _verdict(
        capsys,
        "[criterion 10] FAIL  unimodality sweep: required zero counterexamples "
        "at index 2 through degree 8, found 16 (5 forced, including the "
        "negated f6_3); every witness replays exactly; see the decisions "
        f"ledger  {elapsed:.1f}s",
    )
