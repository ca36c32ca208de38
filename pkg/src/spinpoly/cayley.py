"""Cayley-transform coefficients as exact rational functions of alpha.

The rational rotation (1 + 2i*alpha*n.J)/(1 - 2i*alpha*n.J) for spin j
reduces to sum_k A_k(alpha) (2i n.J)**k, driven by the resolvent
coefficients B_k(alpha) = alpha**k * Trunc_{2j-k}[det] / det, where det
is the characteristic determinant det(1 - 2i*alpha*n.J).  Several
independent generation paths are implemented: the truncation formula,
the difference-equation recursion, the general resolvent formula, and
(in the bridge module) a Laplace transform of the exponential
coefficients.  All exact tables are cached immutably; float evaluation
over alpha grids may run concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from .cfn import cfn, det_cfn_row
from .exact import (
    Poly,
    RationalFunction,
    poly,
    poly_add,
    poly_mul,
    poly_scale,
    poly_shift,
    poly_sub,
    poly_truncate,
)
from .halfint import HalfInt


def det_poly(j: HalfInt) -> Poly:
    """det(1 - 2i*alpha*n.J) expanded exactly in alpha.

    Product of 1 + 4*alpha^2*(j+1-n)^2 over n = 1..floor(j+1/2); only even
    powers appear and every coefficient is a positive integer.
    """
    out: Poly = poly([1])
    for n in range(1, (j.two_j + 1) // 2 + 1):
        m2 = j.two_j + 2 - 2 * n  # 2*(j+1-n)
        out = _mul_even_quadratic(out, m2 * m2)
    return out


def _mul_even_quadratic(p: Poly, c: int) -> Poly:
    # p(alpha) * (1 + c*alpha^2)
    out = [Fraction(0)] * (len(p) + 2)
    for i, pi in enumerate(p):
        out[i] += pi
        out[i + 2] += pi * c
    return poly(out)


def det_cfn_poly(j: HalfInt) -> Poly:
    """The same determinant assembled from central factorial magnitudes."""
    out = [Fraction(0)] * (2 * ((j.two_j + 1) // 2) + 1)
    for k, mag in enumerate(det_cfn_row(j)):
        out[2 * k] = Fraction(4) ** k * mag
    return poly(out)


@dataclass(frozen=True)
class DetForms:
    """The determinant in its three guises: exact product expansion,
    central-factorial assembly, and the gamma-function evaluator."""

    j: HalfInt
    poly: Poly
    cfn_poly: Poly

    def gamma(self, alpha: float) -> float:
        return det_gamma(self.j, alpha)


def det_forms(j: HalfInt) -> DetForms:
    return DetForms(j, det_poly(j), det_cfn_poly(j))


def _log_sinh(x: float) -> float:
    return x + math.log1p(-math.exp(-2.0 * x)) - math.log(2.0)


def _log_cosh(x: float) -> float:
    return x + math.log1p(math.exp(-2.0 * x)) - math.log(2.0)


def det_gamma(j: HalfInt, alpha: float) -> float:
    """Closed-form determinant via gamma-function magnitudes.

    Integer j uses (2a)^(2j+1) sinh(pi/2a) |Gamma(j+1+i/(2a))|^2 / pi,
    semi-integer j the same with cosh.  |Gamma|^2 is reduced to a finite
    product over the integer (or half-integer) offsets; the whole thing
    is accumulated in log space so large j cannot overflow prematurely.
    """
    if alpha == 0:
        raise ValueError("alpha must be nonzero; the polynomial form gives det(0) = 1")
    a = abs(alpha)
    y = 1.0 / (2.0 * a)
    log_det = -math.log(math.pi) + (j.two_j + 1) * math.log(2.0 * a)
    if j.is_integer:
        log_det += _log_sinh(math.pi / (2.0 * a))
        # |Gamma(1+iy)|^2 = pi*y/sinh(pi*y)
        log_det += math.log(math.pi * y) - _log_sinh(math.pi * y)
        jj = j.two_j // 2
        log_det += math.fsum(math.log(n * n + y * y) for n in range(1, jj + 1))
    else:
        log_det += _log_cosh(math.pi / (2.0 * a))
        # |Gamma(1/2+iy)|^2 = pi/cosh(pi*y)
        log_det += math.log(math.pi) - _log_cosh(math.pi * y)
        half_steps = (j.two_j + 1) // 2
        log_det += math.fsum(
            math.log((l - 0.5) ** 2 + y * y) for l in range(1, half_steps + 1)
        )
    return math.exp(log_det)


@dataclass(frozen=True)
class CayleyCoeffs:
    """Resolvent coefficients B_k and Cayley coefficients A_k for one spin.

    Stored unreduced (numerator = alpha^k * truncated determinant,
    denominator = determinant) so that exact structural comparisons stay
    cheap; canonical reduced forms are a method call away.
    """

    j: HalfInt
    B: Tuple[RationalFunction, ...]
    A: Tuple[RationalFunction, ...]


def _coeffs_from_det(j: HalfInt, det: Poly) -> CayleyCoeffs:
    b = []
    a = []
    for k in range(j.two_j + 1):
        num = poly_shift(poly_truncate(det, j.two_j - k), k)
        b.append(RationalFunction(num, det))
        if k == 0:
            a.append(RationalFunction(poly_sub(poly_scale(num, 2), det), det))
        else:
            a.append(RationalFunction(poly_scale(num, 2), det))
    return CayleyCoeffs(j, tuple(b), tuple(a))


@lru_cache(maxsize=None)
def _b_coeffs(two_j: int) -> CayleyCoeffs:
    j = HalfInt(two_j)
    return _coeffs_from_det(j, det_poly(j))


def b_coeffs(j: HalfInt) -> CayleyCoeffs:
    """The truncation-formula path (the production route)."""
    return _b_coeffs(j.two_j)


def b_coeffs_cfn(j: HalfInt) -> CayleyCoeffs:
    """Same contract, but the determinant comes from the central-factorial
    row rather than the product expansion."""
    return _coeffs_from_det(j, det_cfn_poly(j))


def b_coeffs_recursion(j: HalfInt) -> CayleyCoeffs:
    """Independent path: solve the first-order difference equations.

    The unknowns b_m are linear in c = alpha*b_2j, so each is carried as a
    polynomial pair (p_m, q_m) with b_m = p_m + q_m*c; the pairing and
    difference relations fill the table upward from b_0 and the consistency
    condition c = alpha*b_2j then fixes c as a rational function.
    """
    two_j = j.two_j
    n = two_j + 2
    one: Poly = poly([1])
    if j.is_integer:
        p = [one]
        q: list[Poly] = [()]
        for m in range(1, two_j + 1):
            if m % 2:  # difference equation, k = (m-1)/2
                k = (m - 1) // 2
                kappa = Fraction(4) ** (two_j // 2 - k) * abs(cfn(n, 2 + 2 * k))
                p.append(poly_shift(p[m - 1], 1))
                q.append(poly_sub(poly_shift(q[m - 1], 1), poly([kappa])))
            else:  # pairing b_2k = alpha*b_{2k-1}
                p.append(poly_shift(p[m - 1], 1))
                q.append(poly_shift(q[m - 1], 1))
    else:
        kappa0 = Fraction(2) ** (two_j + 1) * abs(cfn(n, 1))
        p = [one]
        q = [poly([-kappa0])]
        for m in range(1, two_j + 1):
            if m % 2:  # pairing b_{2k+1} = alpha*b_{2k}
                p.append(poly_shift(p[m - 1], 1))
                q.append(poly_shift(q[m - 1], 1))
            else:  # difference equation, k = m/2
                kappa = Fraction(2) ** (two_j + 1 - m) * abs(cfn(n, 1 + m))
                p.append(poly_shift(p[m - 1], 1))
                q.append(poly_sub(poly_shift(q[m - 1], 1), poly([kappa])))
    # consistency: c = alpha*(p_2j + q_2j*c)
    c_den = poly_sub(one, poly_shift(q[two_j], 1))
    c_num = poly_shift(p[two_j], 1)
    b = []
    a = []
    for m in range(two_j + 1):
        num = poly_add(poly_mul(p[m], c_den), poly_mul(q[m], c_num))
        b.append(RationalFunction(num, c_den))
        if m == 0:
            a.append(RationalFunction(poly_sub(poly_scale(num, 2), c_den), c_den))
        else:
            a.append(RationalFunction(poly_scale(num, 2), c_den))
    return CayleyCoeffs(j, tuple(b), tuple(a))


def resolvent_coeffs(eigenvalues: Sequence, alpha) -> list:
    """Matrix-polynomial coefficients of (1 - alpha*M)^-1 for any
    diagonalizable M with the given distinct eigenvalues.

    r_n = alpha**n * Trunc_{N-1-n}[det(1-alpha*M)] / det(1-alpha*M), with
    the determinant built as prod (1 - alpha*lambda_i).  Works for exact
    or floating scalars alike.
    """
    eigs = list(eigenvalues)
    n = len(eigs)
    for i in range(n):
        for k in range(i + 1, n):
            if eigs[i] == eigs[k]:
                raise ValueError(f"duplicate eigenvalue {eigs[i]!r}")
    for lam in eigs:
        if 1 - alpha * lam == 0:
            raise ValueError(f"singular resolvent: alpha*lambda = 1 at lambda={lam!r}")
    d = [1]
    for lam in eigs:
        nxt = [0] * (len(d) + 1)
        for m, dm in enumerate(d):
            nxt[m] += dm
            nxt[m + 1] += -lam * dm
        d = nxt
    powers = [alpha**m for m in range(n + 1)]
    det_val = sum(dm * powers[m] for m, dm in enumerate(d))
    out = []
    for idx in range(n):
        trunc = sum(d[m] * powers[m] for m in range(0, n - idx))
        out.append(powers[idx] * trunc / det_val)
    return out


def _log_sum_exp(logs: Sequence[float]) -> float:
    top = max(logs)
    return top + math.log(math.fsum(math.exp(x - top) for x in logs))


def asymp_bosonic(k: int, alpha: float) -> float:
    """Large-j limit of B_k/alpha**k for integer spins (k >= 1).

    1 - [sum_{n<k} x^{2n}/(2n+1)!] / (sinh(x)/x), x = pi/(2|alpha|);
    evaluated in log space once sinh would overflow.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if alpha == 0:
        return 1.0
    x = math.pi / (2.0 * abs(alpha))
    if x < 700.0:
        partial = math.fsum(x ** (2 * n) / math.factorial(2 * n + 1) for n in range(k))
        return 1.0 - partial / (math.sinh(x) / x)
    log_partial = _log_sum_exp(
        [2 * n * math.log(x) - math.lgamma(2 * n + 2) for n in range(k)]
    )
    return 1.0 - math.exp(log_partial - (_log_sinh(x) - math.log(x)))


def asymp_fermionic(k: int, alpha: float) -> float:
    """Large-j limit of B_2k/alpha**2k for semi-integer spins (k >= 0)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if alpha == 0:
        return 1.0
    x = math.pi / (2.0 * abs(alpha))
    if x < 700.0:
        partial = math.fsum(x ** (2 * n) / math.factorial(2 * n) for n in range(k + 1))
        return 1.0 - partial / math.cosh(x)
    log_partial = _log_sum_exp(
        [2 * n * math.log(x) - math.lgamma(2 * n + 1) for n in range(k + 1)]
    )
    return 1.0 - math.exp(log_partial - _log_cosh(x))


def trigamma_int(j: int) -> float:
    """Trigamma at the positive integer 1 + j: pi^2/6 - sum_{k<=j} 1/k^2."""
    if j < 0:
        raise ValueError("j must be a nonnegative integer")
    return math.pi * math.pi / 6.0 - math.fsum(1.0 / (k * k) for k in range(1, j + 1))


def b_exact_gamma(j: int, k: int, alpha: float) -> float:
    """B_k(alpha)/alpha**k for integer spin j, via the gamma closed forms.

    k in {1, 2} uses 1 - prod_{n<=j} n^2/(n^2 + 1/(4 alpha^2)); k in
    {3, 4} multiplies the product by the trigamma correction factor.
    Each n^2/(n^2+y^2) factor sits in (0, 1], so no overflow handling is
    needed here.
    """
    if j < 0:
        raise ValueError("j must be a nonnegative integer")
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    y2 = 1.0 / (4.0 * alpha * alpha)
    factor = 1.0
    for n in range(1, j + 1):
        factor *= n * n / (n * n + y2)
    if k in (1, 2):
        return 1.0 - factor
    if k in (3, 4):
        correction = 1.0 + (math.pi**2 - 6.0 * trigamma_int(j)) / (24.0 * alpha * alpha)
        return 1.0 - factor * correction
    raise ValueError(f"closed forms cover k in 1..4, got {k}")


def b_limit_ratio(is_integer_spin: bool, k: int, alpha: float) -> float:
    """lim_{j->inf} B_k(alpha)/alpha**k at fixed k, per spin parity."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if is_integer_spin:
        return 1.0 if k == 0 else asymp_bosonic((k + 1) // 2, alpha)
    return asymp_fermionic(k // 2, alpha)


def relative_error(j: HalfInt, k: int, alpha: float) -> float:
    """(A_k^inf - A_k^[j]) / A_k^[j] at the given alpha.

    The limit coefficient is 2*alpha**k times the parity-matched asymptotic
    ratio (and 2*ratio - 1 for k = 0).  Raises on a vanishing denominator,
    which happens at alpha = 0 for every k >= 1.
    """
    if not 0 <= k <= j.two_j:
        raise ValueError(f"k must lie in 0..{j.two_j}, got {k}")
    a_j = b_coeffs(j).A[k](Fraction(alpha))
    if a_j == 0:
        raise ZeroDivisionError(f"A_{k}[{j}]({alpha}) = 0")
    ratio = b_limit_ratio(j.is_integer, k, alpha)
    if k == 0:
        a_inf = 2.0 * ratio - 1.0
    else:
        a_inf = 2.0 * alpha**k * ratio
    return (a_inf - float(a_j)) / float(a_j)


@dataclass(frozen=True)
class CayleyReconstruction:
    j: HalfInt
    alpha: Fraction
    max_error: float   # worst |sum - (1+2i a m)/(1-2i a m)| over the spectrum
    exact: bool        # whether the rational identity held bit-exactly


def cayley_reconstruction(j: HalfInt, alpha) -> CayleyReconstruction:
    """Check sum_k A_k(alpha) (2i m)**k == (1+2i*alpha*m)/(1-2i*alpha*m)
    for every eigenvalue m of n.J, in exact rational arithmetic."""
    a = Fraction(alpha)
    table = b_coeffs(j)
    avals = [rf(a) for rf in table.A]
    max_err = 0.0
    exact = True
    for m2 in range(j.two_j, -j.two_j - 1, -2):  # M = 2m, integer
        re = Fraction(0)
        im = Fraction(0)
        for k, av in enumerate(avals):
            term = av * Fraction(m2) ** k
            half, rem = divmod(k, 2)  # i**k = (-1)**half * i**rem
            if rem == 0:
                re += -term if half % 2 else term
            else:
                im += -term if half % 2 else term
        am = a * m2
        den = 1 + am * am
        ere = (1 - am * am) / den
        eim = 2 * am / den
        if (re, im) != (ere, eim):
            exact = False
        err = abs(complex(float(re - ere), float(im - eim)))
        max_err = max(max_err, err)
    return CayleyReconstruction(j, a, max_err, exact)


def eval_b(j: HalfInt, k: int, alpha) -> float:
    """B_k(alpha) as a float, through the exact table."""
    return float(b_coeffs(j).B[k](Fraction(alpha)))
