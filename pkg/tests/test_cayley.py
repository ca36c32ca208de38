import math
from fractions import Fraction as F

import pytest

from spinpoly.cayley import (
    asymp_bosonic,
    asymp_fermionic,
    b_coeffs,
    b_coeffs_cfn,
    b_coeffs_recursion,
    b_exact_gamma,
    cayley_reconstruction,
    det_forms,
    det_gamma,
    det_poly,
    relative_error,
    resolvent_coeffs,
    trigamma_int,
)
from spinpoly.exact import RationalFunction, poly, poly_negate_arg, poly_scale, poly_shift
from spinpoly.halfint import HalfInt, half_integers


def even_poly(coeffs_by_alpha_squared):
    out = []
    for c in coeffs_by_alpha_squared:
        out += [c, 0]
    return poly(out[:-1])


def test_det_poly_fixture_values():
    assert det_poly(HalfInt(3)) == even_poly([1, 10, 9])
    assert det_poly(HalfInt(6)) == even_poly([1, 56, 784, 2304])
    assert det_poly(HalfInt(0)) == poly([1])
    assert det_poly(HalfInt(4)) == even_poly([1, 20, 64])
    assert det_poly(HalfInt(5)) == even_poly([1, 35, 259, 225])


def test_det_equals_cfn_assembly():
    for j in half_integers(40):
        forms = det_forms(j)
        assert forms.poly == forms.cfn_poly, j


def test_det_gamma_values():
    assert det_gamma(HalfInt(2), 0.5) == pytest.approx(2.0, rel=1e-12)
    assert det_gamma(HalfInt(1), 1.0) == pytest.approx(2.0, rel=1e-12)
    assert det_gamma(HalfInt(5), 1.0) == pytest.approx(520.0, rel=1e-12)
    with pytest.raises(ValueError):
        det_gamma(HalfInt(2), 0.0)


def test_det_gamma_matches_poly_on_grid():
    for j in half_integers(12):
        det = det_poly(j)
        for alpha in (-2.0, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0):
            want = math.fsum(float(c) * alpha**i for i, c in enumerate(det))
            got = det_gamma(j, alpha)
            assert abs(got - want) <= 1e-10 * want, (j, alpha)


def test_b_fixture_spin_half():
    table = b_coeffs(HalfInt(1))
    one_plus = poly([1, 0, 1])
    assert table.B[0].canonical() == RationalFunction(poly([1]), one_plus)
    assert table.B[1].canonical() == RationalFunction(poly([0, 1]), one_plus)
    assert table.A[0].canonical() == RationalFunction(poly([1, 0, -1]), one_plus)


def test_b_fixture_spin_one():
    table = b_coeffs(HalfInt(2))
    den = poly([1, 0, 4])
    assert table.B[0].canonical() == RationalFunction(poly([1]), poly([1]))
    assert table.B[1].canonical() == RationalFunction(poly([0, 1]), den)
    assert table.B[2].canonical() == RationalFunction(poly([0, 0, 1]), den)


def test_a_fixture_spin_three_half():
    table = b_coeffs(HalfInt(3))
    den = even_poly([1, 10, 9])
    assert table.A[0].canonical() == RationalFunction(even_poly([1, 10, -9]), den)
    assert table.A[1].canonical() == RationalFunction(poly([0, 2, 0, 20]), den)


def test_recursion_matches_truncation_formula():
    for j in half_integers(16):
        direct = b_coeffs(j)
        rec = b_coeffs_recursion(j)
        cfn_form = b_coeffs_cfn(j)
        for k in range(j.two_j + 1):
            assert direct.B[k].equivalent(rec.B[k]), (j, k)
            assert direct.A[k].equivalent(rec.A[k]), (j, k)
            assert direct.B[k].equivalent(cfn_form.B[k]), (j, k)


def test_recursion_derivative_normalization():
    # the m-th Taylor coefficient of B_m at alpha = 0 is exactly 1
    for j in half_integers(6):
        rec = b_coeffs_recursion(j)
        for m in range(j.two_j + 1):
            series = rec.B[m].series(m)
            assert series == tuple([F(0)] * m + [F(1)]), (j, m)


def test_resolvent_reproduces_spin_half():
    for alpha in (0.3, -0.8, 1.7):
        got = resolvent_coeffs([1j, -1j], alpha)
        table = b_coeffs(HalfInt(1))
        for k in (0, 1):
            want = float(table.B[k](F(alpha)))
            assert abs(got[k] - want) < 1e-14


def test_resolvent_single_eigenvalue():
    assert resolvent_coeffs([F(3)], F(1, 2)) == [F(-2)]  # 1/(1 - 3/2)


def test_resolvent_direct_oracle():
    alpha = 0.1
    eigs = [1.0, 2.0, 3.0]
    coeffs = resolvent_coeffs(eigs, alpha)
    for lam in eigs:
        value = sum(c * lam**m for m, c in enumerate(coeffs))
        assert value == pytest.approx(1.0 / (1.0 - alpha * lam), rel=1e-13)


def test_resolvent_errors():
    with pytest.raises(ValueError):
        resolvent_coeffs([1.0, 1.0], 0.1)
    with pytest.raises(ValueError):
        resolvent_coeffs([2.0, 3.0], 0.5)


def test_asymp_bosonic_k1_form():
    for alpha in (0.3, 1.0, 2.5):
        x = math.pi / (2 * alpha)
        want = 1.0 - 1.0 / ((2 * alpha / math.pi) * math.sinh(x))
        assert asymp_bosonic(1, alpha) == pytest.approx(want, rel=1e-14)


def test_asymp_limits_and_monotinicity():
    assert asymp_bosonic(3, 1e6) == pytest.approx(0.0, abs=1e-10)
    assert asymp_fermionic(2, 1e6) == pytest.approx(0.0, abs=1e-10)
    assert asymp_bosonic(2, 0.0) == 1.0
    values = [asymp_bosonic(k, 1.0) for k in range(1, 11)]
    assert all(a >= b >= 0.0 for a, b in zip(values, values[1:]))
    # deep in the essential-singularity region the ratio underflows to 1
    assert asymp_bosonic(2, 1e-4) == 1.0
    assert asymp_fermionic(1, 1e-4) == 1.0


def test_asymp_fermionic_values():
    assert asymp_fermionic(0, 1.0) == pytest.approx(1.0 - 1.0 / math.cosh(math.pi / 2), rel=1e-14)
    assert asymp_fermionic(1, math.pi / 2) == pytest.approx(1.0 - 1.5 / math.cosh(1.0), rel=1e-14)


def test_b_exact_gamma_matches_table():
    for jj in (1, 2, 3, 4):
        table = b_coeffs(HalfInt(2 * jj))
        for k in (1, 2, 3, 4):
            if k > 2 * jj:
                continue
            for alpha in (0.3, 1.0, 2.7, -1.1):
                direct = float(table.B[k](F(alpha))) / alpha**k
                assert abs(direct - b_exact_gamma(jj, k, alpha)) <= 1e-9 * max(1.0, abs(direct))


def test_b_exact_gamma_special_values():
    assert b_exact_gamma(1, 1, 1.0) == pytest.approx(0.2, rel=1e-13)  # B_1 = alpha/(1+4a^2)
    assert b_exact_gamma(1, 3, 1.0) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(ValueError):
        b_exact_gamma(2, 5, 1.0)


def test_trigamma_int():
    assert trigamma_int(0) == pytest.approx(math.pi**2 / 6, rel=1e-15)
    assert trigamma_int(1) == pytest.approx(math.pi**2 / 6 - 1.0, rel=1e-14)
    assert trigamma_int(3) == pytest.approx(math.pi**2 / 6 - 49.0 / 36.0, rel=1e-14)


def test_relative_error_grid():
    alphas = [0.5, 1.0, 2.0, 3.5, 5.0]
    for k in (1, 2):
        for alpha in alphas:
            chain = [relative_error(HalfInt(2 * jj), k, alpha) for jj in (1, 2, 8)]
            assert all(d >= 0.0 for d in chain), (k, alpha, chain)
            assert chain[0] > chain[1] > chain[2], (k, alpha, chain)


def test_relative_error_j50_frozen():
    # limit gap at spin 50 closes like ~0.17/j: still about 1.1e-2 here
    assert relative_error(HalfInt(100), 1, 1.0) == pytest.approx(0.0107859912527, rel=1e-9)


def test_relative_error_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        relative_error(HalfInt(2), 1, 0.0)


def test_pairing_parity_exact():
    for j in half_integers(16):
        table = b_coeffs(j)
        for k, rf in enumerate(table.B):
            flipped = RationalFunction(poly_negate_arg(rf.num), poly_negate_arg(rf.den))
            signed = rf if k % 2 == 0 else RationalFunction(poly_scale(rf.num, -1), rf.den)
            assert flipped.equivalent(signed), (j, k)
        if j.is_integer:
            assert table.B[0].equivalent(RationalFunction(poly([1]), poly([1])))
            pairs = [(2 * k + 2, 2 * k + 1) for k in range(j.two_j // 2)]
        else:
            pairs = [(2 * k + 1, 2 * k) for k in range((j.two_j + 1) // 2)]
        for hi, lo in pairs:
            assert table.B[hi].equivalent(
                RationalFunction(poly_shift(table.B[lo].num, 1), table.B[lo].den)
            ), (j, hi, lo)


def test_highest_coefficients_are_inverse_determinant():
    for j in half_integers(16):
        if j.two_j < 1:
            continue
        table = b_coeffs(j)
        det = det_poly(j)
        top = table.B[j.two_j]
        assert top.equivalent(RationalFunction(poly_shift(poly([1]), j.two_j), det))
        nxt = table.B[j.two_j - 1]
        assert nxt.equivalent(RationalFunction(poly_shift(poly([1]), j.two_j - 1), det))


def test_reconstruction_small_spins():
    for j in half_integers(8):
        for alpha in (F(1, 3), F(-5, 7), F(2)):
            rep = cayley_reconstruction(j, alpha)
            assert rep.exact and rep.max_error == 0.0, (j, alpha)
