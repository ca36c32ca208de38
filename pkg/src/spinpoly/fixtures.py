"""Golden fixtures: hand-embedded exact values the library must reproduce.

Each fixture freezes an independently known result — inverse Vandermonde
matrices and dual diagonals for the four smallest spins, characteristic
determinants, and the full Cayley coefficient tables through spin 3 —
and compares bit-exactly against the computed objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import basis, cayley
from .exact import RationalFunction, poly
from .halfint import HalfInt

F = Fraction


def _mat(scale, rows):
    return tuple(tuple(F(x) * F(scale) for x in row) for row in rows)


# inverse Vandermonde matrices for j = 1/2, 1, 3/2, 2
VINV_GOLDEN = {
    1: _mat(F(1, 2), [[1, 1], [1, -1]]),
    2: _mat(F(1, 8), [[0, 8, 0], [2, 0, -2], [1, -2, 1]]),
    3: _mat(
        F(1, 48),
        [[-3, 27, 27, -3], [-1, 27, -27, 1], [3, -3, -3, 3], [1, -3, 3, -1]],
    ),
    4: _mat(
        F(1, 384),
        [
            [0, 0, 384, 0, 0],
            [-16, 128, 0, -128, 16],
            [-4, 64, -120, 64, -4],
            [4, -8, 0, 8, -4],
            [1, -4, 6, -4, 1],
        ],
    ),
}

# dual-matrix diagonals displayed explicitly for j = 1/2, 1, 3/2; the j = 2
# duals are the rows of the j = 2 inverse above.
DUALS_GOLDEN = {
    1: _mat(F(1, 2), [[1, 1], [1, -1]]),
    2: (
        tuple(F(x) for x in (0, 1, 0)),
        tuple(F(x, 4) for x in (1, 0, -1)),
        tuple(F(x, 8) for x in (1, -2, 1)),
    ),
    3: (
        tuple(F(x, 16) for x in (-1, 9, 9, -1)),
        tuple(F(x, 48) for x in (-1, 27, -27, 1)),
        tuple(F(x, 16) for x in (1, -1, -1, 1)),
        tuple(F(x, 48) for x in (1, -3, 3, -1)),
    ),
    4: VINV_GOLDEN[4],
}

# determinants det(1 - 2i*alpha*n.J) for j = 1/2 .. 3, even coefficients only
DET_GOLDEN = {
    1: [1, 1],
    2: [1, 4],
    3: [1, 10, 9],
    4: [1, 20, 64],
    5: [1, 35, 259, 225],
    6: [1, 56, 784, 2304],
}

# Cayley coefficient tables: A_k as reduced rational functions of alpha,
# read off the displayed transforms after the (2i n.J)**k normalization.
# Entries are (numerator coefficients, denominator coefficients) by power.
CAYLEY_GOLDEN = {
    1: [
        ([1, 0, -1], [1, 0, 1]),
        ([0, 2], [1, 0, 1]),
    ],
    2: [
        ([1], [1]),
        ([0, 2], [1, 0, 4]),
        ([0, 0, 2], [1, 0, 4]),
    ],
    3: [
        ([1, 0, 10, 0, -9], [1, 0, 10, 0, 9]),
        ([0, 2, 0, 20], [1, 0, 10, 0, 9]),
        ([0, 0, 2], [1, 0, 10, 0, 9]),
        ([0, 0, 0, 2], [1, 0, 10, 0, 9]),
    ],
    4: [
        ([1], [1]),
        ([0, 2, 0, 40], [1, 0, 20, 0, 64]),
        ([0, 0, 2, 0, 40], [1, 0, 20, 0, 64]),
        ([0, 0, 0, 2], [1, 0, 20, 0, 64]),
        ([0, 0, 0, 0, 2], [1, 0, 20, 0, 64]),
    ],
    5: [
        ([1, 0, 35, 0, 259, 0, -225], [1, 0, 35, 0, 259, 0, 225]),
        ([0, 2, 0, 70, 0, 518], [1, 0, 35, 0, 259, 0, 225]),
        ([0, 0, 2, 0, 70], [1, 0, 35, 0, 259, 0, 225]),
        ([0, 0, 0, 2, 0, 70], [1, 0, 35, 0, 259, 0, 225]),
        ([0, 0, 0, 0, 2], [1, 0, 35, 0, 259, 0, 225]),
        ([0, 0, 0, 0, 0, 2], [1, 0, 35, 0, 259, 0, 225]),
    ],
    6: [
        ([1], [1]),
        ([0, 2, 0, 112, 0, 1568], [1, 0, 56, 0, 784, 0, 2304]),
        ([0, 0, 2, 0, 112, 0, 1568], [1, 0, 56, 0, 784, 0, 2304]),
        ([0, 0, 0, 2, 0, 112], [1, 0, 56, 0, 784, 0, 2304]),
        ([0, 0, 0, 0, 2, 0, 112], [1, 0, 56, 0, 784, 0, 2304]),
        ([0, 0, 0, 0, 0, 2], [1, 0, 56, 0, 784, 0, 2304]),
        ([0, 0, 0, 0, 0, 0, 2], [1, 0, 56, 0, 784, 0, 2304]),
    ],
}


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    detail: str = ""


def _check_vinv(two_j: int) -> FixtureResult:
    name = f"inverse-vandermonde j={HalfInt(two_j)}"
    got = basis.vandermonde_inverse(HalfInt(two_j))
    want = VINV_GOLDEN[two_j]
    if got == want:
        return FixtureResult(name, True)
    return FixtureResult(name, False, f"computed {got} != golden {want}")


def _check_duals(two_j: int) -> FixtureResult:
    name = f"dual-diagonals j={HalfInt(two_j)}"
    got = basis.dual_matrices(HalfInt(two_j)).diags
    want = DUALS_GOLDEN[two_j]
    if got == want:
        return FixtureResult(name, True)
    return FixtureResult(name, False, f"computed {got} != golden {want}")


def _check_det(two_j: int) -> FixtureResult:
    name = f"determinant j={HalfInt(two_j)}"
    got = cayley.det_poly(HalfInt(two_j))
    want_even = DET_GOLDEN[two_j]
    want = [F(0)] * (2 * len(want_even) - 1)
    for i, c in enumerate(want_even):
        want[2 * i] = F(c)
    if got == poly(want):
        return FixtureResult(name, True)
    return FixtureResult(name, False, f"computed {got} != golden {tuple(want)}")


def _check_cayley(two_j: int) -> FixtureResult:
    name = f"cayley-coefficients j={HalfInt(two_j)}"
    table = cayley.b_coeffs(HalfInt(two_j))
    for k, (num, den) in enumerate(CAYLEY_GOLDEN[two_j]):
        want = RationalFunction(poly(num), poly(den))
        got = table.A[k].canonical()
        if got != want:
            return FixtureResult(
                name, False, f"A_{k}: computed {got} != golden {want}"
            )
    return FixtureResult(name, True)


def run_fixtures() -> list[FixtureResult]:
    """Run every embedded fixture; exact comparisons only."""
    results = []
    for two_j in (1, 2, 3, 4):
        results.append(_check_vinv(two_j))
    for two_j in (1, 2, 3, 4):
        results.append(_check_duals(two_j))
    for two_j in (1, 2, 3, 4, 5, 6):
        results.append(_check_det(two_j))
    for two_j in (1, 2, 3, 4, 5, 6):
        results.append(_check_cayley(two_j))
    return results
