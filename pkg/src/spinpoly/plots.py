"""Long-format figure data (x, series, value), ready for external plotting.

Three figure families are built in: the exponential coefficients A_0..A_5
at two very large spins, the leading Cayley ratios B_k/alpha^k at a few
integer spins against the large-j limit curve, and the inverse
determinant for the six smallest spins.  Grid sweeps honor the
SPINPOLY_THREADS cap and always gather results in input order, so output
is deterministic.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import cayley, expcoeffs
from .halfint import HalfInt

FIGURES = ("exp-A", "cayley-B12", "inv-det")


@dataclass(frozen=True)
class GridSpec:
    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("grid count must be at least 1")
        if self.stop < self.start:
            raise ValueError("grid stop must not precede start")

    def values(self) -> list[float]:
        if self.count == 1:
            return [self.start]
        step = (self.stop - self.start) / (self.count - 1)
        return [self.start + i * step for i in range(self.count)]


def _pmap(fn: Callable, items: Sequence) -> list:
    workers = int(os.environ.get("SPINPOLY_THREADS", "1") or "1")
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))  # map preserves order: gather-then-emit


def figure_rows(
    figure: str,
    js: Sequence[HalfInt] | None = None,
    ks: Sequence[int] | None = None,
    grid: GridSpec | None = None,
) -> tuple[tuple[str, str, str], list[tuple[float, str, float]]]:
    """Rows for one named figure; raises ValueError on an unknown name."""
    if figure == "exp-A":
        js = js or [HalfInt(138), HalfInt(137)]
        ks = ks if ks is not None else range(6)
        grid = grid or GridSpec(0.0, 4 * math.pi, 800)
        header = ("theta", "series", "value")
        rows = []
        for j in js:
            for k in ks:
                vals = _pmap(lambda th, j=j, k=k: expcoeffs.a_coeff_trunc(j, k, th), grid.values())
                rows += [
                    (th, f"j={j} k={k}", v) for th, v in zip(grid.values(), vals)
                ]
        return header, rows
    if figure == "cayley-B12":
        js = js or [HalfInt(2), HalfInt(4), HalfInt(16)]
        ks = ks if ks is not None else [1]
        grid = grid or GridSpec(0.05, 5.0, 200)
        header = ("alpha", "series", "value")
        rows = []
        for j in js:
            table = cayley.b_coeffs(j)
            for k in ks:
                vals = _pmap(
                    lambda a, rf=table.B[k], k=k: float(rf(Fraction(a))) / a**k,
                    grid.values(),
                )
                rows += [(a, f"j={j} k={k}", v) for a, v in zip(grid.values(), vals)]
        parities = {j.is_integer for j in js}
        for k in ks:
            for parity in sorted(parities):
                vals = _pmap(
                    lambda a, k=k, p=parity: cayley.b_limit_ratio(p, k, a), grid.values()
                )
                label = "limit" if len(parities) == 1 else (
                    "limit (integer j)" if parity else "limit (semi-integer j)"
                )
                rows += [(a, f"{label} k={k}", v) for a, v in zip(grid.values(), vals)]
        return header, rows
    if figure == "inv-det":
        js = js or [HalfInt(n) for n in range(1, 7)]
        grid = grid or GridSpec(0.0, 2.0, 400)
        header = ("alpha", "series", "value")
        rows = []
        for j in js:
            det = cayley.det_poly(j)
            fdet = [float(c) for c in det]
            vals = _pmap(
                lambda a, f=fdet: 1.0 / _horner(f, a * a), grid.values()
            )
            rows += [(a, f"j={j}", v) for a, v in zip(grid.values(), vals)]
        return header, rows
    raise ValueError(f"unknown figure {figure!r}; known: {', '.join(FIGURES)}")


def _horner(even_coeffs_by_power: list[float], x2: float) -> float:
    # determinant polynomials hold zeros at odd powers; evaluate in alpha^2
    acc = 0.0
    for c in reversed(even_coeffs_by_power[::2]):
        acc = acc * x2 + c
    return acc


def validate_figure(figure: str) -> list[str]:
    """Spot-check emitted values against an independent path.

    Returns a list of violation messages (empty means validated).  This is
    how figure data is accepted: the reference plots are pixels, so the
    numbers are vouched for by cross-path agreement instead.
    """
    problems = []
    if figure == "exp-A":
        for j in (HalfInt(138), HalfInt(137)):
            for k in range(6):
                for theta in (0.7, 2.0, math.pi, 5.5, 9.1, 11.8):
                    a = expcoeffs.a_coeff_trunc(j, k, theta)
                    if expcoeffs.epsilon(j, k) == 0:
                        b = expcoeffs.a_coeff_cfn_series(j, k, theta)
                    else:
                        b = expcoeffs.a_coeff_derivative_path(j, k + 1, [theta])[0]
                    if a != b and abs(a - b) > 1e-12 * max(abs(a), abs(b)):
                        problems.append(f"exp-A j={j} k={k} theta={theta}: {a} vs {b}")
    elif figure == "cayley-B12":
        for j in (HalfInt(2), HalfInt(4), HalfInt(16)):
            table = cayley.b_coeffs(j)
            for alpha in (0.1, 0.5, 1.0, 2.5, 5.0):
                direct = float(table.B[1](Fraction(alpha))) / alpha
                gamma = cayley.b_exact_gamma(j.two_j // 2, 1, alpha)
                if abs(direct - gamma) > 1e-9 * max(1.0, abs(direct)):
                    problems.append(f"cayley-B12 j={j} alpha={alpha}: {direct} vs {gamma}")
    elif figure == "inv-det":
        for n in range(1, 7):
            j = HalfInt(n)
            det = cayley.det_poly(j)
            for alpha in (0.25, 0.8, 1.5, 2.0):
                poly_val = math.fsum(float(c) * alpha**i for i, c in enumerate(det))
                gamma_val = cayley.det_gamma(j, alpha)
                if abs(poly_val - gamma_val) > 1e-10 * max(abs(poly_val), abs(gamma_val)):
                    problems.append(f"inv-det j={j} alpha={alpha}: {poly_val} vs {gamma_val}")
    else:
        raise ValueError(f"unknown figure {figure!r}; known: {', '.join(FIGURES)}")
    return problems
