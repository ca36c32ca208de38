"""Micro-benchmarks: exact table construction vs per-point evaluation cost."""

from __future__ import annotations

import statistics
import time

from . import cayley, expcoeffs
from .halfint import HalfInt


def _time_ns(fn, repeats: int) -> float:
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    return statistics.median(samples)


def run_bench(two_js=(10, 50, 100), repeats: int = 3) -> list[dict]:
    """Median ns/op for: exact Cayley table build, one float Cayley
    evaluation (all coefficients at one alpha), one exponential
    evaluation (all coefficients at one theta)."""
    results = []
    for two_j in two_js:
        j = HalfInt(two_j)
        det = cayley.det_poly(j)

        build_ns = _time_ns(lambda: cayley._coeffs_from_det(j, det), repeats)

        table = cayley.b_coeffs(j)
        nums = [[float(c) for c in rf.num] for rf in table.A]
        dens = [float(c) for c in det]
        alphas = [0.05 + 0.01 * i for i in range(100)]

        def eval_cayley():
            for a in alphas:
                d = _horner(dens, a)
                for num in nums:
                    _horner(num, a) / d

        cayley_ns = _time_ns(eval_cayley, repeats) / len(alphas)

        expcoeffs.exp_poly(j, 0.1)  # populate the exact series cache
        thetas = [0.05 + 0.06 * i for i in range(50)]

        def eval_exp():
            for th in thetas:
                expcoeffs.exp_poly(j, th)

        exp_ns = _time_ns(eval_exp, repeats) / len(thetas)

        results.append(
            {
                "two_j": two_j,
                "build_exact_table_ns": build_ns,
                "cayley_eval_per_alpha_ns": cayley_ns,
                "exp_eval_per_theta_ns": exp_ns,
            }
        )
    return results


def _horner(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
