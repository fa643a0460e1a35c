import numpy as np
import pytest
import torch

from TplusH.factorization.matching import Quadrant, analyze, matching_function
from TplusH.kernels.kernel_struct import Branch, kernel_cokernel, pm_bases
from TplusH.oracle.finite_section import (
    TruncationMatrix,
    build_block_v_matrix,
    build_matrix,
    numeric_kernel_dim,
    residual_check,
    run_oracle,
    truncate_hardy,
)
from TplusH.symbols.calculus import apply_jqgp, sup_norm
from TplusH.symbols.rational import HardyFunction, RationalSymbol, monomial
from TplusH.utils.errors import ZeroVector

from conftest import random_hardy_outside, random_matching_pair

t = monomial(1)
BLASCHKE = (t - 0.5) / (0.5 * t - 1)
TRIPLE = (t - 2) * (t - 2) * (t - 2)


def test_build_matrix_toeplitz_part():
    M = build_matrix(2 + t, 2 + monomial(-1), "+", 3)
    assert np.allclose(M.entries.numpy(), [[2, 0, 0], [1, 2, 0], [0, 1, 2]])
    assert (M.n_rows, M.n_cols) == (3, 3)


def test_build_matrix_hankel_part():
    M = build_matrix(0, t, "+", 2)
    assert np.allclose(M.entries.numpy(), [[1, 0], [0, 0]])
    M = build_matrix(1, 0, "-", 4)
    assert np.allclose(M.entries.numpy(), np.eye(4))


def test_tall_sections_see_one_sided_kernels():
    assert numeric_kernel_dim(build_matrix(t, 0, "+", 16, n_rows=32)).numeric_kernel_dim == 0
    assert numeric_kernel_dim(build_matrix(monomial(-1), 0, "+", 16, n_rows=32)).numeric_kernel_dim == 1


def test_numeric_kernel_dim_of_identity_and_zero():
    eye = TruncationMatrix(torch.eye(4, dtype=torch.complex128))
    assert numeric_kernel_dim(eye).numeric_kernel_dim == 0
    zero = TruncationMatrix(torch.zeros((3, 3), dtype=torch.complex128))
    assert numeric_kernel_dim(zero).numeric_kernel_dim == 3


def test_blaschke_section_has_one_dimensional_kernel():
    report = numeric_kernel_dim(build_matrix(1, BLASCHKE, "+", 64))
    assert report.numeric_kernel_dim == 1
    assert len(report.singular_values) == 64


def test_truncate_hardy():
    trunc = truncate_hardy(1 / (t - 2), 3)
    assert np.allclose(trunc.coeffs, [-0.5, -0.25, -0.125])
    assert trunc.tail_bound == pytest.approx(0.125)
    assert np.allclose(truncate_hardy(1 + t, 4).coeffs, [1, 1, 0, 0])
    assert np.allclose(truncate_hardy(RationalSymbol(), 3).coeffs, 0)


def test_residual_check():
    a = 2 + t
    one = HardyFunction.of(1.0)
    assert residual_check(build_matrix(a, a * t, "-", 16), one) <= 1e-12
    assert residual_check(build_matrix(a, 2 + monomial(-1), "+", 16), one) > 1e-3
    kernel = HardyFunction.of(1 / (t - 2))
    assert residual_check(build_matrix(1, BLASCHKE, "+", 64), kernel) <= 1e-6
    with pytest.raises(ZeroVector):
        residual_check(build_matrix(a, a, "+", 4), RationalSymbol())


def test_block_v_matrix():
    M = build_block_v_matrix(analyze(1, 1), 2)
    expected = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 1, 0], [0, -1, 0, 1]]
    assert np.allclose(M.entries.numpy(), expected)
    invertible = build_block_v_matrix(analyze(2 + t, 2 + monomial(-1)), 64)
    assert numeric_kernel_dim(invertible).numeric_kernel_dim == 0


@pytest.mark.parametrize("pair,sign", [
    ((2 + t, 2 + monomial(-1)), "+"),
    ((2 + t, 2 + monomial(-1)), "-"),
    ((1, BLASCHKE), "+"),
    ((1, BLASCHKE), "-"),
    ((monomial(-1), 1), "+"),
    ((monomial(-1), monomial(-3)), "+"),
    ((2 + t, (2 + t) * t), "-"),
    ((TRIPLE, TRIPLE * t), "-"),
])
def test_oracle_agrees_with_analytic_dimensions(pair, sign):
    a, b = pair
    description = kernel_cokernel(a, b, sign)
    report = run_oracle(a, b, sign, description, 32)
    assert report.agrees_with_analytic
    assert report.numeric_kernel_dim == description.dim_ker
    assert report.numeric_cokernel_dim == description.dim_coker
    assert report.truncation_n == 32
    assert report.warnings == ()
    assert all(r <= 1e-6 for _, r in report.residuals)


def test_oracle_retries_before_reporting_disagreement():
    wrong = kernel_cokernel(monomial(-1), 1, "+")
    report = run_oracle(2 + t, 2 + monomial(-1), "+", wrong, 8)
    assert not report.agrees_with_analytic
    assert report.truncation_n == 32
    assert len(report.warnings) == 3


def test_block_v_kernel_splits_over_c_and_d():
    a, b = monomial(-1), 1
    analysis = analyze(a, b)
    block = build_block_v_matrix(analysis, 16, n_rows=32)
    tall_c = build_matrix(analysis.c, 0, "+", 16, n_rows=32)
    tall_d = build_matrix(analysis.d, 0, "+", 16, n_rows=32)
    expected = numeric_kernel_dim(tall_c).numeric_kernel_dim + numeric_kernel_dim(tall_d).numeric_kernel_dim
    assert expected == 2
    assert numeric_kernel_dim(block).numeric_kernel_dim == expected


def _toeplitz_section(g, N=64):
    return build_matrix(g, 0, "+", N, n_rows=2 * N)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_toeplitz_sections_match_pm_bases(rng, n):
    symbols = [monomial(-n)] + [matching_function(random_hardy_outside(rng), -n, eps) for eps in (1, -1)]
    for g in symbols:
        section = _toeplitz_section(g)
        assert numeric_kernel_dim(section).numeric_kernel_dim == n
        bases = pm_bases(g)
        assert len(bases.plus) == (n + bases.sigma * (n % 2)) // 2
        assert len(bases.plus) + len(bases.minus) == n
        for e in bases.plus + bases.minus:
            assert residual_check(section, e) <= 1e-6
            twice = apply_jqgp(g, apply_jqgp(g, e))
            assert sup_norm(twice - e) <= 1e-8 * max(1.0, sup_norm(e))


def test_block_v_kernel_splits_for_random_pairs(rng):
    checked = 0
    for _ in range(200):
        analysis = analyze(*random_matching_pair(rng))
        if analysis.kappa1 < 0:
            continue
        block = build_block_v_matrix(analysis, 64, n_rows=128)
        tall_c = numeric_kernel_dim(_toeplitz_section(analysis.c)).numeric_kernel_dim
        tall_d = numeric_kernel_dim(_toeplitz_section(analysis.d)).numeric_kernel_dim
        assert tall_c == analysis.kappa1
        assert tall_d == max(analysis.kappa2, 0)
        assert numeric_kernel_dim(block).numeric_kernel_dim == tall_c + tall_d
        checked += 1
        if checked == 10:
            break
    assert checked == 10


def test_oracle_agrees_on_shifted_mixed_pairs(rng):
    checked = 0
    for _ in range(200):
        a, b = random_matching_pair(rng)
        analysis = analyze(a, b)
        if analysis.kappa2 <= 0:
            continue
        # (a t^n, b t^-n) keeps d and sends c to c t^2n
        n = max(analysis.kappa1, 0) // 2 + 1
        a, b = a.shift(n), b.shift(-n)
        assert analyze(a, b).quadrant is Quadrant.NP
        for sign in ("+", "-"):
            description = kernel_cokernel(a, b, sign)
            assert description.branch in (Branch.MIXED_EVEN, Branch.MIXED_ODD)
            assert run_oracle(a, b, sign, description, 32).agrees_with_analytic
        checked += 1
        if checked == 5:
            break
    assert checked == 5
