# coding=utf-8
# Copyright (c) 2026, The TplusH Authors.  All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Finite sections of ``T(a) + sign H(b)`` as a numerical cross-check.

Dimension counts use tall sections (``2N x N``): a square section has equal
kernel and cokernel dimension and cannot see the index. Cokernel
dimensions are kernel dimensions of the tall section of the adjoint pair.
"""

from dataclasses import dataclass, field, replace
from typing import Optional, Tuple

import numpy as np
import torch

from ..factorization.matching import MatchingAnalysis, adjoint_pair
from ..kernels.kernel_struct import KernelDescription
from ..symbols.calculus import fourier_coeffs, parse_sign
from ..symbols.rational import HardyFunction, as_symbol
from ..runtime.config import ORACLE_RETRY_FACTORS, RESIDUAL_TOL, TAU_SVD, TRUNCATION_N_DEFAULT
from ..utils.errors import ZeroVector
from ..utils.logging import log_pair, logger


@dataclass(frozen=True)
class TruncationMatrix:
    entries: torch.Tensor
    provenance: dict = field(default_factory=dict)

    @property
    def n_rows(self):
        return self.entries.shape[0]

    @property
    def n_cols(self):
        return self.entries.shape[1]


@dataclass(frozen=True)
class OracleReport:
    numeric_kernel_dim: int
    singular_values: Tuple[float, ...]
    residuals: Tuple[Tuple[int, float], ...] = ()
    agrees_with_analytic: Optional[bool] = None
    numeric_cokernel_dim: Optional[int] = None
    truncation_n: Optional[int] = None
    warnings: Tuple[str, ...] = ()


@dataclass(frozen=True)
class HardyTruncation:
    coeffs: np.ndarray
    tail_bound: float


def _coeff_table(x, k_min, k_max):
    return np.asarray(fourier_coeffs(x, k_min, k_max), dtype=np.complex128)


def build_matrix(a, b, sign, N: int, n_rows: Optional[int] = None) -> TruncationMatrix:
    """Entries ``a_{j-k} + sign b_{j+k+1}``, ``0 <= j < n_rows``, ``0 <= k < N``."""
    if N < 1:
        raise ValueError(f"truncation size must be positive, got {N}")
    sign = parse_sign(sign)
    rows = N if n_rows is None else n_rows
    j = np.arange(rows)[:, None]
    k = np.arange(N)[None, :]
    a_hat = _coeff_table(a, -(N - 1), rows - 1)
    b_hat = _coeff_table(b, 1, rows + N - 1)
    entries = a_hat[j - k + (N - 1)] + sign * b_hat[j + k]
    return TruncationMatrix(torch.from_numpy(entries),
                            {"a": as_symbol(a), "b": as_symbol(b), "sign": sign, "N": N})


def build_toeplitz(g, N: int, n_rows: Optional[int] = None) -> torch.Tensor:
    return build_matrix(g, 0, 1, N, n_rows).entries


def build_block_v_matrix(analysis: MatchingAnalysis, N: int, n_rows: Optional[int] = None) -> TruncationMatrix:
    """Block section ``((0, T(d)), (-T(c), T(a~^-1)))`` of ``T(V(a, b))``."""
    rows = N if n_rows is None else n_rows
    t_c = build_toeplitz(analysis.c, N, rows)
    t_d = build_toeplitz(analysis.d, N, rows)
    t_a = build_toeplitz(analysis.a_tilde_inverse, N, rows)
    zero = torch.zeros_like(t_c)
    entries = torch.cat([torch.cat([zero, t_d], dim=1), torch.cat([-t_c, t_a], dim=1)], dim=0)
    return TruncationMatrix(entries, {"block": "V", "N": N})


def numeric_kernel_dim(M: TruncationMatrix, tau=TAU_SVD) -> OracleReport:
    singular = torch.linalg.svdvals(M.entries)
    top = float(singular.max()) if singular.numel() else 0.0
    if top == 0.0:
        dim = M.n_cols
    else:
        dim = int((singular < tau * top).sum()) + max(0, M.n_cols - M.n_rows)
    return OracleReport(numeric_kernel_dim=dim, singular_values=tuple(singular.tolist()))


def truncate_hardy(f, N: int) -> HardyTruncation:
    f = HardyFunction.of(f)
    return HardyTruncation(coeffs=f.taylor(N), tail_bound=f.spectral_radius() ** N)


def residual_check(M: TruncationMatrix, f) -> float:
    """``|M f_N| / |f_N|`` with ``f_N`` the first ``n_cols`` Taylor coefficients."""
    vec = torch.from_numpy(truncate_hardy(f, M.n_cols).coeffs)
    norm = float(torch.linalg.vector_norm(vec))
    if norm == 0.0:
        raise ZeroVector("residual of the zero vector is undefined")
    return float(torch.linalg.vector_norm(M.entries @ vec)) / norm


def _residuals(M, basis):
    return tuple((i, residual_check(M, f)) for i, f in enumerate(basis))


def run_oracle(a, b, sign, description: KernelDescription, N: int = TRUNCATION_N_DEFAULT) -> OracleReport:
    """
    Compare tall-section dimensions and residuals with the analytic description,
    retrying at ``2N`` and ``4N`` before settling on a disagreement.
    """
    sign = parse_sign(sign)
    tag = f"sign={'+' if sign > 0 else '-'} oracle"
    adj_a, adj_b = adjoint_pair(a, b)
    warnings = []
    report = None
    for factor in ORACLE_RETRY_FACTORS:
        size = N * factor
        forward = build_matrix(a, b, sign, size, n_rows=2 * size)
        adjoint = build_matrix(adj_a, adj_b, sign, size, n_rows=2 * size)
        ker = numeric_kernel_dim(forward)
        coker = numeric_kernel_dim(adjoint)
        residuals = _residuals(forward, description.kernel_basis)
        co_residuals = _residuals(adjoint, description.cokernel_basis)
        agrees = (ker.numeric_kernel_dim == description.dim_ker
                  and coker.numeric_kernel_dim == description.dim_coker
                  and all(r <= RESIDUAL_TOL for _, r in residuals + co_residuals))
        report = OracleReport(numeric_kernel_dim=ker.numeric_kernel_dim,
                              singular_values=ker.singular_values,
                              residuals=residuals,
                              agrees_with_analytic=agrees,
                              numeric_cokernel_dim=coker.numeric_kernel_dim,
                              truncation_n=size,
                              warnings=tuple(warnings))
        if agrees:
            log_pair(f"agreement at N={size}", tag)
            return report
        message = (f"N={size}: numeric (ker, coker) = ({ker.numeric_kernel_dim}, {coker.numeric_kernel_dim}), "
                   f"analytic ({description.dim_ker}, {description.dim_coker})")
        warnings.append(message)
        logger.warning(f"[{tag}] {message}")
    return replace(report, warnings=tuple(warnings))
