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
Kernels and cokernels of ``T(a) + sign H(b)`` for matching pairs.

The kernel is assembled from the subordinated pair ``(c, d)``:

* PP and PN quadrants (``T(c)`` right invertible): ``im P_c^{-s}`` plus the
  image of ``im P_d^{s}`` under ``phi_s``, where ``s`` is the sign.
* NN quadrant: trivial kernel.
* NP quadrant: shift the pair by ``t^n`` until ``T(c)`` is right invertible,
  keep the kernel elements of the shifted operator that vanish to order
  ``n`` at 0 and divide by ``t^n``.

Cokernels are kernels of the adjoint pair, built by the same dispatcher.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple

import numpy as np
import torch

from ..factorization.matching import (
    MatchingAnalysis,
    Quadrant,
    adjoint_pair,
    analyze,
    shift_pair,
    subordinated_pair,
)
from ..factorization.wiener_hopf import factorize, factorize_matching, winding_index
from ..symbols.calculus import (
    apply_jqgp,
    apply_toeplitz,
    parse_sign,
    riesz_p,
    sign_label,
    sup_norm,
)
from ..symbols.laurent import LaurentPoly
from ..symbols.rational import HardyFunction, RationalSymbol, as_symbol, monomial, tilde
from ..runtime.config import (
    INDEPENDENCE_TOL,
    KERNEL_TOL,
    NULLSPACE_CUTOFF,
    RIGHT_INVERSE_TOL,
    TAYLOR_PROBE,
)
from ..utils.errors import (
    NonConvergence,
    NotFredholmPair,
    NotInKernel,
    NotRightInvertible,
    SymbolDegenerateOnCircle,
)
from ..utils.logging import log_pair, logger


@dataclass(frozen=True)
class PmBases:
    plus: Tuple[HardyFunction, ...]
    minus: Tuple[HardyFunction, ...]
    n: int
    sigma: int

    def side(self, sign) -> Tuple[HardyFunction, ...]:
        return self.plus if parse_sign(sign) > 0 else self.minus


class Branch(Enum):
    RIGHT_INVERTIBLE = "right_invertible"
    LEFT_INVERTIBLE = "left_invertible"
    SPLIT = "split"
    MIXED_ODD = "mixed_odd"
    MIXED_EVEN = "mixed_even"


@dataclass(frozen=True)
class KernelContributions:
    """Dimensions coming from ``im P_c`` and from the ``phi`` image of ``im P_d``."""
    from_c: int
    from_d: int


@dataclass(frozen=True)
class KernelDescription:
    sign: int
    kernel_basis: Tuple[HardyFunction, ...]
    cokernel_basis: Tuple[HardyFunction, ...]
    branch: Branch
    contributions: KernelContributions
    cokernel_branch: Branch

    @property
    def dim_ker(self):
        return len(self.kernel_basis)

    @property
    def dim_coker(self):
        return len(self.cokernel_basis)

    @property
    def index(self):
        return self.dim_ker - self.dim_coker


def _in_kernel(g, f) -> bool:
    residual = sup_norm(apply_toeplitz(g, f))
    return residual <= KERNEL_TOL * max(1.0, sup_norm(f))


def toeplitz_kernel_basis(g) -> List[HardyFunction]:
    """``{g_plus^-1 t^j : j < n}`` for ``ind T(g) = n > 0``; empty otherwise."""
    g = as_symbol(g)
    n = -winding_index(g)
    if n <= 0:
        return []
    inverse = factorize(g).g_plus.inverse()
    return [HardyFunction.of(inverse.shift(j)) for j in range(n)]


def _pm_element(inverse_plus, first, second, sign, sigma):
    poly = LaurentPoly.monomial(first) + (sign * sigma) * LaurentPoly.monomial(second)
    if poly.is_zero():
        return None
    return HardyFunction.of(inverse_plus * RationalSymbol(poly))


def pm_bases(g) -> PmBases:
    """
    Bases of the ranges of ``P_g^+`` and ``P_g^-`` in ``ker T(g)``.

    With ``n = ind T(g)`` and ``m = n // 2``: for even ``n`` the elements are
    ``g_plus^-1 (t^(m-k-1) +- sigma t^(m+k))``, ``k < m``; for odd ``n`` they
    are ``g_plus^-1 (t^(m+k) +- sigma t^(m-k))``, ``k <= m``, where the one
    vanishing ``k = 0`` element is dropped.
    """
    fac = factorize_matching(g)
    n, sigma = fac.toeplitz_index, fac.signature
    if n < 0:
        raise ValueError(f"T(g) has index {n}; the kernel is trivial")
    inverse = fac.g_plus.inverse()
    m = n // 2
    if n % 2 == 0:
        pairs = [(m - k - 1, m + k) for k in range(m)]
    else:
        pairs = [(m + k, m - k) for k in range(m + 1)]
    sides = {}
    for sign in (1, -1):
        elements = (_pm_element(inverse, i, j, sign, sigma) for i, j in pairs)
        sides[sign] = tuple(e for e in elements if e is not None)
    return PmBases(plus=sides[1], minus=sides[-1], n=n, sigma=sigma)


def pg_project(g, f, side) -> HardyFunction:
    """``(f +- JQgP f) / 2`` for ``f`` in ``ker T(g)``."""
    side = parse_sign(side)
    f = HardyFunction.of(f)
    if not _in_kernel(g, f):
        raise NotInKernel(f"{f!r} is not in the kernel of T({g!r})")
    return HardyFunction.of((f + side * apply_jqgp(g, f)) * 0.5)


def right_inverse_apply(c, f) -> HardyFunction:
    """
    Canonical right inverse of ``T(c)`` for ``c = c_minus t^n c_plus``, ``n <= 0``:
    ``c_plus^-1 P(c_minus^-1 t^-n f)``.
    """
    fac = factorize(c)
    if fac.index_n > 0:
        raise NotRightInvertible(f"T({c!r}) has index {-fac.index_n} < 0")
    f = HardyFunction.of(f)
    if f.is_zero():
        return f
    inner = riesz_p(fac.g_minus.inverse() * f.shift(-fac.index_n))
    result = HardyFunction.of(fac.g_plus.inverse() * inner)
    defect = sup_norm(apply_toeplitz(c, result) - f)
    if defect > RIGHT_INVERSE_TOL * max(1.0, sup_norm(f)):
        raise NonConvergence(f"right inverse of T({c!r}) misses by {defect:.3e}")
    return result


def phi_map(a, b, s, sign) -> HardyFunction:
    """
    ``phi_s(x) = R x - s JQcP R x + s JQ(a~^-1 x)`` with
    ``R = T_r^-1(c) T(a~^-1)``; sends ``im P_d^s`` into ``ker(T(a) + s H(b))``.
    """
    sign = parse_sign(sign)
    c, d = subordinated_pair(a, b)
    s = HardyFunction.of(s)
    if not _in_kernel(d, s):
        raise NotInKernel(f"{s!r} is not in the kernel of T(d)")
    if s.is_zero():
        return s
    a_tilde_inv = tilde(a).inverse()
    r = right_inverse_apply(c, apply_toeplitz(a_tilde_inv, s))
    value = r - sign * apply_jqgp(c, r) + sign * apply_jqgp(a_tilde_inv, s)
    return HardyFunction.of(value)


def _right_invertible_kernel(analysis: MatchingAnalysis, sign: int):
    from_c = pm_bases(analysis.c).side(-sign) if analysis.kappa1 > 0 else ()
    from_d = ()
    if analysis.kappa2 > 0:
        from_d = tuple(phi_map(analysis.a, analysis.b, s, sign)
                       for s in pm_bases(analysis.d).side(sign))
    return tuple(from_c) + from_d, KernelContributions(len(from_c), len(from_d))


def taylor_matrix(basis: Sequence[HardyFunction], rows: int, normalize=True) -> torch.Tensor:
    """Columns are the first ``rows`` Taylor coefficients of each basis element."""
    cols = []
    for f in basis:
        coeffs = f.taylor(max(rows, TAYLOR_PROBE))
        scale = np.linalg.norm(coeffs) if normalize else 1.0
        cols.append(coeffs[:rows] / (scale if scale > 0 else 1.0))
    if not cols:
        return torch.zeros((rows, 0), dtype=torch.complex128)
    return torch.from_numpy(np.stack(cols, axis=1))


def _column_scales(basis: Sequence[HardyFunction]):
    return [float(np.linalg.norm(f.taylor(TAYLOR_PROBE))) or 1.0 for f in basis]


def _vanishing_combinations(basis: Sequence[HardyFunction], order: int) -> List[HardyFunction]:
    """Combinations of ``basis`` whose first ``order`` Taylor coefficients vanish."""
    if not basis:
        return []
    matrix = taylor_matrix(basis, order)
    _, singular, vh = torch.linalg.svd(matrix, full_matrices=True)
    top = float(singular.max()) if singular.numel() else 0.0
    rank = int((singular > NULLSPACE_CUTOFF * top).sum()) if top > 0 else 0
    scales = _column_scales(basis)
    combos = []
    for row in vh[rank:]:
        weights = row.conj().resolve_conj().numpy()
        u = RationalSymbol()
        for weight, scale, f in zip(weights, scales, basis):
            if weight != 0:
                u = u + f * complex(weight / scale)
        combos.append(u)
    return combos


def basis_is_independent(basis: Sequence[HardyFunction]) -> bool:
    if len(basis) < 2:
        return True
    singular = torch.linalg.svdvals(taylor_matrix(basis, TAYLOR_PROBE))
    return bool(singular.min() >= INDEPENDENCE_TOL)


def _mixed_kernel(analysis: MatchingAnalysis, sign: int, tag: str):
    # 2n + kappa1 in {0, 1} makes the shifted T(c) right invertible
    n = (-analysis.kappa1 + 1) // 2
    shifted = analyze(*shift_pair(analysis.a, analysis.b, n))
    candidates, contributions = _right_invertible_kernel(shifted, sign)
    log_pair(f"mixed quadrant: shift n={n}, candidate dimension {len(candidates)}", tag)
    down = monomial(-n)
    kernel = tuple(apply_toeplitz(down, u) for u in _vanishing_combinations(candidates, n))
    branch = Branch.MIXED_ODD if analysis.kappa1 % 2 else Branch.MIXED_EVEN
    return kernel, branch, contributions


def kernel_space(analysis: MatchingAnalysis, sign, tag=None):
    """Kernel basis of ``T(a) + sign H(b)``, its branch and the per-source dimensions."""
    sign = parse_sign(sign)
    quadrant = analysis.quadrant
    if quadrant is Quadrant.NN:
        basis, branch, contributions = (), Branch.LEFT_INVERTIBLE, KernelContributions(0, 0)
    elif quadrant is Quadrant.NP:
        basis, branch, contributions = _mixed_kernel(analysis, sign, tag)
    else:
        basis, contributions = _right_invertible_kernel(analysis, sign)
        branch = Branch.RIGHT_INVERTIBLE if quadrant is Quadrant.PP else Branch.SPLIT
    log_pair(f"quadrant {quadrant.value} -> {branch.value}, dim {len(basis)}", tag)
    if not basis_is_independent(basis):
        logger.warning(f"[{tag}] assembled kernel basis is numerically dependent")
    return basis, branch, contributions


def _fredholm_analysis(a, b) -> MatchingAnalysis:
    try:
        return analyze(a, b)
    except SymbolDegenerateOnCircle as err:
        raise NotFredholmPair(f"T(a) +- H(b) is not Fredholm: {err}") from err


def kernel_cokernel(a, b, sign) -> KernelDescription:
    """
    Kernel and cokernel bases of ``T(a) + sign H(b)``.

    Raises ``NotFredholmPair`` when ``a`` or ``b`` is not invertible on the
    circle, so that ``T(c)`` and ``T(d)`` are not Fredholm.
    """
    sign = parse_sign(sign)
    tag = f"sign={sign_label(sign)}"
    analysis = _fredholm_analysis(a, b)
    kernel, branch, contributions = kernel_space(analysis, sign, tag)
    adjoint = _fredholm_analysis(*adjoint_pair(a, b))
    cokernel, co_branch, _ = kernel_space(adjoint, sign, f"{tag} adjoint")
    return KernelDescription(sign=sign, kernel_basis=tuple(kernel), cokernel_basis=tuple(cokernel),
                             branch=branch, contributions=contributions, cokernel_branch=co_branch)


def defect_numbers(a, b, sign) -> Tuple[int, int]:
    description = kernel_cokernel(a, b, sign)
    return description.dim_ker, description.dim_coker
