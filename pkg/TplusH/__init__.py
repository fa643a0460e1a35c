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


from .runtime.engine import version as __version__

from .symbols import (
    LaurentPoly,
    RationalSymbol,
    HardyFunction,
    monomial,
    constant,
    tilde,
    conj_reflect,
    flip,
    parse_symbol,
    symbol_literal,
    riesz_p,
    riesz_q,
    fourier_coeffs,
    apply_toeplitz,
    apply_hankel,
    apply_operator,
)
from .factorization import (
    factorize,
    factorize_matching,
    signature,
    winding_index,
    analyze,
    adjoint_pair,
    subordinated_pair,
    matching_function,
    matching_pair,
)
from .kernels import kernel_cokernel, defect_numbers, coburn_classify, pm_bases, phi_map
from .oracle import build_matrix, numeric_kernel_dim, run_oracle
from .pc import PCSymbol, pc_fredholm_test, pc_p_sweep
from .utils.errors import TplusHError
