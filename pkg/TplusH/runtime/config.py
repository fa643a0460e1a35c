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

#########################################
# Symbol calculus
#########################################
# Relative distance of a root or pole to |z| = 1 below which the symbol is
# declared degenerate on the circle.
DELTA_CIRC = 1e-8

# Root residual bound after one Newton polish, relative to sum |c_k| |r|^k.
EPS_ROOT = 1e-10

# Roots closer than this (relative to max(1, |r|)) are one multiple root.
ROOT_CLUSTER_TOL = 1e-7

# An m-fold root may spread over MULTIPLE_ROOT_SCALE ** (1 / m) before
# its eigenvalues stop counting as one root.
MULTIPLE_ROOT_SCALE = 1e-11

# Common numerator/denominator roots within this distance are cancelled.
REDUCE_TOL = 1e-7

# Coefficients below this fraction of the largest one are dropped at the
# ends of a Laurent polynomial.
COEFF_TRIM_TOL = 1e-13

# Circle samples for sup-norm style checks.
CIRCLE_SAMPLES = 256

#########################################
# Wiener-Hopf factorization
#########################################
WINDING_SAMPLES = 1024
WINDING_RETRY_FACTOR = 16

RECONSTRUCT_SAMPLES = 128
RECONSTRUCT_TOL = 1e-9

MATCHING_TOL = 1e-9

SIGNATURE_GUARD = 1e-7
SIGNATURE_IDENTITY_TOL = 1e-8

#########################################
# Kernel structure
#########################################
# f counts as a kernel element when sup |T(g) f| <= KERNEL_TOL * max(1, sup |f|)
KERNEL_TOL = 1e-8

RIGHT_INVERSE_TOL = 1e-9

# Relative singular value cutoff of the mixed-case coefficient matrix.
NULLSPACE_CUTOFF = 1e-8

# Taylor coefficients used to normalise and compare kernel elements.
TAYLOR_PROBE = 64
INDEPENDENCE_TOL = 1e-6

#########################################
# Finite section oracle
#########################################
TAU_SVD = 1e-8

TRUNCATION_N = "n"
TRUNCATION_N_DEFAULT = 64

# Multipliers of N tried before a disagreement is reported.
ORACLE_RETRY_FACTORS = (1, 2, 4)

RESIDUAL_TOL = 1e-6

#########################################
# Piecewise-constant Fredholm test
#########################################
EPS_PC = 1e-9

PC_GRID_SIZE = "grid_size"
PC_GRID_SIZE_DEFAULT = 257

PC_P = "p"
PC_P_DEFAULT = 2.0

# Bracket tolerance of the minimum refinement, in the stretched variable.
PC_REFINE_XATOL = 1e-13

#########################################
# Reports
#########################################
ANALYSIS_SIGN = "sign"
ANALYSIS_SIGN_DEFAULT = "both"

# Taylor coefficients emitted per basis element in JSON and human reports.
REPORT_TAYLOR_JSON = 16
REPORT_TAYLOR_TEXT = 8
