from .kernel_struct import (
    PmBases,
    Branch,
    KernelContributions,
    KernelDescription,
    toeplitz_kernel_basis,
    pm_bases,
    pg_project,
    right_inverse_apply,
    phi_map,
    kernel_space,
    kernel_cokernel,
    defect_numbers,
    basis_is_independent,
)
from .coburn import CoburnClass, CorollaryCase, CoburnVerdict, coburn_classify
