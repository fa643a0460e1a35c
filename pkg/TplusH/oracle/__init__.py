from .finite_section import (
    TruncationMatrix,
    OracleReport,
    HardyTruncation,
    build_matrix,
    build_toeplitz,
    build_block_v_matrix,
    numeric_kernel_dim,
    truncate_hardy,
    residual_check,
    run_oracle,
)
