from .wiener_hopf import (
    WHFactorization,
    argument_winding,
    winding_index,
    factorize,
    factorize_matching,
    is_matching_function,
    signature,
    signature_point_check,
)
from .matching import (
    MatchingAnalysis,
    Quadrant,
    classify_quadrant,
    check_matching,
    subordinated_pair,
    analyze,
    adjoint_pair,
    shift_pair,
    matching_function,
    matching_pair,
)
