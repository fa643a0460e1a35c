from .laurent import LaurentPoly, lp_arith
from .roots import RootSplit, poly_roots
from .rational import (
    RationalSymbol,
    HardyFunction,
    as_symbol,
    monomial,
    constant,
    tilde,
    conj_reflect,
    flip,
    rs_eval,
)
from .calculus import (
    parse_sign,
    sign_label,
    circle_points,
    sup_norm,
    pole_split,
    riesz_p,
    riesz_q,
    fourier_coeffs,
    apply_toeplitz,
    apply_hankel,
    apply_jqgp,
    apply_operator,
)
from .literal import parse_symbol, symbol_literal
