from .pc_fredholm import (
    PCSymbol,
    PCFredholmReport,
    nu_p,
    h_p,
    nu_p_grid,
    h_p_grid,
    y_grid,
    pc_fredholm_test,
    pc_p_sweep,
)
