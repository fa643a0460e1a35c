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


import sys
from dataclasses import dataclass, field
from typing import List, Optional

from ..runtime.config import (
    ANALYSIS_SIGN_DEFAULT,
    PC_GRID_SIZE_DEFAULT,
    PC_P_DEFAULT,
    TRUNCATION_N_DEFAULT,
)

MODES = ["analyze", "factorize", "signature", "kernel", "oracle", "pc-check"]


def print_args(args, stream=None):
    """Print the argument table, one dotted line per field."""
    stream = sys.stderr if stream is None else stream
    print('------------------------ arguments ------------------------', file=stream, flush=True)
    str_list = []
    for arg in vars(args):
        dots = '.' * (48 - len(arg))
        str_list.append('  {} {} {}'.format(arg, dots, getattr(args, arg)))
    for arg in sorted(str_list, key=lambda x: x.lower()):
        print(arg, file=stream, flush=True)
    print('-------------------- end of arguments ---------------------', file=stream, flush=True)


@dataclass
class TplusHArguments:
    """
    Command line arguments of ``tplush``. Using [`HfArgumentParser`] this class
    turns into argparse arguments; dashed spellings such as ``--p-sweep`` are
    accepted as well.
    Parameters:
    -   mode (str, defaults to 'analyze') -- One of 'analyze', 'factorize', 'signature', 'kernel', 'oracle', 'pc-check'.
    -   a, b (str, Optional) -- Symbol literals as JSON text. In pc-check mode they are piecewise-constant literals.
    -   pair (str, Optional) -- JSON file with keys "a", "b" and optionally "sign", "n", "p".
    -   sign (str, defaults to 'both') -- 'plus', 'minus' or 'both'.
    -   n (int, defaults to 64) -- Truncation size of the finite-section oracle.
    -   p (float, defaults to 2.0) -- Exponent of H^p for the pc-check mode.
    -   p_sweep (List[float], Optional) -- List of exponents swept in pc-check mode, overrides p.
    -   grid_size (int, defaults to 257) -- Points of the y-grid in pc-check mode.
    -   json (bool, defaults to False) -- Emit one JSON document on stdout.
    -   report (str, Optional) -- Also write the JSON report to this file.
    -   log_level (str, defaults to 'warning') -- Level of the package logger.
    -   wall_clock_breakdown (bool, defaults to False) -- Log per-stage timings and print this table.
    """

    mode: str = field(
        default="analyze",
        metadata={"help": "What to compute. Defaults to 'analyze'.", "choices": MODES},
    )
    a: Optional[str] = field(
        default=None,
        metadata={"help": 'Symbol a, e.g. \'{"laurent": [[0, 2, 0], [1, 1, 0]]}\'.'},
    )
    b: Optional[str] = field(
        default=None,
        metadata={"help": "Symbol b, same literal format as a."},
    )
    pair: Optional[str] = field(
        default=None,
        metadata={"help": "JSON file holding the pair; values in it override the flags."},
    )
    sign: str = field(
        default=ANALYSIS_SIGN_DEFAULT,
        metadata={"help": "Operator T(a)+H(b), T(a)-H(b) or both. Defaults to 'both'.",
                  "choices": ["plus", "minus", "both"]},
    )
    n: int = field(
        default=TRUNCATION_N_DEFAULT,
        metadata={"help": "Finite-section size N; retries use 2N and 4N. Defaults to 64."},
    )
    p: float = field(
        default=PC_P_DEFAULT,
        metadata={"help": "Exponent p > 1 of the Hardy space in pc-check mode. Defaults to 2."},
    )
    p_sweep: Optional[List[float]] = field(
        default=None,
        metadata={"help": "Exponents swept in pc-check mode; overrides p."},
    )
    grid_size: int = field(
        default=PC_GRID_SIZE_DEFAULT,
        metadata={"help": "Size of the y-grid of the pc-check mode. Defaults to 257."},
    )
    json: bool = field(
        default=False,
        metadata={"help": "Print the report as JSON. Defaults to False"},
    )
    report: Optional[str] = field(
        default=None,
        metadata={"help": "Write the JSON report to this file as well."},
    )
    log_level: str = field(
        default="warning",
        metadata={"help": "Logger level. Defaults to 'warning'.",
                  "choices": ["debug", "info", "warning", "error", "critical"]},
    )
    wall_clock_breakdown: bool = field(
        default=False,
        metadata={"help": "Whether to log the time spent in each stage. Defaults to False"},
    )

    def __post_init__(self):
        if self.pair is None and (self.a is None or self.b is None):
            raise ValueError("either --pair or both --a and --b are required")
        if self.n < 1:
            raise ValueError(f"--n must be positive, got {self.n}")
        if self.grid_size < 2:
            raise ValueError(f"--grid_size must be at least 2, got {self.grid_size}")
        if self.p <= 1 or any(p <= 1 for p in self.p_sweep or ()):
            raise ValueError("exponents p must exceed 1")
