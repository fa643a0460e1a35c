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

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ..factorization.matching import _require_invertible, check_matching, subordinated_pair
from ..factorization.wiener_hopf import signature, winding_index
from ..symbols.calculus import circle_points, parse_sign
from ..symbols.rational import as_symbol
from ..runtime.config import CIRCLE_SAMPLES, MATCHING_TOL
from ..utils.logging import logger


class CoburnClass(Enum):
    """Operator families with a trivial kernel or a trivial cokernel."""
    MINUS_H_M1 = "T(a)-H(a/t)"
    PLUS_H_1 = "T(a)+H(at)"
    PLUS_H_0 = "T(a)+H(a)"
    MINUS_H_0 = "T(a)-H(a)"
    NONE = "none"


class CorollaryCase(Enum):
    PLUS = "plus"
    MINUS = "minus"
    BOTH = "both"


_CLASSES = {
    (-1, -1): CoburnClass.MINUS_H_M1,
    (1, 1): CoburnClass.PLUS_H_1,
    (0, 1): CoburnClass.PLUS_H_0,
    (0, -1): CoburnClass.MINUS_H_0,
}


@dataclass(frozen=True)
class CoburnVerdict:
    class_match: CoburnClass
    guaranteed_onesided: bool
    corollary_case: Optional[CorollaryCase] = None


def _monomial_ratio(a, b) -> Optional[int]:
    """``k`` with ``b = a t^k`` on the circle for ``k`` in {-1, 0, 1}, else None."""
    t = circle_points(CIRCLE_SAMPLES)
    av, bv = a(t), b(t)
    scale = float(np.max(np.abs(av)))
    for k in (-1, 0, 1):
        if np.max(np.abs(bv - av * t ** k)) <= MATCHING_TOL * scale:
            return k
    return None


def _corollary_case(a, b) -> Optional[CorollaryCase]:
    c, _ = subordinated_pair(a, b)
    kappa1 = -winding_index(c)
    if kappa1 == 0:
        return CorollaryCase.BOTH
    if abs(kappa1) != 1 or signature(c) != 1:
        return None
    return CorollaryCase.PLUS if kappa1 == 1 else CorollaryCase.MINUS


def coburn_classify(a, b, sign) -> CoburnVerdict:
    """
    Decide whether ``T(a) + sign H(b)`` is known to be one-sided invertible
    in the sense ``ker = 0`` or ``coker = 0``.

    Two independent routes are combined: the four families ``b = a t^k``
    and, for matching pairs, the conditions on ``ind T(c)`` and ``sigma(c)``.
    """
    sign = parse_sign(sign)
    a, b = as_symbol(a), as_symbol(b)
    _require_invertible(a, "a")

    k = None if b.is_zero() else _monomial_ratio(a, b)
    class_match = _CLASSES.get((k, sign), CoburnClass.NONE) if k is not None else CoburnClass.NONE

    case = None
    if not b.is_zero() and not b.degenerate_on_circle() and check_matching(a, b):
        case = _corollary_case(a, b)
    case_applies = case is CorollaryCase.BOTH or (case is not None and (case is CorollaryCase.PLUS) == (sign > 0))
    if not case_applies:
        case = None

    verdict = CoburnVerdict(class_match=class_match,
                            guaranteed_onesided=class_match is not CoburnClass.NONE or case is not None,
                            corollary_case=case)
    logger.debug(f"coburn: {verdict}")
    return verdict
