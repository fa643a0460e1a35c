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
from typing import Tuple

import numpy as np

from .wiener_hopf import winding_index
from ..symbols.calculus import circle_points
from ..symbols.rational import RationalSymbol, as_symbol, conj_reflect, monomial, tilde
from ..runtime.config import CIRCLE_SAMPLES, DELTA_CIRC, MATCHING_TOL
from ..utils.errors import DegenerateSymbol, NotMatchingPair, SymbolDegenerateOnCircle
from ..utils.logging import logger


class Quadrant(Enum):
    """Sign pattern of the indices ``(kappa1, kappa2)``."""
    PP = "PP"
    NN = "NN"
    PN = "PN"
    NP = "NP"


def classify_quadrant(kappa1: int, kappa2: int) -> Quadrant:
    # (0, 0) lands in PP; the adjoint pair of such a pair is again (0, 0)
    if kappa1 >= 0 and kappa2 >= 0:
        return Quadrant.PP
    if kappa1 >= 0:
        return Quadrant.PN
    if kappa2 > 0:
        return Quadrant.NP
    return Quadrant.NN


@dataclass(frozen=True)
class MatchingAnalysis:
    a: RationalSymbol
    b: RationalSymbol
    c: RationalSymbol
    d: RationalSymbol
    kappa1: int
    kappa2: int
    fredholm_c: bool
    fredholm_d: bool
    quadrant: Quadrant

    @property
    def a_tilde_inverse(self) -> RationalSymbol:
        return tilde(self.a).inverse()


def _require_invertible(x: RationalSymbol, name: str):
    if x.is_zero():
        raise DegenerateSymbol(f"symbol {name} is zero")
    if x.circle_distance() < DELTA_CIRC:
        raise SymbolDegenerateOnCircle(f"symbol {name} = {x!r} is not invertible on the circle")


def check_matching(a, b) -> bool:
    """``a(t) a(1/t) = b(t) b(1/t)`` on circle samples, relative to ``max |a a~|``."""
    a, b = as_symbol(a), as_symbol(b)
    _require_invertible(a, "a")
    _require_invertible(b, "b")
    t = circle_points(CIRCLE_SAMPLES)
    lhs = a(t) * a(1.0 / t)
    rhs = b(t) * b(1.0 / t)
    scale = float(np.max(np.abs(lhs)))
    return bool(np.max(np.abs(lhs - rhs)) <= MATCHING_TOL * scale)


def _require_matching(a, b):
    if not check_matching(a, b):
        raise NotMatchingPair("not a matching pair: a(t) a(1/t) != b(t) b(1/t)")


def subordinated_pair(a, b, alternative=False) -> Tuple[RationalSymbol, RationalSymbol]:
    """
    ``(c, d) = (a / b, b / a~)``.

    With ``alternative=True`` the equivalent forms ``c = b~ / a~`` and
    ``d = a / b~`` are used; both agree for matching pairs.
    """
    a, b = as_symbol(a), as_symbol(b)
    if alternative:
        return tilde(b) / tilde(a), a / tilde(b)
    return a / b, b / tilde(a)


def analyze(a, b) -> MatchingAnalysis:
    a, b = as_symbol(a), as_symbol(b)
    _require_matching(a, b)
    c, d = subordinated_pair(a, b)
    kappa1 = -winding_index(c)
    kappa2 = -winding_index(d)
    quadrant = classify_quadrant(kappa1, kappa2)
    logger.debug(f"subordinated pair: kappa1={kappa1}, kappa2={kappa2}, quadrant={quadrant.value}")
    return MatchingAnalysis(a=a, b=b, c=c, d=d, kappa1=kappa1, kappa2=kappa2,
                            fredholm_c=True, fredholm_d=True, quadrant=quadrant)


def adjoint_pair(a, b) -> Tuple[RationalSymbol, RationalSymbol]:
    """Pair of the adjoint operator: ``(conj a, tilde(conj b))``."""
    _require_matching(a, b)
    return conj_reflect(a), tilde(conj_reflect(b))


def shift_pair(a, b, n: int) -> Tuple[RationalSymbol, RationalSymbol]:
    """``(a t^-n, b t^n)``; its subordinated pair is ``(c t^-2n, d)``."""
    if n < 0:
        raise ValueError(f"shift must be non-negative, got {n}")
    _require_matching(a, b)
    return as_symbol(a).shift(-n), as_symbol(b).shift(n)


def matching_function(h, k=0, eps=1) -> RationalSymbol:
    """``eps t^k h / h~``, a matching function for any circle-clear ``h``; ``eps = +-1``."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    h = as_symbol(h)
    return eps * (h / tilde(h)) * monomial(k)


def matching_pair(a, u) -> Tuple[RationalSymbol, RationalSymbol]:
    """``(a, a u)`` for a matching function ``u``."""
    a = as_symbol(a)
    return a, a * as_symbol(u)
