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

import logging
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from ..symbols.calculus import circle_points
from ..symbols.laurent import LaurentPoly
from ..symbols.rational import RationalSymbol, as_symbol, rs_eval
from ..symbols.roots import poly_from_roots
from ..runtime.config import (
    CIRCLE_SAMPLES,
    DELTA_CIRC,
    MATCHING_TOL,
    RECONSTRUCT_SAMPLES,
    RECONSTRUCT_TOL,
    SIGNATURE_GUARD,
    SIGNATURE_IDENTITY_TOL,
    WINDING_RETRY_FACTOR,
    WINDING_SAMPLES,
)
from ..utils.errors import (
    NonConvergence,
    NotMatchingFunction,
    SignatureGuardFailed,
    SymbolDegenerateOnCircle,
)
from ..utils.logging import logger, should_log_le


@dataclass(frozen=True)
class WHFactorization:
    """
    ``g = g_minus * t**index_n * g_plus`` with ``g_minus(inf) = 1``.

    ``g_minus`` and its inverse are analytic outside the open disc,
    ``g_plus`` and its inverse inside the closed disc. ``ind T(g) = -index_n``.
    ``signature`` is ``g_plus(0)`` rounded to +-1 and is only set for matching
    functions.
    """
    g_minus: RationalSymbol
    index_n: int
    g_plus: RationalSymbol
    signature: Optional[int] = None

    @property
    def toeplitz_index(self):
        return -self.index_n

    def reconstruct(self) -> RationalSymbol:
        return (self.g_minus * self.g_plus).shift(self.index_n)


def _require_circle_clear(g: RationalSymbol):
    if g.is_zero():
        raise SymbolDegenerateOnCircle("the zero symbol is not invertible")
    if g.circle_distance() < DELTA_CIRC:
        raise SymbolDegenerateOnCircle(f"{g!r} has a zero or pole on the unit circle")


def argument_winding(g, samples=WINDING_SAMPLES) -> int:
    """Discrete argument principle: winding of ``g`` around 0 along the circle."""
    values = as_symbol(g)(circle_points(samples))
    increments = np.angle(np.roll(values, -1) / values)
    return int(np.rint(increments.sum() / (2 * np.pi)))


def _count(roots, inside):
    return sum(m for r, m in roots if (abs(r) < 1.0) == inside)


def winding_index(g) -> int:
    """``n`` with ``ind T(g) = -n``: zeros minus poles in the disc, order at 0 included."""
    g = as_symbol(g)
    _require_circle_clear(g)
    n = g.order_at_zero + _count(g.zeros, True) - _count(g.poles, True)
    samples = WINDING_SAMPLES
    for _ in range(2):
        if argument_winding(g, samples) == n:
            return n
        samples *= WINDING_RETRY_FACTOR
    raise NonConvergence(f"winding cross-check failed for {g!r}: root count gives {n}")


def factorize(g) -> WHFactorization:
    g = as_symbol(g)
    n = winding_index(g)
    z_in = [(r, m) for r, m in g.zeros if abs(r) < 1.0]
    z_out = [(r, m) for r, m in g.zeros if abs(r) > 1.0]
    p_in = [(r, m) for r, m in g.poles if abs(r) < 1.0]
    p_out = [(r, m) for r, m in g.poles if abs(r) > 1.0]

    # prod (t - z) = t^k prod (1 - z/t) for the factors inside
    k_z, k_p = sum(m for _, m in z_in), sum(m for _, m in p_in)
    g_minus = RationalSymbol(LaurentPoly(poly_from_roots(z_in), low=-k_z),
                             LaurentPoly(poly_from_roots(p_in), low=-k_p))
    g_plus = RationalSymbol(LaurentPoly(poly_from_roots(z_out, lead=g.leading)),
                            LaurentPoly(poly_from_roots(p_out)))
    fac = WHFactorization(g_minus=g_minus, index_n=n, g_plus=g_plus)

    t = circle_points(RECONSTRUCT_SAMPLES)
    expected = g(t)
    error = np.abs(fac.reconstruct()(t) - expected)
    if np.any(error > RECONSTRUCT_TOL * np.maximum(1.0, np.abs(expected))):
        raise NonConvergence(f"factorization of {g!r} does not reconstruct the symbol")
    if should_log_le("debug"):
        logger.debug(f"factorized {g!r}: n={n}, g_minus={g_minus!r}, g_plus={g_plus!r}")
    return fac


def is_matching_function(g, samples=CIRCLE_SAMPLES, tol=MATCHING_TOL) -> bool:
    """``g(t) g(1/t) = 1`` on the circle."""
    g = as_symbol(g)
    if g.is_zero():
        return False
    t = circle_points(samples)
    return bool(np.max(np.abs(g(t) * g(1.0 / t) - 1.0)) <= tol)


def factorize_matching(g) -> WHFactorization:
    """Factorization of a matching function together with its signature."""
    g = as_symbol(g)
    if not is_matching_function(g):
        raise NotMatchingFunction(f"{g!r} does not satisfy g(t) g(1/t) = 1")
    fac = factorize(g)
    at_zero = rs_eval(fac.g_plus, 0.0)
    sigma = 1 if at_zero.real >= 0 else -1
    if abs(at_zero - sigma) > SIGNATURE_GUARD:
        raise SignatureGuardFailed(f"g_plus(0) = {at_zero} is not +-1")

    t = circle_points(RECONSTRUCT_SAMPLES)
    g_plus = fac.g_plus(t)
    mirrored = sigma / fac.g_minus(1.0 / t)
    if np.any(np.abs(g_plus - mirrored) > SIGNATURE_IDENTITY_TOL * np.maximum(1.0, np.abs(g_plus))):
        raise SignatureGuardFailed(f"g_plus != sigma / tilde(g_minus) for {g!r}")
    return replace(fac, signature=sigma)


def signature(g) -> int:
    return factorize_matching(g).signature


def signature_point_check(g) -> Optional[int]:
    """
    Independent prediction of the signature from ``g(1)``.

    Only valid when ``T(g)`` is invertible; returns ``None`` otherwise.
    """
    g = as_symbol(g)
    if not is_matching_function(g):
        raise NotMatchingFunction(f"{g!r} does not satisfy g(t) g(1/t) = 1")
    n = winding_index(g)
    if n != 0:
        logger.log(logging.DEBUG, f"point check skipped, winding {n} != 0")
        return None
    return 1 if rs_eval(g, 1.0).real > 0 else -1
