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

from typing import List, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from .laurent import LaurentPoly
from .rational import HardyFunction, RationalSymbol, as_symbol, flip, power_series
from .roots import expand_roots
from ..runtime.config import CIRCLE_SAMPLES, DELTA_CIRC
from ..utils.errors import PoleOnCircle

_SIGNS = {
    "+": 1, "plus": 1, 1: 1,
    "-": -1, "minus": -1, -1: -1,
}


def parse_sign(sign) -> int:
    """Normalise ``'+'``, ``'plus'``, ``1`` (and the minus spellings) to +1 / -1."""
    try:
        return _SIGNS[sign]
    except (KeyError, TypeError):
        raise ValueError(f"sign must be one of '+', '-', 'plus', 'minus', 1, -1; got {sign!r}")


def sign_label(sign) -> str:
    return "+" if parse_sign(sign) > 0 else "-"


def circle_points(count=CIRCLE_SAMPLES):
    return np.exp(2j * np.pi * np.arange(count) / count)


def sup_norm(x, samples=CIRCLE_SAMPLES) -> float:
    x = as_symbol(x)
    if x.is_zero():
        return 0.0
    return float(np.max(np.abs(x(circle_points(samples)))))


def _check_circle(f: RationalSymbol):
    if f.poles_on_circle():
        raise PoleOnCircle(f"{f!r} has a pole on the unit circle")


def _shift_up(coef, k):
    return np.concatenate([np.zeros(k, dtype=np.complex128), coef])


def pole_split(f) -> Tuple[RationalSymbol, RationalSymbol]:
    """
    Riesz split ``f = Pf + Qf``.

    The denominator is factored into ``B_in`` (poles in the disc, including
    the monomial at 0) and ``B_out``. After removing the polynomial part,
    the remainder is split with the Bezout identity
    ``R = R_in B_out + R_out B_in``, ``deg R_in < deg B_in``,
    ``deg R_out < deg B_out``.
    """
    f = as_symbol(f)
    if f.is_zero():
        return RationalSymbol(), RationalSymbol()
    _check_circle(f)
    inside = [(p, m) for p, m in f.poles if abs(p) < 1.0]
    outside = [(p, m) for p, m in f.poles if abs(p) > 1.0]
    order = f.order_at_zero
    numer = f.num.coef
    b_in = P.polyfromroots(expand_roots(inside)).astype(np.complex128) if inside \
        else np.ones(1, dtype=np.complex128)
    b_out = P.polyfromroots(expand_roots(outside)).astype(np.complex128) if outside \
        else np.ones(1, dtype=np.complex128)
    if order < 0:
        b_in = _shift_up(b_in, -order)
    else:
        numer = _shift_up(numer, order)
    deg_in, deg_out = b_in.size - 1, b_out.size - 1
    if deg_in == 0:
        return f, RationalSymbol()

    full = P.polymul(b_in, b_out)
    quotient, remainder = P.polydiv(numer, full)
    size = deg_in + deg_out
    rhs = np.zeros(size, dtype=np.complex128)
    rhs[:min(size, remainder.size)] = remainder[:size]
    system = np.zeros((size, size), dtype=np.complex128)
    for i in range(deg_in):
        system[i:i + deg_out + 1, i] = b_out
    for j in range(deg_out):
        system[j:j + deg_in + 1, deg_in + j] = b_in
    solution = np.linalg.solve(system, rhs)
    r_in, r_out = solution[:deg_in], solution[deg_in:]

    plus_num = P.polyadd(P.polymul(quotient, b_out), r_out) if deg_out else quotient
    plus = RationalSymbol(LaurentPoly(plus_num), LaurentPoly(b_out))
    minus = RationalSymbol(LaurentPoly(r_in), LaurentPoly(b_in))
    return plus, minus


def riesz_p(f) -> RationalSymbol:
    return pole_split(f)[0]


def riesz_q(f) -> RationalSymbol:
    return pole_split(f)[1]


def _negative_coeffs(minus: RationalSymbol, count) -> np.ndarray:
    """Coefficients at ``t^-1 .. t^-count`` of a symbol with support <= -1."""
    if minus.is_zero() or count <= 0:
        return np.zeros(max(count, 0), dtype=np.complex128)
    # substitute t = 1/s: minus(1/s) = s^e rev(num)(s) / rev(den)(s)
    num, den = minus.num.coef, minus.den.coef
    offset = (den.size - 1) - (num.size - 1) - minus.order_at_zero
    series = power_series(num[::-1], den[::-1], max(count + 1 - offset, 0))
    out = np.zeros(count, dtype=np.complex128)
    for k in range(1, count + 1):
        i = k - offset
        if 0 <= i < series.size:
            out[k - 1] = series[i]
    return out


def fourier_coeffs(x, k_min: int, k_max: int) -> List[complex]:
    """Fourier coefficients ``x_k`` for ``k_min <= k <= k_max``, via the Riesz split."""
    if k_max < k_min:
        return []
    plus, minus = pole_split(x)
    out = np.zeros(k_max - k_min + 1, dtype=np.complex128)
    if k_max >= 0:
        pos = plus.taylor(k_max + 1)
        lo = max(k_min, 0)
        out[lo - k_min:] = pos[lo:k_max + 1]
    if k_min <= -1:
        neg = _negative_coeffs(minus, -k_min)
        for k in range(k_min, min(k_max, -1) + 1):
            out[k - k_min] = neg[-k - 1]
    return [complex(v) for v in out]


def apply_toeplitz(g, f) -> HardyFunction:
    """``T(g) f = P(g f)``."""
    f = HardyFunction.of(f)
    return HardyFunction.of(riesz_p(as_symbol(g) * f))


def apply_hankel(g, f) -> HardyFunction:
    """``H(g) f = P(g J f)``; ``QJf = Jf`` for Hardy ``f``."""
    f = HardyFunction.of(f)
    return HardyFunction.of(riesz_p(as_symbol(g) * flip(f)))


def apply_jqgp(g, f) -> HardyFunction:
    """``J Q (g f)`` for Hardy ``f``."""
    f = HardyFunction.of(f)
    return HardyFunction.of(flip(riesz_q(as_symbol(g) * f)))


def apply_operator(a, b, sign, f) -> HardyFunction:
    """``(T(a) + sign H(b)) f``."""
    sign = parse_sign(sign)
    return HardyFunction.of(apply_toeplitz(a, f) + sign * apply_hankel(b, f))
