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

import numbers
from typing import Tuple

import numpy as np
from scipy import signal

from .laurent import LaurentPoly
from .roots import Roots, circle_distance, expand_roots, poly_from_roots, polynomial_roots
from ..runtime.config import DELTA_CIRC, REDUCE_TOL
from ..utils.errors import InvalidSymbol, PoleAtEvaluationPoint


def _cancel_common(zeros: Roots, poles: Roots):
    zeros = [list(z) for z in zeros]
    poles = [list(p) for p in poles]
    cancelled = False
    for z in zeros:
        for p in poles:
            if z[1] == 0 or p[1] == 0:
                continue
            if abs(z[0] - p[0]) <= REDUCE_TOL * max(1.0, abs(z[0])):
                k = min(z[1], p[1])
                z[1] -= k
                p[1] -= k
                cancelled = True
    keep = lambda roots: [(r, m) for r, m in roots if m > 0]
    return keep(zeros), keep(poles), cancelled


def power_series(num, den, count):
    """First ``count`` Taylor coefficients of ``num(t)/den(t)``, ``den[0] != 0``.

    Runs the linear recurrence on the denominator coefficients.
    """
    impulse = np.zeros(count, dtype=np.complex128)
    if count == 0:
        return impulse
    impulse[0] = 1.0
    return signal.lfilter(np.asarray(num, dtype=np.complex128),
                          np.asarray(den, dtype=np.complex128), impulse)


class RationalSymbol:
    """
    Quotient of two Laurent polynomials, kept in reduced normal form.

    The denominator is an ordinary monic polynomial with ``den(0) != 0``; the
    order at ``t = 0`` sits in ``num.low``. Numerator and denominator share
    no root (within ``REDUCE_TOL``). Zeros and poles are computed once at
    construction and exposed as ``zeros`` / ``poles`` (nonzero roots only).
    """
    __slots__ = ("num", "den", "_zeros", "_poles")

    def __init__(self, num=0.0, den=None):
        num = _as_laurent(num)
        den = LaurentPoly.constant(1.0) if den is None else _as_laurent(den)
        if den.is_zero():
            raise InvalidSymbol("denominator of a rational symbol must be nonzero")
        if num.is_zero():
            self._set(LaurentPoly(), LaurentPoly.constant(1.0), [], [])
            return
        shift = num.low - den.low
        nq, dq = num.coef, den.coef
        zeros, poles = polynomial_roots(nq), polynomial_roots(dq)
        zeros, poles, cancelled = _cancel_common(zeros, poles)
        if cancelled:
            nq = poly_from_roots(zeros, lead=nq[-1])
            dq = poly_from_roots(poles, lead=dq[-1])
        lead = dq[-1]
        self._set(LaurentPoly(nq / lead, low=shift), LaurentPoly(dq / lead), zeros, poles)

    def _set(self, num, den, zeros, poles):
        self.num = num
        self.den = den
        self._zeros = tuple(zeros)
        self._poles = tuple(poles)

    @classmethod
    def _from_parts(cls, num, den, zeros, poles):
        obj = cls.__new__(cls)
        RationalSymbol._set(obj, num, den, zeros, poles)
        return obj

    @classmethod
    def from_roots(cls, zeros: Roots, poles: Roots, lead=1.0, order_at_zero=0):
        """``lead * t**order_at_zero * prod(t - z) / prod(t - p)``; roots must be nonzero."""
        num = LaurentPoly(poly_from_roots(zeros, lead=lead), low=order_at_zero)
        den = LaurentPoly(poly_from_roots(poles))
        if not zeros or not poles:
            return cls._from_parts(num, den, list(zeros), list(poles))
        return cls(num, den)

    @property
    def zeros(self) -> Tuple[Tuple[complex, int], ...]:
        return self._zeros

    @property
    def poles(self) -> Tuple[Tuple[complex, int], ...]:
        return self._poles

    @property
    def order_at_zero(self):
        """Order of the zero (positive) or pole (negative) at ``t = 0``."""
        return self.num.low

    @property
    def leading(self):
        return complex(self.num.coef[-1]) if not self.num.is_zero() else 0j

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        return self.den.degree_span == 0

    def circle_distance(self):
        """Smallest relative distance of a zero or pole to the unit circle."""
        roots = expand_roots(self._zeros) + expand_roots(self._poles)
        return min((circle_distance(r) for r in roots), default=np.inf)

    def poles_on_circle(self, tol=DELTA_CIRC):
        return any(circle_distance(p) < tol for p, _ in self._poles)

    def degenerate_on_circle(self, tol=DELTA_CIRC):
        return self.is_zero() or self.circle_distance() < tol

    def __call__(self, t):
        return (self.num(t) / self.den(t))[()]

    def evaluate(self, t0):
        return rs_eval(self, t0)

    def __neg__(self):
        return RationalSymbol._from_parts(-self.num, self.den, self._zeros, self._poles)

    def __add__(self, other):
        other = as_symbol(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalSymbol(self.num + other.num, self.den)
        return RationalSymbol(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_symbol(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            if other == 0:
                return RationalSymbol()
            return RationalSymbol._from_parts(self.num * other, self.den, self._zeros, self._poles)
        other = as_symbol(other)
        if other is NotImplemented:
            return other
        return RationalSymbol(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero symbol")
        return RationalSymbol(self.den, self.num)

    def __truediv__(self, other):
        other = as_symbol(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_symbol(other) * self.inverse()

    def shift(self, k):
        """Multiply by ``t**k``."""
        return RationalSymbol._from_parts(self.num.shift(k), self.den, self._zeros, self._poles)

    def tilde(self):
        return RationalSymbol(self.num.tilde(), self.den.tilde())

    def conj_reflect(self):
        return RationalSymbol(self.num.conj_reflect(), self.den.conj_reflect())

    def taylor(self, count):
        """Taylor coefficients at 0; only meaningful for symbols analytic in the disc."""
        if self.is_zero():
            return np.zeros(count, dtype=np.complex128)
        if self.order_at_zero < 0:
            raise InvalidSymbol("symbol has a pole at t = 0")
        num = np.concatenate([np.zeros(self.order_at_zero, dtype=np.complex128), self.num.coef])
        return power_series(num, self.den.coef, count)

    def __repr__(self):
        if self.is_laurent():
            return f"RationalSymbol({self.num!r})"
        return f"RationalSymbol({self.num!r} / {self.den!r})"


class HardyFunction(RationalSymbol):
    """
    Rational function in the Hardy space: no pole in the closed unit disc,
    so its Fourier expansion carries only exponents ``>= 0``.
    """
    __slots__ = ()

    def __init__(self, num=0.0, den=None):
        super().__init__(num, den)
        self._validate()

    def _validate(self):
        if self.is_zero():
            return
        if self.order_at_zero < 0:
            raise InvalidSymbol(f"{self!r} has a pole at t = 0")
        for p, _ in self._poles:
            if abs(p) <= 1.0 + DELTA_CIRC:
                raise InvalidSymbol(f"{self!r} has the pole {p} in the closed unit disc")

    @classmethod
    def of(cls, x):
        if isinstance(x, HardyFunction):
            return x
        x = as_symbol(x)
        obj = cls._from_parts(x.num, x.den, x.zeros, x.poles)
        obj._validate()
        return obj

    @property
    def value(self) -> RationalSymbol:
        return RationalSymbol._from_parts(self.num, self.den, self._zeros, self._poles)

    def spectral_radius(self):
        """``max 1/|pole|``: geometric decay rate of the Taylor coefficients."""
        return max((1.0 / abs(p) for p, _ in self._poles), default=0.0)


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, numbers.Number):
        return LaurentPoly.constant(x)
    raise InvalidSymbol(f"cannot interpret {x!r} as a Laurent polynomial")


def as_symbol(x):
    if isinstance(x, RationalSymbol):
        return x
    if isinstance(x, (LaurentPoly, numbers.Number)):
        return RationalSymbol(x)
    return NotImplemented


def monomial(k, value=1.0) -> RationalSymbol:
    return RationalSymbol(LaurentPoly.monomial(k, value))


def constant(value) -> RationalSymbol:
    return RationalSymbol(value)


def tilde(x) -> RationalSymbol:
    """``x(1/t)``."""
    return as_symbol(x).tilde()


def conj_reflect(x) -> RationalSymbol:
    """Symbol whose circle values are the conjugates of those of ``x``."""
    return as_symbol(x).conj_reflect()


def flip(f) -> RationalSymbol:
    """``(Jf)(t) = t^-1 f(1/t)``; sends the coefficient at k to -k-1."""
    return as_symbol(f).tilde().shift(-1)


def rs_eval(x, t0) -> complex:
    x = as_symbol(x)
    t0 = complex(t0)
    scale = max(1.0, abs(t0))
    for p, _ in x.poles:
        if abs(t0 - p) < DELTA_CIRC * scale:
            raise PoleAtEvaluationPoint(f"{t0} is a pole of {x!r}")
    if t0 == 0 and x.order_at_zero < 0:
        raise PoleAtEvaluationPoint(f"0 is a pole of {x!r}")
    return complex(x(t0))
