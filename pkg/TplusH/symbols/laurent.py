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
import operator
from typing import Dict, Mapping

import numpy as np
from numpy.polynomial import polynomial as P

from ..runtime.config import COEFF_TRIM_TOL
from ..utils.errors import InvalidSymbol


class LaurentPoly:
    """
    Finitely supported Fourier series ``sum_k c_k t^k`` on the unit circle.

    Stored densely: ``coef[i]`` multiplies ``t**(low + i)``. Both end
    coefficients are nonzero; the zero polynomial has no coefficients.
    Instances are immutable.

    >>> LaurentPoly([2, 1]).coeffs
    {0: (2+0j), 1: (1+0j)}
    >>> (LaurentPoly.monomial(1) * LaurentPoly.monomial(-1)).coeffs
    {0: (1+0j)}
    """
    __slots__ = ("_low", "_coef")

    def __init__(self, coef=(), low=0):
        coef = np.array(coef, dtype=np.complex128).ravel()
        if not np.all(np.isfinite(coef)):
            raise InvalidSymbol("Laurent coefficients must be finite")
        low = int(low)
        mags = np.abs(coef)
        if coef.size and mags.max() > 0:
            keep = np.nonzero(mags > COEFF_TRIM_TOL * mags.max())[0]
            first, last = keep[0], keep[-1]
            coef = coef[first:last + 1]
            low += int(first)
        else:
            coef = np.zeros(0, dtype=np.complex128)
            low = 0
        coef.setflags(write=False)
        self._coef = coef
        self._low = low

    @classmethod
    def monomial(cls, k, value=1.0):
        return cls([value], low=k)

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, complex]):
        if not coeffs:
            return cls()
        low = min(coeffs)
        dense = np.zeros(max(coeffs) - low + 1, dtype=np.complex128)
        for k, v in coeffs.items():
            dense[k - low] += v
        return cls(dense, low=low)

    @property
    def low(self):
        return self._low

    @property
    def high(self):
        return self._low + self._coef.size - 1

    @property
    def coef(self):
        return self._coef

    @property
    def degree_span(self):
        return max(self._coef.size - 1, 0)

    @property
    def coeffs(self) -> Dict[int, complex]:
        return {self._low + i: complex(c) for i, c in enumerate(self._coef) if c != 0}

    def is_zero(self):
        return self._coef.size == 0

    def __getitem__(self, k):
        i = k - self._low
        if 0 <= i < self._coef.size:
            return complex(self._coef[i])
        return 0j

    def __call__(self, t):
        t = np.asarray(t, dtype=np.complex128)
        if self.is_zero():
            return np.zeros_like(t)[()]
        return (t ** self._low * P.polyval(t, self._coef))[()]

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, numbers.Number):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self._low, other._low)
        high = max(self.high, other.high)
        dense = np.zeros(high - low + 1, dtype=np.complex128)
        dense[self._low - low:self.high - low + 1] += self._coef
        dense[other._low - low:other.high - low + 1] += other._coef
        return LaurentPoly(dense, low=low)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(-self._coef, low=self._low)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return LaurentPoly(self._coef * other, low=self._low)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        return LaurentPoly(np.convolve(self._coef, other._coef), low=self._low + other._low)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._low == other._low and np.array_equal(self._coef, other._coef)

    def __hash__(self):
        return hash((self._low, self._coef.tobytes()))

    def allclose(self, other, tol=1e-12):
        diff = self - other
        return diff.is_zero() or float(np.abs(diff.coef).max()) <= tol

    def shift(self, k):
        """Multiply by ``t**k``."""
        return LaurentPoly(self._coef, low=self._low + k)

    def tilde(self):
        """``t -> 1/t``: exponent k becomes -k."""
        return LaurentPoly(self._coef[::-1], low=-self.high) if not self.is_zero() else self

    def conj_reflect(self):
        """Pointwise conjugate on the circle: conjugated coefficients, negated exponents."""
        return LaurentPoly(np.conj(self._coef[::-1]), low=-self.high) if not self.is_zero() else self

    def __repr__(self):
        terms = ", ".join(f"{k}: {v:.6g}" for k, v in self.coeffs.items())
        return f"LaurentPoly({{{terms}}})"


_LP_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
}


def lp_arith(x: LaurentPoly, y: LaurentPoly, op: str) -> LaurentPoly:
    if op not in _LP_OPS:
        raise ValueError(f"unknown Laurent operation {op!r}, expected one of {sorted(_LP_OPS)}")
    return _LP_OPS[op](x, y)
