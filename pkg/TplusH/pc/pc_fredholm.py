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

"""
Fredholm test for ``T(a) + H(b)`` on ``H^p`` with piecewise-constant symbols.

The operator is Fredholm iff the 2x2 symbol matrix

    ( a(t+0) nu + a(t-0) (1 - nu)          (b(t+0) - b(t-0)) / 2i * h   )
    ( (b(t'-0) - b(t'+0)) / 2i * h         a(t'+0) nu + a(t'-0) (1 - nu) )

(``t' = conj t``, ``nu = nu_p(y)``, ``h = h_p(y)``) is invertible for ``t`` in
the open upper half-circle and ``y`` on the extended real line, and the scalar
``a(t+0) nu + a(t-0) (1 - nu) + t (b(t+0) - b(t-0)) / 2 * h`` does not vanish
at ``t = +-1``.
"""

import bisect
import math
import numbers
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from ..runtime.config import EPS_PC, PC_GRID_SIZE_DEFAULT, PC_REFINE_XATOL
from ..utils.errors import InvalidSymbol
from ..utils.logging import logger

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PCSymbol:
    """
    Piecewise-constant symbol: ``arcs[i] = (start, value)`` holds on
    ``[start_i, start_{i+1})``, the last arc wrapping around to the first.
    """
    arcs: Tuple[Tuple[float, complex], ...]

    def __post_init__(self):
        if not self.arcs:
            raise InvalidSymbol("a piecewise-constant symbol needs at least one arc")
        previous = -1.0
        for start, value in self.arcs:
            if not (0.0 <= start < TWO_PI):
                raise InvalidSymbol(f"arc start {start} outside [0, 2pi)")
            if start <= previous:
                raise InvalidSymbol("arc starts must be strictly increasing")
            if not np.isfinite(complex(value)):
                raise InvalidSymbol(f"non-finite arc value {value}")
            previous = start

    @classmethod
    def constant(cls, value):
        return cls(((0.0, complex(value)),))

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or set(obj) != {"arcs"} or not isinstance(obj["arcs"], list):
            raise InvalidSymbol('piecewise-constant literal must be {"arcs": [[angle, re, im], ...]}')
        arcs = []
        for entry in obj["arcs"]:
            if (not isinstance(entry, list) or len(entry) != 3
                    or not all(isinstance(v, numbers.Real) and not isinstance(v, bool) for v in entry)):
                raise InvalidSymbol(f"malformed arc {entry!r}")
            arcs.append((float(entry[0]), complex(entry[1], entry[2])))
        return cls(tuple(arcs))

    def to_json(self):
        return {"arcs": [[start, value.real, value.imag] for start, value in self.arcs]}

    @property
    def starts(self) -> List[float]:
        return [start for start, _ in self.arcs]

    def limits(self, angle) -> Tuple[complex, complex]:
        """``(value(t+0), value(t-0))`` at ``t = exp(i angle)``."""
        angle = angle % TWO_PI
        starts = self.starts
        after = bisect.bisect_right(starts, angle) - 1
        before = bisect.bisect_left(starts, angle) - 1
        return self.arcs[after][1], self.arcs[before][1]

    def jump_angles(self) -> List[float]:
        values = [value for _, value in self.arcs]
        return [start for i, (start, value) in enumerate(self.arcs) if value != values[i - 1]]

    def arc_midpoints(self) -> List[float]:
        starts = self.starts
        ends = starts[1:] + [starts[0] + TWO_PI]
        return [((s + e) / 2.0) % TWO_PI for s, e in zip(starts, ends)]

    def negated(self):
        return PCSymbol(tuple((start, -value) for start, value in self.arcs))

    def has_zero_value(self):
        return any(value == 0 for _, value in self.arcs)


def _z(y, p):
    return math.pi * (np.asarray(y, dtype=np.float64) + 1j / p)


def nu_p_grid(y, p):
    """``(1 + coth(pi (y + i/p))) / 2``, elementwise, with limits 1 and 0 at +-inf."""
    y = np.asarray(y, dtype=np.float64)
    out = np.empty(y.shape, dtype=np.complex128)
    upper = y >= 0
    with np.errstate(over="ignore", invalid="ignore"):
        w = np.exp(-2.0 * _z(np.where(upper, y, 0.0), p))
        out[upper] = (1.0 / (1.0 - w))[upper]
        w = np.exp(2.0 * _z(np.where(upper, 0.0, y), p))
        out[~upper] = (-w / (1.0 - w))[~upper]
    out[y == np.inf] = 1.0
    out[y == -np.inf] = 0.0
    return out


def h_p_grid(y, p):
    """``1 / sinh(pi (y + i/p))``, elementwise, vanishing at +-inf."""
    y = np.asarray(y, dtype=np.float64)
    out = np.empty(y.shape, dtype=np.complex128)
    upper = y >= 0
    with np.errstate(over="ignore", invalid="ignore"):
        e = np.exp(-_z(np.where(upper, y, 0.0), p))
        out[upper] = (2.0 * e / (1.0 - e * e))[upper]
        e = np.exp(_z(np.where(upper, 0.0, y), p))
        out[~upper] = (-2.0 * e / (1.0 - e * e))[~upper]
    out[np.isinf(y)] = 0.0
    return out


def nu_p(y, p) -> complex:
    if p <= 1:
        raise ValueError(f"p must exceed 1, got {p}")
    return complex(nu_p_grid(np.array([y]), p)[0])


def h_p(y, p) -> complex:
    if p <= 1:
        raise ValueError(f"p must exceed 1, got {p}")
    return complex(h_p_grid(np.array([y]), p)[0])


def y_grid(grid_size) -> Tuple[np.ndarray, np.ndarray]:
    """Tangent-stretched grid: ``(s, tan s)`` on ``[-pi/2, pi/2]`` with the ends at ``-+inf``."""
    s = (np.arange(grid_size) / (grid_size - 1) - 0.5) * math.pi
    y = np.tan(s)
    y[0], y[-1] = -np.inf, np.inf
    if grid_size % 2:
        y[grid_size // 2] = 0.0
    return s, y


def _y_of(s):
    if s <= -math.pi / 2:
        return -np.inf
    if s >= math.pi / 2:
        return np.inf
    return math.tan(s)


@dataclass(frozen=True)
class PCFredholmReport:
    p: float
    is_fredholm: bool
    min_matrix_det_modulus: float
    min_scalar_modulus: float
    witnesses: Tuple[Tuple[float, float], ...]
    critical_candidate: bool = False


def _matrix_points(a: PCSymbol, b: PCSymbol) -> List[float]:
    """Angles in ``(0, pi)``: conjugate-folded jumps plus one point inside every arc."""
    points = set()
    for angle in a.jump_angles() + b.jump_angles():
        folded = angle if angle <= math.pi else TWO_PI - angle
        if 0.0 < folded < math.pi:
            points.add(folded)
    for angle in a.arc_midpoints() + b.arc_midpoints():
        folded = angle if angle <= math.pi else TWO_PI - angle
        points.add(folded if 0.0 < folded < math.pi else math.pi / 2)
    return sorted(points)


def _det_modulus(a: PCSymbol, b: PCSymbol, angle, p):
    def curve(y):
        nu, h = nu_p_grid(y, p), h_p_grid(y, p)
        a_plus, a_minus = a.limits(angle)
        b_plus, b_minus = b.limits(angle)
        ac_plus, ac_minus = a.limits(-angle)
        bc_plus, bc_minus = b.limits(-angle)
        m11 = a_plus * nu + a_minus * (1.0 - nu)
        m22 = ac_plus * nu + ac_minus * (1.0 - nu)
        m12 = (b_plus - b_minus) / 2j * h
        m21 = (bc_minus - bc_plus) / 2j * h
        return np.abs(m11 * m22 - m12 * m21)
    return curve


def _scalar_modulus(a: PCSymbol, b: PCSymbol, t, p):
    angle = 0.0 if t > 0 else math.pi

    def curve(y):
        nu, h = nu_p_grid(y, p), h_p_grid(y, p)
        a_plus, a_minus = a.limits(angle)
        b_plus, b_minus = b.limits(angle)
        return np.abs(a_plus * nu + a_minus * (1.0 - nu) + t * (b_plus - b_minus) / 2.0 * h)
    return curve


def _minimize(curve, s, y) -> Tuple[float, float]:
    """
    Grid minimum of ``curve`` refined over the neighbouring grid cells.

    The squared modulus is minimised: it is smooth at a zero, where the
    modulus itself has a kink.
    """
    values = curve(y)
    k = int(np.argmin(values))
    best, best_y = float(values[k]), float(y[k])
    lo, hi = s[max(k - 1, 0)], s[min(k + 1, s.size - 1)]
    if hi > lo:
        result = minimize_scalar(lambda x: float(curve(np.array([_y_of(x)]))[0]) ** 2,
                                 bounds=(lo, hi), method="bounded",
                                 options={"xatol": PC_REFINE_XATOL})
        refined = math.sqrt(max(float(result.fun), 0.0))
        if refined < best:
            best, best_y = refined, _y_of(result.x)
    return best, best_y


def pc_fredholm_test(a: PCSymbol, b: PCSymbol, p, grid_size=PC_GRID_SIZE_DEFAULT,
                     require_invertible=True) -> PCFredholmReport:
    if p <= 1:
        raise ValueError(f"p must exceed 1, got {p}")
    if grid_size < 2:
        raise ValueError(f"grid_size must be at least 2, got {grid_size}")
    if require_invertible and a.has_zero_value():
        raise InvalidSymbol("symbol a takes the value 0 on an arc")
    s, y = y_grid(grid_size)

    det_min, det_witness = np.inf, None
    for angle in _matrix_points(a, b):
        value, at = _minimize(_det_modulus(a, b, angle, p), s, y)
        if value < det_min:
            det_min, det_witness = value, (angle, at)

    scalar_min, scalar_witness = np.inf, None
    for t in (1.0, -1.0):
        value, at = _minimize(_scalar_modulus(a, b, t, p), s, y)
        if value < scalar_min:
            scalar_min, scalar_witness = value, (0.0 if t > 0 else math.pi, at)

    report = PCFredholmReport(p=float(p),
                              is_fredholm=bool(det_min > EPS_PC and scalar_min > EPS_PC),
                              min_matrix_det_modulus=float(det_min),
                              min_scalar_modulus=float(scalar_min),
                              witnesses=(det_witness, scalar_witness))
    logger.debug(f"pc test p={p}: det {det_min:.3e}, scalar {scalar_min:.3e}")
    return report


def pc_p_sweep(a: PCSymbol, b: PCSymbol, p_list: Sequence[float],
               grid_size=PC_GRID_SIZE_DEFAULT) -> List[PCFredholmReport]:
    """One report per ``p``; a report whose verdict differs from its predecessor is a critical candidate."""
    reports = []
    previous: Optional[PCFredholmReport] = None
    for p in p_list:
        report = pc_fredholm_test(a, b, p, grid_size)
        if previous is not None and previous.is_fredholm != report.is_fredholm:
            report = replace(report, critical_candidate=True)
            logger.info(f"verdict changes between p={previous.p} and p={report.p}")
        reports.append(report)
        previous = report
    return reports
