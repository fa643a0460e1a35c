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
from typing import List, Sequence, Tuple

import numpy as np
import torch
from numpy.polynomial import polynomial as P

from .laurent import LaurentPoly
from ..runtime.config import DELTA_CIRC, EPS_ROOT, MULTIPLE_ROOT_SCALE, ROOT_CLUSTER_TOL
from ..utils.errors import InvalidSymbol, NonConvergence, RootOnCircle

Roots = List[Tuple[complex, int]]


@dataclass(frozen=True)
class RootSplit:
    """
    Roots of the polynomial part of a Laurent polynomial, split by the circle.

    ``zero_order`` is the exponent of the monomial factor, so
    ``p = t**zero_order * q`` with ``q(0) != 0`` and the multiplicities of
    ``inside`` and ``outside`` add up to ``deg q``.
    """
    inside: Tuple[Tuple[complex, int], ...]
    outside: Tuple[Tuple[complex, int], ...]
    zero_order: int

    @property
    def count_inside(self):
        return sum(m for _, m in self.inside)

    @property
    def count_outside(self):
        return sum(m for _, m in self.outside)


def circle_distance(root):
    return abs(abs(root) - 1.0)


def _residual_scale(coef, r):
    return float(np.sum(np.abs(coef) * np.abs(r) ** np.arange(coef.size)))


def cluster_radius(multiplicity, tol=ROOT_CLUSTER_TOL):
    """
    Spread allowed for ``multiplicity`` eigenvalues that stand for one root.

    An m-fold root perturbs like ``eps ** (1 / m)`` under companion-matrix
    eigenvalues, so the radius widens with the multiplicity.
    """
    if multiplicity < 2:
        return 0.0
    return max(tol, MULTIPLE_ROOT_SCALE ** (1.0 / multiplicity))


def _is_multiple_root(coef, center):
    return abs(P.polyval(center, coef)) <= EPS_ROOT * _residual_scale(coef, center)


def cluster_roots(roots: Sequence[complex], tol=ROOT_CLUSTER_TOL, coef=None) -> Roots:
    """
    Group roots into (mean, multiplicity) pairs.

    Starting from the smallest remaining root, the largest group of its
    nearest neighbours whose members lie within
    ``cluster_radius(m) * max(1, |mean|)`` of the mean is taken. Groups wider
    than ``tol`` also need ``coef`` and a mean that is a root of it.
    """
    remaining = sorted((complex(r) for r in roots), key=lambda z: (abs(z), np.angle(z)))
    clusters: Roots = []
    while remaining:
        seed = remaining[0]
        nearest = sorted(remaining, key=lambda z: abs(z - seed))
        size = 1
        for m in range(len(nearest), 1, -1):
            center = complex(np.mean(nearest[:m]))
            spread = max(abs(r - center) for r in nearest[:m]) / max(1.0, abs(center))
            if spread > cluster_radius(m, tol):
                continue
            if spread <= tol or (coef is not None and _is_multiple_root(coef, center)):
                size = m
                break
        members = nearest[:size]
        clusters.append((complex(np.mean(members)), size))
        for r in members:
            remaining.remove(r)
    return clusters


def _polish(coef, r, multiplicity=1):
    """One Newton step on the ``multiplicity - 1``-th derivative, kept only if it helps."""
    inner = P.polyder(coef, multiplicity - 1) if multiplicity > 1 else coef
    outer = P.polyder(inner)
    value = P.polyval(r, inner)
    slope = P.polyval(r, outer)
    if slope == 0:
        return r
    candidate = r - value / slope
    if abs(P.polyval(candidate, inner)) < abs(value):
        return candidate
    return r


def polynomial_roots(coef) -> Roots:
    """
    Clustered roots of the ordinary polynomial ``sum coef[k] t^k``.

    Companion-matrix eigenvalues are clustered first; each cluster mean then
    gets one Newton polish, on ``q`` for a simple root and on ``q^(m-1)`` for
    an m-fold one. The residual contract is
    ``|q(r)| <= EPS_ROOT * sum |c_k| |r|^k``.
    """
    coef = np.asarray(coef, dtype=np.complex128)
    if coef.size < 2:
        return []
    if coef[-1] == 0:
        raise InvalidSymbol("leading coefficient must be nonzero")
    companion = torch.from_numpy(np.ascontiguousarray(P.polycompanion(coef)))
    raw = torch.linalg.eigvals(companion).numpy()
    polished = []
    for r, m in cluster_roots([complex(z) for z in raw], coef=coef):
        r = _polish(coef, r, m)
        if abs(P.polyval(r, coef)) > EPS_ROOT * _residual_scale(coef, r):
            raise NonConvergence(f"root {r} of multiplicity {m} misses the residual bound")
        polished.append((r, m))
    return polished


def expand_roots(roots: Roots) -> List[complex]:
    return [r for r, m in roots for _ in range(m)]


def poly_from_roots(roots: Roots, lead=1.0):
    """Coefficients, lowest first, of ``lead * prod (t - r)^m``."""
    flat = expand_roots(roots)
    if not flat:
        return np.array([lead], dtype=np.complex128)
    return lead * P.polyfromroots(flat).astype(np.complex128)


def poly_roots(p: LaurentPoly) -> RootSplit:
    """Split the roots of ``p`` by the unit circle; roots on it are an error."""
    if p.is_zero():
        raise InvalidSymbol("the zero polynomial has no root split")
    inside, outside = [], []
    for r, m in polynomial_roots(p.coef):
        if circle_distance(r) < DELTA_CIRC:
            raise RootOnCircle(f"root {r} lies on the unit circle")
        (inside if abs(r) < 1.0 else outside).append((r, m))
    return RootSplit(inside=tuple(inside), outside=tuple(outside), zero_order=p.low)
