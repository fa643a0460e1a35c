import numpy as np
import pytest

from TplusH.factorization.matching import matching_function, matching_pair
from TplusH.symbols.laurent import LaurentPoly
from TplusH.symbols.rational import RationalSymbol
from TplusH.symbols.roots import poly_from_roots


def _roots(rng, count, inside):
    lo, hi = (0.3, 0.6) if inside else (1.7, 3.0)
    radius = rng.uniform(lo, hi, size=count)
    angle = rng.uniform(0.0, 2 * np.pi, size=count)
    return [(complex(r * np.exp(1j * a)), 1) for r, a in zip(radius, angle)]


def random_poly(rng, n_inside, n_outside, low=0):
    roots = _roots(rng, n_inside, True) + _roots(rng, n_outside, False)
    lead = complex(rng.uniform(0.5, 2.0) * np.exp(1j * rng.uniform(0, 2 * np.pi)))
    return LaurentPoly(poly_from_roots(roots, lead=lead), low=low)


def random_symbol(rng, max_roots=2, max_shift=2):
    num = random_poly(rng, rng.integers(0, max_roots + 1), rng.integers(0, max_roots + 1),
                      low=int(rng.integers(-max_shift, max_shift + 1)))
    den = random_poly(rng, rng.integers(0, max_roots + 1), rng.integers(0, max_roots + 1))
    return RationalSymbol(num, den)


def random_hardy_outside(rng, degree=2):
    """Polynomial with every root outside the closed disc."""
    return RationalSymbol(random_poly(rng, 0, degree))


def random_matching_pair(rng, max_k=2):
    a = random_symbol(rng, max_roots=1, max_shift=1)
    h = random_symbol(rng, max_roots=1, max_shift=0)
    k = int(rng.integers(-max_k, max_k + 1))
    eps = 1 if rng.random() < 0.5 else -1
    return matching_pair(a, matching_function(h, k, eps))


@pytest.fixture
def rng():
    return np.random.default_rng(20260118)


@pytest.fixture
def symbols(rng):
    return [random_symbol(rng) for _ in range(8)]


@pytest.fixture
def matching_pairs(rng):
    return [random_matching_pair(rng) for _ in range(6)]
