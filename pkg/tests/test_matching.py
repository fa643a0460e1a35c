import pytest

from TplusH.factorization.matching import (
    Quadrant,
    adjoint_pair,
    analyze,
    check_matching,
    classify_quadrant,
    matching_function,
    matching_pair,
    shift_pair,
    subordinated_pair,
)
from TplusH.factorization.wiener_hopf import is_matching_function
from TplusH.symbols.calculus import sup_norm
from TplusH.symbols.rational import RationalSymbol, monomial
from TplusH.utils.errors import DegenerateSymbol, NotMatchingPair, SymbolDegenerateOnCircle

t = monomial(1)


@pytest.mark.parametrize("kappa1,kappa2,expected", [
    (0, 0, Quadrant.PP),
    (2, 1, Quadrant.PP),
    (1, -1, Quadrant.PN),
    (-1, 1, Quadrant.NP),
    (-2, 0, Quadrant.NN),
    (-1, -3, Quadrant.NN),
])
def test_classify_quadrant(kappa1, kappa2, expected):
    assert classify_quadrant(kappa1, kappa2) is expected


def test_invertible_example():
    analysis = analyze(2 + t, 2 + monomial(-1))
    assert (analysis.kappa1, analysis.kappa2) == (0, 0)
    assert analysis.quadrant is Quadrant.PP


def test_blaschke_example():
    b = (t - 0.5) / (0.5 * t - 1)
    analysis = analyze(1, b)
    assert (analysis.kappa1, analysis.kappa2) == (1, -1)
    assert analysis.quadrant is Quadrant.PN


def test_non_matching_pair():
    assert not check_matching(2 + t, 1)
    with pytest.raises(NotMatchingPair, match="not a matching pair"):
        analyze(2 + t, 1)


def test_degenerate_input():
    with pytest.raises(DegenerateSymbol):
        analyze(RationalSymbol(), t)
    with pytest.raises(SymbolDegenerateOnCircle):
        analyze(t - 1, t - 1)


def test_subordinated_functions_are_matching(matching_pairs):
    for a, b in matching_pairs:
        c, d = subordinated_pair(a, b)
        assert is_matching_function(c)
        assert is_matching_function(d)
        c_alt, d_alt = subordinated_pair(a, b, alternative=True)
        assert sup_norm(c - c_alt) < 1e-8 * max(1.0, sup_norm(c))
        assert sup_norm(d - d_alt) < 1e-8 * max(1.0, sup_norm(d))


def test_adjoint_pair_swaps_and_negates_indices(matching_pairs):
    for a, b in matching_pairs:
        analysis = analyze(a, b)
        adjoint = analyze(*adjoint_pair(a, b))
        assert (adjoint.kappa1, adjoint.kappa2) == (-analysis.kappa2, -analysis.kappa1)


def test_adjoint_of_real_blaschke_pair_is_itself():
    b = (t - 0.5) / (0.5 * t - 1)
    a_star, b_star = adjoint_pair(1, b)
    assert sup_norm(a_star - 1) < 1e-12
    assert sup_norm(b_star - b) < 1e-12


@pytest.mark.parametrize("n", [0, 1, 3])
def test_shift_pair_subordinated_pair(matching_pairs, n):
    a, b = matching_pairs[0]
    c, d = subordinated_pair(a, b)
    c_n, d_n = subordinated_pair(*shift_pair(a, b, n))
    assert sup_norm(c_n - c.shift(-2 * n)) < 1e-8 * max(1.0, sup_norm(c))
    assert sup_norm(d_n - d) < 1e-8 * max(1.0, sup_norm(d))
    assert analyze(*shift_pair(a, b, n)).kappa1 == analyze(a, b).kappa1 + 2 * n


def test_shift_pair_rejects_negative_shift():
    with pytest.raises(ValueError):
        shift_pair(1, 1, -1)


def test_generated_pairs_match():
    u = matching_function(2 + t, k=1, eps=-1)
    assert is_matching_function(u)
    a, b = matching_pair(3 + monomial(-1), u)
    assert check_matching(a, b)
    with pytest.raises(ValueError):
        matching_function(2 + t, eps=2)
