import numpy as np
import pytest

from TplusH.symbols.calculus import (
    apply_hankel,
    apply_operator,
    apply_toeplitz,
    fourier_coeffs,
    parse_sign,
    pole_split,
    riesz_p,
    riesz_q,
    sup_norm,
)
from TplusH.symbols.laurent import LaurentPoly
from TplusH.symbols.literal import parse_symbol, symbol_literal
from TplusH.symbols.rational import (
    HardyFunction,
    RationalSymbol,
    flip,
    monomial,
    rs_eval,
    tilde,
)
from TplusH.symbols.roots import cluster_roots, poly_roots
from TplusH.utils.errors import InvalidSymbol, PoleAtEvaluationPoint, PoleOnCircle, RootOnCircle

from conftest import random_hardy_outside, random_poly, random_symbol

t = monomial(1)


def close(x, y, tol=1e-9):
    return sup_norm(x - y) <= tol


def test_normal_form_cancels_common_roots():
    x = RationalSymbol(LaurentPoly([2, -3, 1]), LaurentPoly([-1, 1]))   # (t-1)(t-2)/(t-1)
    assert x.is_laurent()
    assert x.num.coeffs == pytest.approx({0: -2, 1: 1})


def test_inverse_product_is_one():
    x = 1 / (t - 2)
    assert close(x * (t - 2), RationalSymbol(1.0))


def test_pole_and_zero_bookkeeping():
    x = (t - 0.5) * monomial(-3) / (t - 3)
    assert x.order_at_zero == -3
    assert [r for r, _ in x.zeros] == pytest.approx([0.5])
    assert [r for r, _ in x.poles] == pytest.approx([3.0])


def test_hardy_validation():
    HardyFunction.of(1 / (t - 2))
    with pytest.raises(InvalidSymbol):
        HardyFunction.of(1 / (t - 0.5))
    with pytest.raises(InvalidSymbol):
        HardyFunction.of(monomial(-2))


def test_taylor_geometric_series():
    f = HardyFunction.of(1 / (t - 2))
    assert np.allclose(f.taylor(3), [-0.5, -0.25, -0.125])
    assert np.allclose(HardyFunction.of(1 + t).taylor(4), [1, 1, 0, 0])
    assert np.allclose(HardyFunction.of(RationalSymbol()).taylor(3), 0)


def test_flip_sends_k_to_minus_k_minus_one():
    assert flip(t * t).num.coeffs == {-3: 1 + 0j}
    assert flip(RationalSymbol(1.0)).num.coeffs == {-1: 1 + 0j}


def test_rs_eval_at_pole():
    with pytest.raises(PoleAtEvaluationPoint):
        rs_eval(1 / (t - 2), 2.0)
    with pytest.raises(PoleAtEvaluationPoint):
        rs_eval(monomial(-2), 0.0)
    assert rs_eval(1 / (t - 2), 0.0) == pytest.approx(-0.5)


def test_poly_roots_split():
    p = LaurentPoly([1.0, -2.5, 1.0], low=1)     # t (t - 1/2)(t - 2)
    split = poly_roots(p)
    assert split.zero_order == 1
    assert [r for r, _ in split.inside] == pytest.approx([0.5])
    assert [r for r, _ in split.outside] == pytest.approx([2.0])
    with pytest.raises(RootOnCircle):
        poly_roots(LaurentPoly([-1.0, 1.0]))


def test_double_roots_are_clustered():
    p = LaurentPoly([4.0, -4.0, 1.0])           # (t - 2)^2
    split = poly_roots(p)
    assert len(split.outside) == 1
    assert split.outside[0][1] == 2


def test_riesz_split_of_laurent_polynomial():
    f = RationalSymbol(LaurentPoly([1, 0, 3, 1], low=-2))   # t^-2 + 3 + t
    plus, minus = pole_split(f)
    assert close(plus, 3 + t)
    assert close(minus, monomial(-2))


def test_riesz_split_of_rational_symbol():
    f = 1 / (t - 0.5) + 1 / (t - 3) + monomial(-1) + t
    plus, minus = riesz_p(f), riesz_q(f)
    assert close(plus + minus, f)
    assert close(plus, 1 / (t - 3) + t)
    assert close(minus, 1 / (t - 0.5) + monomial(-1))


def test_riesz_rejects_pole_on_circle():
    with pytest.raises(PoleOnCircle):
        riesz_p(1 / (t - 1))


def test_fourier_coefficients():
    # 1/(t - 1/2) = sum_{k>=1} 2^{1-k} t^-k
    coeffs = fourier_coeffs(1 / (t - 0.5), -3, 1)
    assert np.allclose(coeffs, [0.25, 0.5, 1.0, 0.0, 0.0])
    assert np.allclose(fourier_coeffs(2 + t, -1, 2), [0, 2, 1, 0])
    assert fourier_coeffs(t, 2, 1) == []


def test_toeplitz_and_hankel_application():
    one = HardyFunction.of(1.0)
    assert close(apply_hankel(t, one), RationalSymbol(1.0))
    assert close(apply_toeplitz(monomial(-1), one), RationalSymbol())
    a = 2 + t
    # (T(a) - H(at)) 1 = P(a) - P(a) = 0
    assert sup_norm(apply_operator(a, a * t, "-", one)) <= 1e-12


def test_product_identities():
    a1 = 2 + t + monomial(-1)
    a2 = 1 / (t - 3) + monomial(-2)
    f = HardyFunction.of(1 / (t - 2))
    lhs = apply_toeplitz(a1 * a2, f)
    rhs = apply_toeplitz(a1, apply_toeplitz(a2, f)) + apply_hankel(a1, apply_hankel(tilde(a2), f))
    assert close(lhs, rhs)
    lhs = apply_hankel(a1 * a2, f)
    rhs = apply_toeplitz(a1, apply_hankel(a2, f)) + apply_hankel(a1, apply_toeplitz(tilde(a2), f))
    assert close(lhs, rhs)


def test_parse_sign():
    assert parse_sign("plus") == 1
    assert parse_sign("-") == -1
    with pytest.raises(ValueError):
        parse_sign("both")


def test_symbol_literals():
    x = parse_symbol('{"laurent": [[0, 2, 0], [1, 1, 0]]}')
    assert close(x, 2 + t)
    y = parse_symbol({"rational": {"num": [[0, 1, 0]], "den": [[0, -2, 0], [1, 1, 0]]}})
    assert close(y, 1 / (t - 2))
    assert close(parse_symbol(symbol_literal(y)), y)
    for bad in ['{"laurent": [[0, 1]]}',
                '{"laurent": [[0, 1, 0], [0, 2, 0]]}',
                '{"laurent": [[0.5, 1, 0]]}',
                '{"rational": {"num": [[0, 1, 0]], "den": []}}',
                '{"poly": []}',
                'not json']:
        with pytest.raises(InvalidSymbol):
            parse_symbol(bad)


def test_triple_root_is_one_root():
    split = poly_roots(LaurentPoly([-8, 12, -6, 1]))   # (t-2)^3
    assert split.inside == () and split.count_outside == 3
    (root, multiplicity), = split.outside
    assert root == pytest.approx(2.0, abs=1e-12)
    assert multiplicity == 3


def test_repeated_factors_keep_their_multiplicity():
    x = (t - 0.5) * (t - 0.5) * (t - 0.5) * (t - 0.5) / (t - 3)
    (zero, multiplicity), = x.zeros
    assert zero == pytest.approx(0.5, abs=1e-12) and multiplicity == 4
    y = (t - 0.5) * (t - 0.5) * (t - 0.5) * monomial(-1)
    assert y.num.coeffs == pytest.approx({-1: -0.125, 0: 0.75, 1: -1.5, 2: 1})


def test_cluster_roots_keeps_separated_roots_apart():
    assert len(cluster_roots([1.0, 1.001])) == 2
    (center, multiplicity), = cluster_roots([2 + 1e-9, 2 - 1e-9])
    assert center == pytest.approx(2.0) and multiplicity == 2


def _random_hardy(rng):
    return HardyFunction.of(RationalSymbol(random_poly(rng, 0, 1)) / random_hardy_outside(rng))


def test_operators_act_through_fourier_coefficients(rng):
    rows, cols = 12, 96
    j = np.arange(rows)[:, None]
    k = np.arange(cols)[None, :]
    for _ in range(5):
        g, f = random_symbol(rng), _random_hardy(rng)
        # g_hat[i] is the coefficient at exponent i - (cols - 1)
        g_hat = np.asarray(fourier_coeffs(g, -(cols - 1), rows + cols), dtype=np.complex128)
        f_hat = f.taylor(cols)
        toeplitz = g_hat[j - k + cols - 1] @ f_hat
        hankel = g_hat[j + k + cols] @ f_hat
        for computed, expected in ((apply_toeplitz(g, f), toeplitz), (apply_hankel(g, f), hankel)):
            scale = max(1.0, float(np.max(np.abs(expected))))
            assert np.allclose(computed.taylor(rows), expected, rtol=0, atol=1e-9 * scale)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hankel_kills_the_range_of_the_shift(rng, n):
    f = _random_hardy(rng)
    assert sup_norm(apply_hankel(monomial(n), apply_toeplitz(monomial(n), f))) <= 1e-12 * max(1.0, sup_norm(f))


def test_riesz_projection_is_idempotent(symbols):
    for x in symbols:
        plus = riesz_p(x)
        scale = max(1.0, sup_norm(x))
        assert sup_norm(riesz_p(plus) - plus) <= 1e-9 * scale
        assert sup_norm(plus + riesz_q(x) - x) <= 1e-9 * scale


def test_flip_is_an_involution(symbols):
    for x in symbols:
        assert sup_norm(flip(flip(x)) - x) <= 1e-9 * max(1.0, sup_norm(x))
