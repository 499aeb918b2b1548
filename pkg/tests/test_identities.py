"""Cross-validation of the S3-symmetric identity checkers.

The fast checkers assemble every permutation value as a numerator over one
shared master denominator.  The oracles here rebuild the same expressions
term by term through the public beta constructors and generic RatFunc
arithmetic, so agreement is a genuine two-route confirmation rather than
the same code exercised twice.
"""

from math import comb, factorial

import pytest

from qcarlitz.carlitz import beta_h, beta_poly
from qcarlitz.identities import (ALL_PERMUTATIONS, IDENTITY_PERMUTATION,
                                 IdentityParams, Permutation3, cross34_check,
                                 grid_params, lemma2_coeff_check, sample_grid,
                                 thm1_check, thm1_expr, thm3_check, thm3_expr,
                                 thm4_check, thm4_expr)
from qcarlitz.polyq import Poly
from qcarlitz.qcore import QArg, multinomial, power_sum_T, q_int
from qcarlitz.ratfunc import RF_ONE, RF_ZERO, RatFunc

QM1 = RatFunc(Poly([-1, 1]))


def qp(e):
    return RatFunc(Poly.q_power(e))


def sigma_data(p, sigma):
    s1, s2, s3 = sigma.arrange(p.w)
    return (s2 * s3, s1 * s3, s1 * s2), s3


def lattice(n):
    return [(k, l, n - k - l) for k in range(n + 1) for l in range(n - k + 1)]


def naive_thm1(p, sigma):
    (b1, b2, b3), _ = sigma_data(p, sigma)
    W = p.w_product
    y1, y2, y3 = p.y
    acc = RF_ZERO
    for k, l, m in lattice(p.n):
        term = RatFunc(multinomial(p.n, k, l, m))
        term = term * q_int(b1) ** k * q_int(b2) ** l * q_int(b3) ** m
        term = term * qp(W * ((l + m) * y1 + m * y2))
        term = term * beta_h(k, l + m + 1, b1, QArg(W * y1, b1))
        term = term * beta_h(l, m + 1, b2, QArg(W * y2, b2))
        term = term * beta_poly(m, b3, QArg(W * y3, b3))
        acc = acc + term
    return acc


def naive_thm3(p, sigma):
    (b1, b2, b3), w3s = sigma_data(p, sigma)
    W = p.w_product
    y1, y2, _ = p.y
    part1 = RF_ZERO
    for k, l, m in lattice(p.n - 1):
        term = RatFunc(p.n * multinomial(p.n - 1, k, l, m))
        term = term * q_int(b1) ** k * q_int(b2) ** l * q_int(b3) ** (m + 1)
        term = term * qp(W * ((l + m + 1) * y1 + (m + 1) * y2))
        term = term * beta_h(k, l + m + 2, b1, QArg(W * y1, b1))
        term = term * beta_h(l, m + 2, b2, QArg(W * y2, b2))
        term = term * power_sum_T(2, m, w3s - 1, b3)
        part1 = part1 + term
    part2 = RF_ZERO
    for k, l, m in lattice(p.n):
        term = RatFunc(multinomial(p.n, k, l, m))
        term = term * q_int(b1) ** k * q_int(b2) ** l * q_int(b3) ** (m + 1)
        term = term * qp(W * ((l + m) * y1 + m * y2))
        term = term * beta_h(k, l + m + 1, b1, QArg(W * y1, b1))
        term = term * beta_h(l, m + 1, b2, QArg(W * y2, b2))
        term = term * power_sum_T(1, m, w3s - 1, b3)
        part2 = part2 + term
    return part1 + QM1 * part2


def naive_thm4(p, sigma):
    (b1, b2, b3), w3s = sigma_data(p, sigma)
    W = p.w_product
    y1, y2, _ = p.y
    n = p.n
    part1 = RF_ZERO
    for k in range(n):
        inner = RF_ZERO
        for i in range(w3s):
            inner = inner + qp(2 * b3 * i) * beta_h(n - 1 - k, 2, b2,
                                                    QArg(W * y2 + b3 * i, b2))
        term = RatFunc(n * comb(n - 1, k))
        term = term * beta_h(k, n - k + 1, b1, QArg(W * y1, b1))
        term = term * qp(W * ((n - k) * y1 + y2))
        term = term * q_int(b3) * q_int(b1) ** k * q_int(b2) ** (n - 1 - k)
        part1 = part1 + term * inner
    part2 = RF_ZERO
    for k in range(n + 1):
        inner = RF_ZERO
        for i in range(w3s):
            inner = inner + qp(b3 * i) * beta_poly(n - k, b2,
                                                   QArg(W * y2 + b3 * i, b2))
        term = RatFunc(comb(n, k))
        term = term * beta_h(k, n - k + 1, b1, QArg(W * y1, b1))
        term = term * qp(W * (n - k) * y1)
        term = term * q_int(b3) * q_int(b1) ** k * q_int(b2) ** (n - k)
        part2 = part2 + term * inner
    return part1 + QM1 * part2


PTS1 = [
    IdentityParams(1, (1, 2, 1), (1, 0, 0)),
    IdentityParams(2, (2, 1, 3), (0, 1, 2)),
    IdentityParams(3, (1, 2, 2), (1, 1, 1)),
    IdentityParams(0, (2, 2, 2), (2, 1, 0)),
]

PTS34 = [
    IdentityParams(1, (1, 1, 2)),
    IdentityParams(1, (2, 1, 1)),
    IdentityParams(2, (1, 2, 3), (1, 1, 0)),
    IdentityParams(2, (2, 2, 1), (1, 0, 0)),
    IdentityParams(3, (1, 2, 2), (0, 1, 0)),
]

SOME_SIGMAS = (ALL_PERMUTATIONS[0], ALL_PERMUTATIONS[3], ALL_PERMUTATIONS[5])


def test_params_validation():
    p = IdentityParams(2, (1, 2, 3), (0, 1, 0))
    assert p.w_product == 6
    assert p.as_dict() == {"n": 2, "w": [1, 2, 3], "y": [0, 1, 0]}
    assert IdentityParams(0, (1, 1, 1)).y == (0, 0, 0)
    with pytest.raises(ValueError):
        IdentityParams(-1, (1, 1, 1))
    with pytest.raises(ValueError):
        IdentityParams(1, (1, 0, 1))
    with pytest.raises(ValueError):
        IdentityParams(1, (1, 1), (0, 0, 0))
    with pytest.raises(ValueError):
        IdentityParams(1, (1, 1, 1), (0, -1, 0))


def test_permutation_validation_and_arrange():
    s = Permutation3((2, 3, 1))
    assert s.label == "231"
    assert s.arrange((10, 20, 30)) == (20, 30, 10)
    assert IDENTITY_PERMUTATION.arrange((10, 20, 30)) == (10, 20, 30)
    assert len(ALL_PERMUTATIONS) == 6
    assert tuple(s.label for s in ALL_PERMUTATIONS) == (
        "123", "132", "213", "231", "312", "321")
    with pytest.raises(ValueError):
        Permutation3((1, 2, 2))
    with pytest.raises(ValueError):
        Permutation3((0, 1, 2))


def test_thm1_degree_zero_is_one():
    for w in [(1, 1, 1), (2, 3, 1)]:
        p = IdentityParams(0, w, (1, 2, 0))
        for s in ALL_PERMUTATIONS:
            assert thm1_expr(p, s) == RF_ONE
    r = thm1_check(IdentityParams(0, (2, 3, 1), (1, 2, 0)))
    assert r.verdict
    assert all(v == RF_ONE for v in r.values)


def test_thm1_matches_direct_evaluation():
    for p in PTS1:
        for s in SOME_SIGMAS:
            assert thm1_expr(p, s) == naive_thm1(p, s), (p, s.label)


def test_thm3_matches_direct_evaluation():
    for p in PTS34:
        for s in SOME_SIGMAS:
            assert thm3_expr(p, s) == naive_thm3(p, s), (p, s.label)


def test_thm4_matches_direct_evaluation():
    for p in PTS34:
        for s in SOME_SIGMAS:
            assert thm4_expr(p, s) == naive_thm4(p, s), (p, s.label)


def test_six_way_reports():
    r = thm1_check(IdentityParams(1, (1, 2, 1), (1, 0, 0)))
    assert r.identity == "thm1"
    assert r.params == {"n": 1, "w": [1, 2, 1], "y": [1, 0, 0]}
    assert r.labels == ("123", "132", "213", "231", "312", "321")
    assert r.verdict and r.witness is None
    assert all(v == r.values[0] for v in r.values)
    assert thm1_check(IdentityParams(3, (2, 2, 2), (0, 0, 0))).verdict
    assert thm3_check(IdentityParams(1, (1, 1, 2))).verdict
    assert thm4_check(IdentityParams(1, (2, 1, 1))).verdict
    assert thm4_check(IdentityParams(2, (1, 2, 3), (1, 1, 0))).verdict


def test_cross_theorem_agreement():
    for p in PTS34:
        r = cross34_check(p)
        assert r.verdict, p
        assert r.identity == "cross34"
        assert len(r.labels) == 12
        assert r.labels[0] == "thm3:123" and r.labels[6] == "thm4:123"


def series_exp(bracket, order):
    """Coefficient list of e^{bracket*t} in t, up to the given order."""
    out = [RF_ONE]
    for k in range(1, order + 1):
        out.append(out[-1] * bracket / k)
    return out


def test_lemma2_series_oracle_confirms_coefficients():
    # The t-expansion of sum_{i<w3} (t q^{2di} + (q^d - 1) q^{di}) e^{[i]_{q^d} t}
    # must carry n*T_{2,n-1}(w3-1) + (q^d - 1)*T_{1,n}(w3-1) as its t^n/n!
    # coefficient.  Built here with honest truncated series, no beta involved.
    order = 3
    for d in (1, 2):
        qd = qp(d)
        for w3 in (1, 2, 3):
            series = [RF_ZERO] * (order + 1)
            for i in range(w3):
                exp_i = series_exp(q_int(i, d), order)
                c0 = (qd - 1) * qp(d * i)
                for k in range(order + 1):
                    series[k] = series[k] + c0 * exp_i[k]
                c1 = qp(2 * d * i)
                for k in range(1, order + 1):
                    series[k] = series[k] + c1 * exp_i[k - 1]
            for n in range(order + 1):
                want = (qd - 1) * power_sum_T(1, n, w3 - 1, d)
                if n >= 1:
                    want = want + power_sum_T(2, n - 1, w3 - 1, d) * n
                assert series[n] * factorial(n) == want, (d, w3, n)


def test_lemma2_grid():
    r = lemma2_coeff_check(1, 1, 1)
    assert r.verdict and str(r.values[0]) == "1"
    r = lemma2_coeff_check(1, 1, 2)
    assert r.verdict
    assert str(r.values[0]) == "1-q+2q^2"
    for n in range(7):
        for d in (1, 2, 6):
            for w3 in (1, 2, 3):
                r = lemma2_coeff_check(n, d, w3)
                assert r.verdict, (n, d, w3)
                assert r.params == {"n": n, "d": d, "w3": w3}


def test_positive_degree_required():
    p0 = IdentityParams(0, (1, 1, 1))
    with pytest.raises(ValueError, match="Theorem 3 requires positive n"):
        thm3_expr(p0, IDENTITY_PERMUTATION)
    with pytest.raises(ValueError, match="Theorem 3 requires positive n"):
        thm3_check(p0)
    with pytest.raises(ValueError, match="Theorem 4 requires positive n"):
        thm4_expr(p0, IDENTITY_PERMUTATION)
    with pytest.raises(ValueError, match="Theorem 4 requires positive n"):
        thm4_check(p0)
    with pytest.raises(ValueError, match="requires positive n"):
        cross34_check(p0)


def test_lemma2_argument_validation():
    with pytest.raises(ValueError):
        lemma2_coeff_check(-1, 1, 1)
    with pytest.raises(ValueError):
        lemma2_coeff_check(1, 0, 1)
    with pytest.raises(ValueError):
        lemma2_coeff_check(1, 1, 0)


def test_grid_enumeration():
    grid = grid_params(range(2), 2, 1)
    assert len(grid) == 2 * 8 * 8
    assert grid == sorted(grid)
    assert grid[0] == IdentityParams(0, (1, 1, 1), (0, 0, 0))
    assert grid[-1] == IdentityParams(1, (2, 2, 2), (1, 1, 1))
    flat = grid_params(range(2), 2, 1, vary_y3=False)
    assert len(flat) == 2 * 8 * 4
    assert all(p.y[2] == 0 for p in flat)


def test_sampling_is_deterministic_and_ordered():
    grid = grid_params(range(3), 2, 1)
    sample = sample_grid(grid, 50)
    assert len(sample) == 50
    assert sample == sample_grid(grid, 50)
    assert sample == sorted(sample)
    seen = set(grid)
    assert all(p in seen for p in sample)
    full = sample_grid(grid, len(grid) + 1)
    assert full == grid and full is not grid
