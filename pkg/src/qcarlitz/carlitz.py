"""Classical Bernoulli values and the Carlitz q-Bernoulli families.

The classical numbers serve as q -> 1 limit oracles.  The q-families come
in four layers: numbers, polynomials, the twisted order-h polynomials, and
the doubly indexed (h, k) polynomials whose q-falling factorial denominator
forces h >= k.  Polynomial arguments are QArg monomials z = q^e so that
fractional arguments with integral q-power exponents stay inside Q(q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .polyq import ONE, Poly
from .qcore import QArg, q_int_poly
from .ratfunc import RF_ONE, RF_ZERO, RatFunc


@lru_cache(maxsize=None)
def bernoulli_classical(n: int) -> Fraction:
    """B_n solved literally from (B+1)^n - B_n = delta_{1,n}, B_0 = 1.

    The n = 1 instance is vacuous (both B_1 terms cancel and the delta
    absorbs the constant), so B_n is pinned by the order-(n+1) instance;
    solving in that order yields B_1 = -1/2.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if n == 0:
        return Fraction(1)
    acc = sum(comb(n + 1, i) * bernoulli_classical(i) for i in range(n))
    return Fraction(-acc, n + 1)


def bernoulli_poly_classical(n: int, x: Fraction | int) -> Fraction:
    """B_n(x) = sum_l C(n,l) B_l x^(n-l)."""
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    x = Fraction(x)
    return sum((comb(n, l) * bernoulli_classical(l) * x ** (n - l) for l in range(n + 1)),
               Fraction(0))


@dataclass(frozen=True)
class BetaTable:
    """q-Bernoulli numbers beta_{n,q^d} for n = 0..n_max, recurrence-solved."""

    base_exponent: int
    values: tuple[RatFunc, ...]


@lru_cache(maxsize=None)
def beta_number(n: int, d: int = 1) -> RatFunc:
    """beta_{n,q^d} by the closed form
    (1/(1-q^d)^n) * sum_l C(n,l) (-1)^l (l+1)/[l+1]_{q^d}."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if d < 1:
        raise ValueError("base exponent must be positive")
    acc = RF_ZERO
    for l in range(n + 1):
        c = comb(n, l) * (l + 1) * (-1 if l & 1 else 1)
        acc = acc + RatFunc(Poly([c]), q_int_poly(l + 1, d))
    return acc * RatFunc(ONE, (ONE - Poly.q_power(d)) ** n)


def beta_number_recurrence(n_max: int, d: int = 1) -> BetaTable:
    """Solve q^d (q^d beta + 1)^n - beta_n = delta_{1,n} for beta_1..beta_{n_max}.

    In each instance the beta_n terms almost cancel, leaving the invertible
    coefficient q^{d(n+1)} - 1, so the system is triangular.
    """
    if n_max < 0:
        raise ValueError("table size must be non-negative")
    if d < 1:
        raise ValueError("base exponent must be positive")
    values = [RF_ONE]
    for n in range(1, n_max + 1):
        rhs = RatFunc(Poly([1 if n == 1 else 0]))
        for i in range(n):
            rhs = rhs - RatFunc(Poly([comb(n, i)]).shift(d * (i + 1)), ONE) * values[i]
        lead = Poly.q_power(d * (n + 1)) - ONE
        values.append(rhs * RatFunc(ONE, lead))
    return BetaTable(base_exponent=d, values=tuple(values))


@lru_cache(maxsize=None)
def _beta_hk_monomial(n: int, h: int, k: int, d: int, e: int) -> RatFunc:
    # shared closed-form core: argument enters only through z = q^e
    if n < 0:
        raise ValueError("index must be non-negative")
    acc = RF_ZERO
    for j in range(n + 1):
        num = comb(n, j) * (-1 if j & 1 else 1)
        for i in range(k):
            num *= j + h - i
        den = ONE
        for i in range(k):
            den = den * q_int_poly(j + h - i, d)
        acc = acc + RatFunc(Poly([num]).shift(j * e), den)
    return acc * RatFunc(ONE, (ONE - Poly.q_power(d)) ** n)


def beta_poly(n: int, d: int, x: QArg) -> RatFunc:
    """beta_{n,q^d}(x) with q^{d l x} realized as q^{l e}."""
    _check_base(d, x)
    return _beta_hk_monomial(n, 1, 1, d, x.e)


def beta_poly_expansion(n: int, d: int, x: QArg) -> RatFunc:
    """sum_l C(n,l) q^{dlx} beta_{l,q^d} [x]_{q^d}^{n-l}; integer x only."""
    _check_base(d, x)
    xi = x.integer_value()
    bracket = q_int_poly(xi, d)
    acc = RF_ZERO
    for l in range(n + 1):
        scale = Poly([comb(n, l)]).shift(d * l * xi) * bracket ** (n - l)
        acc = acc + beta_number(l, d) * scale
    return acc


def beta_h(n: int, h: int, d: int, x: QArg) -> RatFunc:
    """Order-h q-Bernoulli polynomial in base q^d at the QArg x."""
    if h < 1:
        raise ValueError("q-falling denominator may vanish for h < 1")
    _check_base(d, x)
    return _beta_hk_monomial(n, h, 1, d, x.e)


def beta_hk(n: int, h: int, k: int, d: int, x: QArg) -> RatFunc:
    """(h,k) q-Bernoulli polynomial: weights (j+h)_k / [j+h]_{q^d,k}."""
    if k < 1:
        raise ValueError("order k must be positive")
    if h < k:
        raise ValueError("degenerate q-falling factorial for h < k")
    _check_base(d, x)
    return _beta_hk_monomial(n, h, k, d, x.e)


def _check_base(d: int, x: QArg) -> None:
    if d < 1:
        raise ValueError("base exponent must be positive")
    if x.d != d:
        raise ValueError(f"argument carries base q^{x.d}, family is in base q^{d}")
