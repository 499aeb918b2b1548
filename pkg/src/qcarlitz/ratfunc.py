"""Canonical rational functions in q over the rationals.

Every value is kept gcd-reduced with a monic denominator, so field
equality is literal componentwise equality.  Arithmetic follows the
classical reduced-fraction schemes (cross-gcd for products, Henrici's
gcd-splitting for sums) so intermediate results never need a full
renormalization pass.
"""

from __future__ import annotations

from fractions import Fraction

from .polyq import ONE, Poly, ZERO


class RatFunc:
    """Immutable reduced fraction of two polynomials in q."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | int | Fraction, den: Poly | int | Fraction = ONE,
                 _reduced: bool = False):
        if not isinstance(num, Poly):
            num = Poly([num])
        if not isinstance(den, Poly):
            den = Poly([den])
        if _reduced:
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "den", den)
            return
        if not den:
            raise ValueError("division by zero polynomial")
        if not num:
            num, den = ZERO, ONE
        else:
            g = num.gcd(den)
            if g.degree > 0 or g.leading_coeff != 1:
                num = num.divexact(g)
                den = den.divexact(g)
            lc = den.leading_coeff
            if lc != 1:
                inv = 1 / lc
                num = num * inv
                den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        return cls(num, den, _reduced=True)

    @classmethod
    def _monic_scaled(cls, num: Poly, den: Poly) -> "RatFunc":
        if not num:
            return RF_ZERO
        lc = den.leading_coeff
        if lc != 1:
            inv = 1 / lc
            num = num * inv
            den = den * inv
        return cls._raw(num, den)

    @property
    def is_polynomial(self) -> bool:
        return self.den == ONE

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: "RatFunc | Poly | int | Fraction") -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        if ad == ONE and bd == ONE:
            return RatFunc._raw(an + bn, ONE)
        d = ad.gcd(bd)
        if d.degree == 0:
            return RatFunc._monic_scaled(an * bd + bn * ad, ad * bd)
        ad1 = ad.divexact(d)
        t = an * bd.divexact(d) + bn * ad1
        if not t:
            return RF_ZERO
        h = t.gcd(d)
        if h.degree > 0 or h.leading_coeff != 1:
            t = t.divexact(h)
            bd = bd.divexact(h)
        return RatFunc._monic_scaled(t, ad1 * bd)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other: "RatFunc | Poly | int | Fraction") -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "RatFunc | Poly | int | Fraction") -> "RatFunc":
        return (-self) + other

    def __mul__(self, other: "RatFunc | Poly | int | Fraction") -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        if not an or not bn:
            return RF_ZERO
        if ad == ONE and bd == ONE:
            return RatFunc._raw(an * bn, ONE)
        g1 = an.gcd(bd)
        if g1.degree > 0 or g1.leading_coeff != 1:
            an = an.divexact(g1)
            bd = bd.divexact(g1)
        g2 = bn.gcd(ad)
        if g2.degree > 0 or g2.leading_coeff != 1:
            bn = bn.divexact(g2)
            ad = ad.divexact(g2)
        return RatFunc._monic_scaled(an * bn, ad * bd)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ValueError("division by zero rational function")
        return RatFunc._monic_scaled(self.den, self.num)

    def __truediv__(self, other: "RatFunc | Poly | int | Fraction") -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: "RatFunc | Poly | int | Fraction") -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num**n, self.den**n)

    def substitute_power(self, d: int) -> "RatFunc":
        """q -> q**d; coprimality and the monic denominator survive."""
        if d < 1:
            raise ValueError("substitution exponent must be positive")
        if d == 1:
            return self
        return RatFunc._raw(self.num.substitute_power(d), self.den.substitute_power(d))

    def evaluate(self, q0: Fraction | int) -> Fraction:
        dv = self.den.evaluate(q0)
        if dv == 0:
            raise ValueError("pole at evaluation point")
        return self.num.evaluate(q0) / dv

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        ns = str(self.num)
        if len(self.num._c) - self.num._c.count(0) > 1:
            ns = f"({ns})"
        ds = str(self.den)
        if len(self.den._c) - self.den._c.count(0) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"


RF_ZERO = RatFunc._raw(ZERO, ONE)
RF_ONE = RatFunc._raw(ONE, ONE)


def _coerce(value: object) -> "RatFunc":
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc._raw(value, ONE)
    if isinstance(value, (int, Fraction)):
        return RatFunc._raw(Poly([value]), ONE)
    return NotImplemented


def rf_normalize(num: Poly, den: Poly) -> RatFunc:
    """Canonical reduced form of num/den (idempotent)."""
    return RatFunc(num, den)


def rf_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_substitute_power(a: RatFunc, d: int) -> RatFunc:
    return a.substitute_power(d)


def rf_eval_rational(a: RatFunc, q0: Fraction | int) -> Fraction:
    return a.evaluate(q0)
