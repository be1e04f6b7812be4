"""Exact scalars: rationals, rational multiples of powers of pi, Bernoulli
numbers and zeta values at negative integers.

All arithmetic is over ``fractions.Fraction``; floats appear only in
``PiScalar.to_float`` which exists for reports and sanity bounds, never for
exact comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PiPowerMismatch

Rational = Fraction

# 60 decimal digits; enough for any float64 produced downstream.
PI_APPROX = Fraction(
    3141592653589793238462643383279502884197169399375105820974944,
    10**60,
)


@dataclass(frozen=True)
class PiScalar:
    """A rational multiple ``coeff * pi**pi_power`` with even integer power.

    Addition requires matching powers (adding pi^2-terms to pi^4-terms would
    leave the value irrational-mixed and is always a bug upstream).
    """

    coeff: Fraction
    pi_power: int = 0

    def __post_init__(self):
        if self.pi_power % 2 != 0:
            raise ValueError("pi_power must be even")
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    @staticmethod
    def rational(value) -> "PiScalar":
        return PiScalar(Fraction(value), 0)

    def __add__(self, other: "PiScalar") -> "PiScalar":
        if not isinstance(other, PiScalar):
            return NotImplemented
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.pi_power != other.pi_power:
            raise PiPowerMismatch(
                f"cannot add pi^{self.pi_power} and pi^{other.pi_power} terms"
            )
        return PiScalar(self.coeff + other.coeff, self.pi_power)

    def __sub__(self, other: "PiScalar") -> "PiScalar":
        return self + (-other)

    def __neg__(self) -> "PiScalar":
        return PiScalar(-self.coeff, self.pi_power)

    def __mul__(self, other):
        if isinstance(other, PiScalar):
            return PiScalar(self.coeff * other.coeff, self.pi_power + other.pi_power)
        return PiScalar(self.coeff * Fraction(other), self.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiScalar):
            if other.coeff == 0:
                raise ZeroDivisionError("division by zero PiScalar")
            return PiScalar(self.coeff / other.coeff, self.pi_power - other.pi_power)
        return PiScalar(self.coeff / Fraction(other), self.pi_power)

    def __eq__(self, other):
        if not isinstance(other, PiScalar):
            return NotImplemented
        if self.coeff == 0 and other.coeff == 0:
            return True
        return self.coeff == other.coeff and self.pi_power == other.pi_power

    def __hash__(self):
        if self.coeff == 0:
            return hash((Fraction(0), 0))
        return hash((self.coeff, self.pi_power))

    def to_float(self) -> float:
        return float(self.coeff * PI_APPROX**self.pi_power)

    def to_json(self) -> dict:
        return {
            "num": str(self.coeff.numerator),
            "den": str(self.coeff.denominator),
            "pi_pow": self.pi_power,
        }

    @staticmethod
    def from_json(obj: dict) -> "PiScalar":
        return PiScalar(
            Fraction(int(obj["num"]), int(obj["den"])),
            int(obj.get("pi_pow", 0)),
        )

    def __repr__(self):
        if self.pi_power == 0 or self.coeff == 0:
            return f"{self.coeff}"
        return f"{self.coeff}*pi^{self.pi_power}"


def fraction_to_json(value: Fraction) -> dict:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def fraction_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2 (so B_0=1, B_2=1/6, B_12=-691/2730)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    total = Fraction(0)
    for k in range(n):
        total += math.comb(n + 1, k) * bernoulli(k)
    return -total / (n + 1)


def zeta_negative(j: int) -> Fraction:
    """zeta(-j) = -B_{j+1}/(j+1) for integer j >= 1; zero at even j >= 2."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return -bernoulli(j + 1) / (j + 1)


def double_factorial(n: int) -> int:
    """n!! with the conventions 0!! = (-1)!! = 1."""
    if n in (-1, 0):
        return 1
    if n < -1:
        raise ValueError("double factorial undefined below -1")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result
