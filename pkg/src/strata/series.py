"""Truncated Laurent series over exact rationals, plus the named generating
series driving the volume and Siegel-Veech recursions.

A series knows its coefficients on ``min_exp .. trunc_order`` only;
coefficients above ``trunc_order`` are unknown, not zero, and asking for one
raises.  All operations propagate truncation conservatively so a computed
coefficient is always exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import BadValuation, NotInvertible, Underdetermined
from .exact import bernoulli, zeta_negative


class LaurentSeries:
    __slots__ = ("min_exp", "coeffs", "trunc_order")

    def __init__(self, min_exp: int, coeffs, trunc_order: int):
        coeffs = [Fraction(c) for c in coeffs]
        expected = trunc_order - min_exp + 1
        if expected < 0:
            raise ValueError("trunc_order below min_exp")
        if len(coeffs) != expected:
            raise ValueError("coefficient list does not span min_exp..trunc_order")
        # canonical form: min_exp points at the first nonzero coefficient
        first = 0
        while first < len(coeffs) and coeffs[first] == 0:
            first += 1
        if first == len(coeffs):
            min_exp, coeffs = trunc_order + 1, []
        else:
            min_exp += first
            coeffs = coeffs[first:]
        self.min_exp = min_exp
        self.coeffs = tuple(coeffs)
        self.trunc_order = trunc_order

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_terms(terms: dict, trunc_order: int) -> "LaurentSeries":
        if not terms:
            return LaurentSeries.zero(trunc_order)
        lo = min(terms)
        if max(terms) > trunc_order:
            raise ValueError("term beyond trunc_order")
        coeffs = [Fraction(terms.get(e, 0)) for e in range(lo, trunc_order + 1)]
        return LaurentSeries(lo, coeffs, trunc_order)

    @staticmethod
    def zero(trunc_order: int) -> "LaurentSeries":
        return LaurentSeries(trunc_order + 1, [], trunc_order)

    @staticmethod
    def one(trunc_order: int) -> "LaurentSeries":
        return LaurentSeries.from_terms({0: 1}, trunc_order)

    @staticmethod
    def identity(trunc_order: int) -> "LaurentSeries":
        return LaurentSeries.from_terms({1: 1}, trunc_order)

    # -- inspection ---------------------------------------------------

    def coeff(self, n: int) -> Fraction:
        if n > self.trunc_order:
            raise ValueError(f"coefficient at exponent {n} is beyond truncation "
                             f"order {self.trunc_order}")
        if n < self.min_exp:
            return Fraction(0)
        return self.coeffs[n - self.min_exp]

    def valuation(self):
        """Exponent of the lowest known nonzero term, or None if zero so far."""
        return self.min_exp if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict:
        return {self.min_exp + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def agrees_with(self, other: "LaurentSeries", upto: int) -> bool:
        return all(self.coeff(n) == other.coeff(n)
                   for n in range(min(self.min_exp, other.min_exp), upto + 1))

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.trunc_order == other.trunc_order
                and self.terms() == other.terms())

    def __hash__(self):
        return hash((self.trunc_order, tuple(sorted(self.terms().items()))))

    def __repr__(self):
        if self.is_zero():
            return f"O(z^{self.trunc_order + 1})"
        parts = [f"{c}*z^{e}" for e, c in sorted(self.terms().items())]
        return " + ".join(parts) + f" + O(z^{self.trunc_order + 1})"

    # -- ring operations ----------------------------------------------

    def truncate(self, order: int) -> "LaurentSeries":
        if order >= self.trunc_order:
            return self
        coeffs = [self.coeff(e) for e in range(self.min_exp, order + 1)] \
            if order >= self.min_exp else []
        return LaurentSeries(min(self.min_exp, order + 1), coeffs, order)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by z^k."""
        return LaurentSeries(self.min_exp + k, list(self.coeffs),
                             self.trunc_order + k)

    def __neg__(self):
        return LaurentSeries(self.min_exp, [-c for c in self.coeffs],
                             self.trunc_order)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.from_terms({0: other}, self.trunc_order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.trunc_order, other.trunc_order)
        terms = {}
        for src in (self, other):
            for e, c in src.terms().items():
                if e <= order:
                    terms[e] = terms.get(e, Fraction(0)) + c
        return LaurentSeries.from_terms(terms, order)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.from_terms({0: other}, self.trunc_order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _lower_bound(self) -> int:
        # lower bound on the valuation, usable even for the zero series
        return self.min_exp if self.coeffs else self.trunc_order + 1

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentSeries(self.min_exp,
                                 [c * other for c in self.coeffs],
                                 self.trunc_order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.trunc_order + other._lower_bound(),
                    other.trunc_order + self._lower_bound())
        terms = {}
        for e1, c1 in self.terms().items():
            for e2, c2 in other.terms().items():
                e = e1 + e2
                if e <= order:
                    terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return LaurentSeries.from_terms(terms, order)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return LaurentSeries.one(self.trunc_order)
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def inverse(self) -> "LaurentSeries":
        v = self.valuation()
        if v is None:
            raise NotInvertible("cannot invert a series that is zero to this order")
        n_known = self.trunc_order - v           # unit part known to this order
        c = self.coeffs
        inv = [Fraction(1) / c[0]]
        for n in range(1, n_known + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                ck = c[k] if k < len(c) else Fraction(0)
                acc += ck * inv[n - k]
            inv.append(-acc / c[0])
        order = self.trunc_order - 2 * v
        keep = order + v                          # unit-part exponent limit
        return LaurentSeries(-v, inv[: keep + 1], order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inverse()

    # -- calculus -----------------------------------------------------

    def derivative(self) -> "LaurentSeries":
        terms = {e - 1: e * c for e, c in self.terms().items() if e != 0}
        return LaurentSeries.from_terms(terms, self.trunc_order - 1)

    def integrate(self) -> "LaurentSeries":
        if self.coeff(-1) != 0:
            raise BadValuation("series has a z^-1 term; no Laurent antiderivative")
        terms = {e + 1: c / (e + 1) for e, c in self.terms().items()}
        return LaurentSeries.from_terms(terms, self.trunc_order + 1)

    def exp(self) -> "LaurentSeries":
        if not self.is_zero() and self.valuation() < 1:
            raise BadValuation("exp needs strictly positive valuation")
        order = self.trunc_order
        f = [self.coeff(n) if n >= self.min_exp else Fraction(0)
             for n in range(0, order + 1)] if not self.is_zero() else [Fraction(0)] * (order + 1)
        out = [Fraction(1)] + [Fraction(0)] * order
        for n in range(1, order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if f[k]:
                    acc += k * f[k] * out[n - k]
            out[n] = acc / n
        return LaurentSeries(0, out, order)

    def log(self) -> "LaurentSeries":
        if self.coeff(0) != 1 or (self.valuation() or 0) != 0:
            raise BadValuation("log needs constant term exactly 1")
        return (self.derivative() * self.inverse()).integrate()

    def arctan(self) -> "LaurentSeries":
        if not self.is_zero() and self.valuation() < 1:
            raise BadValuation("arctan needs strictly positive valuation")
        one = LaurentSeries.one(self.trunc_order)
        return (self.derivative() * (one + self * self).inverse()).integrate()

    # -- composition --------------------------------------------------

    def compose(self, inner: "LaurentSeries") -> "LaurentSeries":
        """Substitute ``inner`` (valuation >= 1) into self (no pole part)."""
        vg = inner.valuation()
        if vg is None or vg < 1:
            raise BadValuation("composition needs inner valuation >= 1")
        if self.min_exp < 0 and not self.is_zero():
            raise BadValuation("composition of a series with pole part")
        order = min(inner.trunc_order, (self.trunc_order + 1) * vg - 1)
        result = LaurentSeries.zero(order)
        for e in range(self.trunc_order, -1, -1):
            result = (result * inner).truncate(order) + self.coeff(e)
        return result.truncate(order)

    def revert(self) -> "LaurentSeries":
        """Compositional inverse of a series with valuation exactly 1."""
        if self.valuation() != 1:
            raise BadValuation("reversion needs valuation exactly 1")
        order = self.trunc_order
        unit = self.shift(-1)                    # valuation 0
        inv_unit = unit.inverse()                # known to order-1... handled below
        out = {}
        power = LaurentSeries.one(inv_unit.trunc_order)
        for n in range(1, order + 1):
            power = (power * inv_unit).truncate(inv_unit.trunc_order)
            out[n] = power.coeff(n - 1) / n
        return LaurentSeries.from_terms(out, order)


# ---------------------------------------------------------------------
# Named series
# ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _sinh_ratio(order: int) -> LaurentSeries:
    """sum_k x^(2k) / (4^k (2k+1)!), the even series whose reciprocal has the
    correction coefficients b_j as its Taylor coefficients."""
    terms = {}
    k = 0
    while 2 * k <= order:
        terms[2 * k] = Fraction(1, 4**k * math.factorial(2 * k + 1))
        k += 1
    return LaurentSeries.from_terms(terms, order)


@lru_cache(maxsize=None)
def b_table(jmax: int) -> dict:
    """Coefficients b_j, j = 0..jmax, of the reciprocal of _sinh_ratio.

    b_0 = 1, b_2 = -1/24, b_4 = 7/5760; odd coefficients vanish.
    """
    series = _sinh_ratio(jmax).inverse()
    return {j: series.coeff(j) for j in range(jmax + 1)}


@lru_cache(maxsize=None)
def volume_kernel(order: int) -> LaurentSeries:
    """exp(-sum_{j>=1} j! b_{j+1} u^{j+1}); unit series driving alpha_table."""
    b = b_table(order + 1)
    terms = {j + 1: -math.factorial(j) * b[j + 1]
             for j in range(1, order) if b[j + 1] != 0}
    return LaurentSeries.from_terms(terms, order).exp()


@lru_cache(maxsize=None)
def spin_kernel(order: int) -> LaurentSeries:
    """exp(sum_{j>=1} (1/2)^((j+1)/2) zeta(-j) u^{j+1}); spin analogue of
    volume_kernel.  Only odd j contribute (zeta(-even) = 0), so every
    exponent (j+1)/2 is integral and all coefficients are rational."""
    terms = {}
    for j in range(1, order):
        z = zeta_negative(j)
        if z != 0:
            terms[j + 1] = Fraction(1, 2) ** ((j + 1) // 2) * z
    return LaurentSeries.from_terms(terms, order).exp()


def _inverse_of_reverted_ratio(kernel: LaurentSeries, order: int) -> LaurentSeries:
    ratio = LaurentSeries.identity(kernel.trunc_order + 1) * kernel.inverse()
    return ratio.revert().inverse().truncate(order)


@lru_cache(maxsize=None)
def A_series(order: int) -> LaurentSeries:
    """1/z plus the odd series of minimal-stratum volume coefficients alpha."""
    return _inverse_of_reverted_ratio(volume_kernel(order + 4), order)


@lru_cache(maxsize=None)
def alpha_table(lmax: int) -> dict:
    """alpha_l for 1 <= l <= lmax (zero at even l)."""
    series = A_series(lmax)
    return {l: series.coeff(l) for l in range(1, lmax + 1)}


@lru_cache(maxsize=None)
def bold_A_series(order: int) -> LaurentSeries:
    """Spin counterpart of A_series, built from spin_kernel."""
    return _inverse_of_reverted_ratio(spin_kernel(order + 4), order)


@lru_cache(maxsize=None)
def bold_alpha_table(lmax: int) -> dict:
    series = bold_A_series(lmax)
    return {l: series.coeff(l) for l in range(1, lmax + 1)}


@lru_cache(maxsize=None)
def Q_series(order: int) -> LaurentSeries:
    """u * exp(sum_{k>=1} (k-1)! b_k u^k); compositional partner of A_series."""
    b = b_table(order)
    terms = {k: math.factorial(k - 1) * b[k]
             for k in range(1, order + 1) if b[k] != 0}
    inner = LaurentSeries.from_terms(terms, order) if terms else \
        LaurentSeries.zero(order)
    return LaurentSeries.identity(order + 1) * inner.exp()


def lagrange_consistency_check(order: int) -> bool:
    """True when Q composed with 1/A is the identity series to this order."""
    q = Q_series(order + 4)
    a_inv = A_series(order + 4).inverse()
    composed = q.compose(a_inv)
    return composed.agrees_with(LaurentSeries.identity(order), order)


@lru_cache(maxsize=None)
def delta_series(order: int) -> LaurentSeries:
    """Even series delta_2 t^2 + delta_4 t^4 + ... of minimal-stratum
    saddle-connection coefficients, solved triangularly against A_series.

    The defining identities read b_{j-1} = (2/j!) [t^1](delta(t) * A(t)^j);
    odd j pivots on the new coefficient delta_{j+1} with unit pivot (the
    leading 1/t^j of A^j), even j are consistency constraints checked by the
    test suite.
    """
    if order < 2 or order % 2 != 0:
        raise ValueError("order must be an even integer >= 2")
    a = A_series(order + 3)
    b = b_table(order + 1)
    delta = {}
    apow = a
    for j in range(1, order + 1):
        if j > 1:
            apow = apow * a
        if j % 2 == 0:
            continue
        # [t^1](delta * A^j) = sum_m delta_m [t^(1-m)] A^j, pivot at m = j+1
        target = Fraction(math.factorial(j), 2) * b[j - 1]
        acc = Fraction(0)
        for m in range(2, j + 1, 2):
            acc += delta[m] * apow.coeff(1 - m)
        pivot = apow.coeff(-j)
        if pivot == 0:
            raise Underdetermined(f"vanishing pivot at step {j}")
        delta[j + 1] = (target - acc) / pivot
    return LaurentSeries.from_terms(delta, order)


def delta_identity_residual(order: int, j: int) -> Fraction:
    """b_{j-1} - (2/j!)[t^1](delta * A^j); zero when the defining identity
    holds at step j (even j included)."""
    even_order = order if order % 2 == 0 else order + 1
    d = delta_series(even_order)
    apow = A_series(order + 3) ** j
    acc = sum((d.coeff(m) * apow.coeff(1 - m)
               for m in range(2, min(even_order, j + 1) + 1)), Fraction(0))
    return b_table(j)[j - 1] - Fraction(2, math.factorial(j)) * acc


@lru_cache(maxsize=None)
def d_min_series(order: int) -> LaurentSeries:
    """(A' + u A'') / (u A'^2); odd series t - t^3/8 + 91 t^5/1152 - ..."""
    a = A_series(order + 6)
    da = a.derivative()
    dda = da.derivative()
    u = LaurentSeries.identity(order + 8)
    num = da + u * dda
    den = u * da * da
    return (num * den.inverse()).truncate(order)


@lru_cache(maxsize=None)
def _arctan_kernel(order: int) -> LaurentSeries:
    """arctan(2x / sqrt(1 - 4x^2)) as a power series in x."""
    base = LaurentSeries.from_terms({0: Fraction(1), 2: Fraction(-4)},
                                    order + 2)
    root_inverse = (base.log() * Fraction(-1, 2)).exp()
    inner = LaurentSeries.from_terms({1: Fraction(2)}, order + 2) * root_inverse
    return inner.arctan()


def arctan_identity_one(order: int) -> bool:
    """sum_l binom(2l,l)/(2l+1) x^(2l) equals arctan(2x/sqrt(1-4x^2))/(2x),
    checked through x^order."""
    terms = {2 * l: Fraction(math.comb(2 * l, l), 2 * l + 1)
             for l in range(order // 2 + 1)}
    lhs = LaurentSeries.from_terms(terms, order)
    rhs = _arctan_kernel(order + 2).shift(-1) * Fraction(1, 2)
    return lhs.agrees_with(rhs, order)


def arctan_identity_two(order: int) -> bool:
    """sum_g 16^g x^(2g) / (g^2 binom(2g,g)) equals
    2 arctan(2x/sqrt(1-4x^2))^2, checked through x^order."""
    terms = {2 * g: Fraction(16 ** g, g * g * math.comb(2 * g, g))
             for g in range(1, order // 2 + 1)}
    lhs = LaurentSeries.from_terms(terms, order)
    kernel = _arctan_kernel(order + 2)
    rhs = kernel * kernel * 2
    return lhs.agrees_with(rhs, order)
