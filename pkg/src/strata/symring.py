"""Graded polynomial ring on countably many generators, with the two-point
and n-point coefficient series whose specializations produce volumes.

Bases: "h" and "p" are two generator families for the same ring (triangularly
related); "bold_h"/"bold_p" are the spin variants carrying odd indices only.
Generator index l has weight l+1; a monomial's weight is the sum.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import EvenIndex, MissingGenerator, WrongBasis

BASES = ("h", "p", "bold_h", "bold_p")
_PREFIX = {"h": "h", "p": "p", "bold_h": "bh", "bold_p": "bp"}


def _is_bold(basis: str) -> bool:
    return basis.startswith("bold")


class WeightedPoly:
    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise WrongBasis(f"unknown basis {basis!r}")
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            mono = tuple(sorted(mono))
            for idx in mono:
                if idx < 1:
                    raise ValueError("generator indices start at 1")
                if _is_bold(basis) and idx % 2 == 0:
                    raise EvenIndex(f"basis {basis} has odd generators only, "
                                    f"got index {idx}")
            clean[mono] = clean.get(mono, Fraction(0)) + coeff
        self.basis = basis
        self.terms = {m: c for m, c in clean.items() if c != 0}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(basis: str) -> "WeightedPoly":
        return WeightedPoly(basis)

    @staticmethod
    def one(basis: str) -> "WeightedPoly":
        return WeightedPoly(basis, {(): Fraction(1)})

    @staticmethod
    def gen(basis: str, index: int) -> "WeightedPoly":
        return WeightedPoly(basis, {(index,): Fraction(1)})

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def indices(self):
        out = set()
        for mono in self.terms:
            out.update(mono)
        return out

    @staticmethod
    def monomial_weight(mono) -> int:
        return sum(i + 1 for i in mono)

    def weight(self):
        """Largest monomial weight, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.monomial_weight(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        weights = {self.monomial_weight(m) for m in self.terms}
        return len(weights) <= 1

    def __eq__(self, other):
        if not isinstance(other, WeightedPoly):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "0"
        prefix = _PREFIX[self.basis]
        chunks = []
        for mono, coeff in sorted(self.terms.items(),
                                  key=lambda mc: (self.monomial_weight(mc[0]), mc[0]),
                                  reverse=True):
            factors = []
            for idx in sorted(set(mono), reverse=True):
                mult = mono.count(idx)
                factors.append(f"{prefix}{idx}" + (f"^{mult}" if mult > 1 else ""))
            body = "*".join(factors)
            chunks.append(f"{coeff}" + (f" * {body}" if body else ""))
        return " + ".join(chunks)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "WeightedPoly"):
        if self.basis != other.basis:
            raise WrongBasis(f"cannot mix bases {self.basis} and {other.basis}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeightedPoly(self.basis, {(): other})
        self._check(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return WeightedPoly(self.basis, terms)

    __radd__ = __add__

    def __neg__(self):
        return WeightedPoly(self.basis, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeightedPoly(self.basis, {(): other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return WeightedPoly(self.basis,
                                {m: c * other for m, c in self.terms.items()})
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return WeightedPoly(self.basis, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = WeightedPoly.one(self.basis)
        for _ in range(n):
            out = out * self
        return out

    def deriv(self, index: int) -> "WeightedPoly":
        """Formal partial derivative with respect to the given generator."""
        terms = {}
        for mono, coeff in self.terms.items():
            mult = mono.count(index)
            if mult == 0:
                continue
            reduced = list(mono)
            reduced.remove(index)
            mono2 = tuple(reduced)
            terms[mono2] = terms.get(mono2, Fraction(0)) + coeff * mult
        return WeightedPoly(self.basis, terms)

    def substitute(self, table) -> Fraction:
        """Evaluate with each generator index mapped through ``table``."""
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            val = coeff
            for idx in mono:
                if idx not in table:
                    raise MissingGenerator(f"no value for generator {idx}")
                val *= table[idx]
            total += val
        return total


# ---------------------------------------------------------------------
# Basis conversions
# ---------------------------------------------------------------------


def _poly_exp(coeffs, basis):
    """exp of a polynomial-coefficient series given as a list indexed by the
    series exponent; coeffs[0] must be zero."""
    n_max = len(coeffs) - 1
    out = [WeightedPoly.one(basis)] + [WeightedPoly.zero(basis)] * n_max
    for n in range(1, n_max + 1):
        acc = WeightedPoly.zero(basis)
        for k in range(1, n + 1):
            if not coeffs[k].is_zero():
                acc = acc + coeffs[k] * out[n - k] * k
        out[n] = acc * Fraction(1, n)
    return out


def _h_from_p(l: int, bold: bool) -> WeightedPoly:
    # ordinary family: -(1/l) [u^(l+1)] exp(-l sum_s u^(s+1) p_s)
    # spin family:   -(1/2l) [u^(l+1)] exp(-2l sum_{s odd} u^(s+1) p_s);
    # the doubled exponent is what matches the top-weight part of the
    # cycle-type expansion bold_f_in_p and the ground-state values below
    basis = "bold_p" if bold else "p"
    scale = 2 * l if bold else l
    n_max = l + 1
    coeffs = [WeightedPoly.zero(basis) for _ in range(n_max + 1)]
    for s in range(1, n_max):
        if bold and s % 2 == 0:
            continue
        coeffs[s + 1] = WeightedPoly.gen(basis, s) * Fraction(-scale)
    series = _poly_exp(coeffs, basis)
    return series[l + 1] * Fraction(-1, scale)


@lru_cache(maxsize=None)
def h_in_p(l: int) -> WeightedPoly:
    """The degree-l generator of the h family written in the p family.

    h_1 = p1, h_2 = p2, h_3 = p3 - 3/2 p1^2; homogeneous of weight l+1.
    """
    if l < 1:
        raise ValueError("index must be >= 1")
    return _h_from_p(l, bold=False)


@lru_cache(maxsize=None)
def bold_h_in_p(l: int) -> WeightedPoly:
    if l < 1 or l % 2 == 0:
        raise EvenIndex("spin generators have odd index")
    return _h_from_p(l, bold=True)


def _subst_generators(poly: WeightedPoly, image, target_basis: str) -> WeightedPoly:
    out = WeightedPoly.zero(target_basis)
    for mono, coeff in poly.terms.items():
        term = WeightedPoly.one(target_basis) * coeff
        for idx in mono:
            term = term * image(idx)
        out = out + term
    return out


@lru_cache(maxsize=None)
def p_in_h(l: int) -> WeightedPoly:
    if l < 1:
        raise ValueError("index must be >= 1")
    rest = h_in_p(l) - WeightedPoly.gen("p", l)
    return WeightedPoly.gen("h", l) - _subst_generators(rest, p_in_h, "h")


@lru_cache(maxsize=None)
def bold_p_in_h(l: int) -> WeightedPoly:
    if l < 1 or l % 2 == 0:
        raise EvenIndex("spin generators have odd index")
    rest = bold_h_in_p(l) - WeightedPoly.gen("bold_p", l)
    return WeightedPoly.gen("bold_h", l) - _subst_generators(rest, bold_p_in_h,
                                                             "bold_h")


def convert(poly: WeightedPoly, target: str) -> WeightedPoly:
    if target not in BASES:
        raise WrongBasis(f"unknown basis {target!r}")
    if poly.basis == target:
        return poly
    pairs = {
        ("h", "p"): h_in_p,
        ("p", "h"): p_in_h,
        ("bold_h", "bold_p"): bold_h_in_p,
        ("bold_p", "bold_h"): bold_p_in_h,
    }
    image = pairs.get((poly.basis, target))
    if image is None:
        raise WrongBasis(f"no conversion {poly.basis} -> {target}")
    return _subst_generators(poly, image, target)


@lru_cache(maxsize=None)
def bold_f_in_p(l: int) -> WeightedPoly:
    """Spin variant of the cycle-type generators, expressed in bold_p.

    Extracted as -(1/2l) times the t^(l+1) coefficient of
    prod_{j=1}^{l-1}(1 - j t) * exp(sum_{j odd} (2 p_j t^j / j)(1 - (1-lt)^{-j})).
    """
    if l < 1 or l % 2 == 0:
        raise EvenIndex("spin generators have odd index")
    basis = "bold_p"
    n_max = l + 1
    # W[n]: coefficient of t^n in the exponent
    w = [WeightedPoly.zero(basis) for _ in range(n_max + 1)]
    for j in range(1, n_max + 1, 2):
        scale = Fraction(2, j)
        # (1 - (1-lt)^{-j}) = -sum_{m>=1} C(j-1+m, m) l^m t^m
        for m in range(1, n_max - j + 1):
            binom = math.comb(j - 1 + m, m)
            w[j + m] = w[j + m] + WeightedPoly.gen(basis, j) * (
                -scale * binom * Fraction(l) ** m)
    g = _poly_exp(w, basis)
    # multiply by the polynomial prefactor prod (1 - j t)
    pref = [Fraction(1)]
    for j in range(1, l):
        nxt = [Fraction(0)] * (len(pref) + 1)
        for e, c in enumerate(pref):
            nxt[e] += c
            nxt[e + 1] -= c * j
        pref = nxt
    target = WeightedPoly.zero(basis)
    for e, c in enumerate(pref):
        if e <= n_max and c != 0:
            target = target + g[n_max - e] * c
    return target * Fraction(-1, 2 * l)


def partial2(poly: WeightedPoly) -> WeightedPoly:
    """Derivation sending p_1 to 1 and p_l to l(l-1) p_{l-2} (index 0 is 0).

    Defined on the p-type bases only.
    """
    if poly.basis not in ("p", "bold_p"):
        raise WrongBasis("partial2 acts on p-type bases")
    out = poly.deriv(1)
    for l in sorted(poly.indices()):
        if l < 3:
            continue
        out = out + WeightedPoly.gen(poly.basis, l - 2) * poly.deriv(l) * (l * (l - 1))
    return out


# ---------------------------------------------------------------------
# Two-point and n-point series
# ---------------------------------------------------------------------


class MultiSeries:
    """Truncated series in several variables with WeightedPoly coefficients.

    ``bounds[i]`` is the largest retained exponent of variable i; every kept
    exponent vector is componentwise >= (1,..,1).
    """

    __slots__ = ("basis", "bounds", "terms")

    def __init__(self, basis, bounds, terms):
        self.basis = basis
        self.bounds = tuple(bounds)
        self.terms = terms

    def coeff(self, expvec) -> WeightedPoly:
        expvec = tuple(expvec)
        if any(e > b for e, b in zip(expvec, self.bounds)):
            raise ValueError("exponent beyond retained bounds")
        return self.terms.get(expvec, WeightedPoly.zero(self.basis))


def _bivariate_mul(t1, t2, bi, bj, basis):
    out = {}
    for (a1, b1), p1 in t1.items():
        for (a2, b2), p2 in t2.items():
            a, b = a1 + a2, b1 + b2
            if a > bi or b > bj:
                continue
            key = (a, b)
            prod = p1 * p2
            out[key] = out[key] + prod if key in out else prod
    return {k: v for k, v in out.items() if not v.is_zero()}


@lru_cache(maxsize=None)
def two_point(bi: int, bj: int, basis: str = "h") -> MultiSeries:
    """Coefficients of the two-variable series pairing two zeros.

    Pole-free closed form: (1 + z w S1) / (1 - z w S0) - 1 where
    S0 = sum_l g_l sigma_{l-1}, S1 = sum_l l g_l sigma_{l-1} and sigma_m is
    the complete homogeneous sum of degree m in the two variables.
    Anchors: [z w] = 2 g_1, [z^2 w] = 3 g_2, [z^2 w^2] = 2 g_1^2 + 4 g_3.
    """
    if basis not in ("h", "bold_h"):
        raise WrongBasis("two_point produces h-type coefficients")
    s0 = {}
    s1 = {}
    for l in range(1, bi + bj):
        if _is_bold(basis) and l % 2 == 0:
            continue
        gen = WeightedPoly.gen(basis, l)
        for a in range(0, min(l - 1, bi - 1) + 1):
            b = l - 1 - a
            if b > bj - 1:
                continue
            key = (a, b)
            s0[key] = s0.get(key, WeightedPoly.zero(basis)) + gen
            s1[key] = s1.get(key, WeightedPoly.zero(basis)) + gen * l
    u = {(a + 1, b + 1): p for (a, b), p in s0.items()}           # z w S0
    s1x = {(a + 1, b + 1): p for (a, b), p in s1.items()}         # z w S1
    geom = {(0, 0): WeightedPoly.one(basis)}
    power = {(0, 0): WeightedPoly.one(basis)}
    for _ in range(min(bi, bj)):
        power = _bivariate_mul(power, u, bi, bj, basis)
        if not power:
            break
        for k, p in power.items():
            geom[k] = geom[k] + p if k in geom else p
    result = dict(geom)
    for k, p in _bivariate_mul(s1x, geom, bi, bj, basis).items():
        result[k] = result[k] + p if k in result else p
    result.pop((0, 0), None)
    result = {k: v for k, v in result.items()
              if not v.is_zero() and k[0] >= 1 and k[1] >= 1}
    return MultiSeries(basis, (bi, bj), result)


def _derivative_table(ms: MultiSeries):
    table = {}
    for vec, poly in ms.terms.items():
        for l in poly.indices():
            d = poly.deriv(l)
            if d.is_zero():
                continue
            table.setdefault(l, {})[vec] = d
    return table


def _d2_accumulate(total, f, pos_f, g, pos_g, bounds, basis):
    tab_f = _derivative_table(f)
    tab_g = _derivative_table(g)
    if not tab_f or not tab_g:
        return
    lmax_f = max(tab_f)
    lmax_g = max(tab_g)
    c_series = two_point(lmax_f, lmax_g, basis)
    n = len(bounds)
    for l1, entries1 in tab_f.items():
        for l2, entries2 in tab_g.items():
            c_poly = c_series.terms.get((l1, l2))
            if c_poly is None:
                continue
            for vec1, p1 in entries1.items():
                for vec2, p2 in entries2.items():
                    vec = [0] * n
                    for pos, e in zip(pos_f, vec1):
                        vec[pos] = e
                    for pos, e in zip(pos_g, vec2):
                        vec[pos] = e
                    vec = tuple(vec)
                    if any(e > b for e, b in zip(vec, bounds)):
                        continue
                    contrib = c_poly * p1 * p2
                    total[vec] = total[vec] + contrib if vec in total else contrib


@lru_cache(maxsize=None)
def multi_point(bounds: tuple, basis: str = "h") -> MultiSeries:
    """n-variable coefficient series, built from the two-point series by the
    splitting recursion: 2(n-1) times the n-point series equals the sum of
    the pairing operator over ordered splits into two nonempty groups."""
    bounds = tuple(bounds)
    n = len(bounds)
    if n == 0:
        raise ValueError("need at least one variable")
    if n == 1:
        terms = {(e,): WeightedPoly.gen(basis, e)
                 for e in range(1, bounds[0] + 1)
                 if not (_is_bold(basis) and e % 2 == 0)}
        return MultiSeries(basis, bounds, terms)
    if n == 2:
        return two_point(bounds[0], bounds[1], basis)
    total = {}
    full = (1 << n) - 1
    for mask in range(1, full):
        if not mask & 1:
            continue                      # fix position 0 in the first group
        pos_f = tuple(i for i in range(n) if mask >> i & 1)
        pos_g = tuple(i for i in range(n) if not mask >> i & 1)
        f = multi_point(tuple(bounds[i] for i in pos_f), basis)
        g = multi_point(tuple(bounds[i] for i in pos_g), basis)
        _d2_accumulate(total, f, pos_f, g, pos_g, bounds, basis)
    scale = Fraction(2, 2 * (n - 1))      # unordered splits counted once
    terms = {vec: poly * scale for vec, poly in total.items()
             if not poly.is_zero()}
    return MultiSeries(basis, bounds, terms)


def pairing_coefficient(bounds, basis: str = "h") -> WeightedPoly:
    """Top coefficient [z_1^{b_1} ... z_n^{b_n}] of the n-point series."""
    bounds = tuple(bounds)
    return multi_point(bounds, basis).coeff(bounds)
