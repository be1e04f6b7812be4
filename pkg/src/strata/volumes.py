"""Normalized Masur-Veech volumes of strata of Abelian differentials, by two
independent routes, plus spin components, hyperelliptic components, and
large-genus asymptotic reports.

A signature is a tuple of nonnegative zero orders with even sum; the genus
satisfies (order sum) = 2g - 2.  All volumes carry the (m_i + 1) zero-order
normalization and are rational multiples of pi^(2g).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import EmptySignature, NotHyperellipticShape, OddEntry, RouteMismatch
from .exact import PI_APPROX, PiScalar, double_factorial
from .series import alpha_table, bold_alpha_table
from .symring import pairing_coefficient
from .combinatorics import (BackboneDecomposition, enumerate_backbones,
                            genus_of, spin_assignments, validate_signature)
from .hurwitz import h_p1_two


def canonical(mu) -> tuple:
    mu = validate_signature(mu)
    if len(mu) == 0:
        raise EmptySignature("signature needs at least one zero order")
    return tuple(sorted(mu, reverse=True))


@lru_cache(maxsize=None)
def v_minimal(g: int) -> PiScalar:
    """Volume of the single-zero stratum in genus g."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    alpha = alpha_table(2 * g - 1)[2 * g - 1]
    coeff = 2 * Fraction(-4) ** g * alpha / math.factorial(2 * g - 1)
    return PiScalar(coeff, 2 * g)


def backbone_term(mu, decomposition: BackboneDecomposition) -> Fraction:
    """Contribution of one ordered decomposition to the volume of ``mu``
    (rational part; the pi power is always 2g)."""
    mu = canonical(mu)
    m1, m2 = mu[0], mu[1]
    g, n = genus_of(mu), len(mu)
    k = decomposition.k
    h = h_p1_two(m1, m2, tuple(sorted(decomposition.twists)))
    if h == 0:
        return Fraction(0)
    prod = Fraction(1)
    for part in decomposition.parts:
        sub = v_stratum(part.signature)
        prod *= math.factorial(2 * part.genus - 1 + len(part.zeros)) * sub.coeff
    return (Fraction(h) * prod * decomposition.count
            / (2 ** (k - 1) * math.factorial(k))
            / math.factorial(2 * g - 3 + n))


def backbone_pair_term(mu_pair_first, decomposition: BackboneDecomposition) -> Fraction:
    """Like backbone_term, but the signature already has the distinguished
    pair in its first two slots and is used as given (not resorted)."""
    mu = mu_pair_first
    m1, m2 = mu[0], mu[1]
    g, n = genus_of(mu), len(mu)
    k = decomposition.k
    h = h_p1_two(m1, m2, tuple(sorted(decomposition.twists)))
    if h == 0:
        return Fraction(0)
    prod = Fraction(1)
    for part in decomposition.parts:
        sub = v_stratum(part.signature)
        prod *= math.factorial(2 * part.genus - 1 + len(part.zeros)) * sub.coeff
    return (Fraction(h) * prod * decomposition.count
            / (2 ** (k - 1) * math.factorial(k))
            / math.factorial(2 * g - 3 + n))


def v_backbone_pair(mu, i: int = 0, j: int = 1) -> PiScalar:
    """Backbone sum with zeros i and j distinguished; the choice never
    changes the value, which equals v_stratum(mu)."""
    mu = validate_signature(mu)
    g = genus_of(mu)
    mu_ft = (mu[i], mu[j]) + tuple(m for pos, m in enumerate(mu)
                                   if pos not in (i, j))
    total = sum((backbone_pair_term(mu_ft, dec)
                 for dec in enumerate_backbones(mu, i, j)), Fraction(0))
    return PiScalar(total, 2 * g)


@lru_cache(maxsize=None)
def _v_backbone(mu: tuple) -> PiScalar:
    g, n = genus_of(mu), len(mu)
    if n == 1:
        return v_minimal(g)
    total = sum((backbone_term(mu, dec) for dec in enumerate_backbones(mu)),
                Fraction(0))
    return PiScalar(total, 2 * g)


@lru_cache(maxsize=None)
def _v_pairing(mu: tuple) -> PiScalar:
    g, n = genus_of(mu), len(mu)
    bounds = tuple(m + 1 for m in mu)
    value = pairing_coefficient(bounds).substitute(alpha_table(max(2 * g - 1, 1)))
    coeff = 2 * Fraction(-4) ** g * value / math.factorial(2 * g - 2 + n)
    return PiScalar(coeff, 2 * g)


def v_stratum(mu, method: str = "backbone") -> PiScalar:
    """Volume of the stratum with the given signature.

    method: "backbone" (pair-splitting recursion), "d2" (n-point pairing
    specialization), or "both" (computed twice, raising on disagreement).
    """
    mu = canonical(mu)
    if method == "backbone":
        return _v_backbone(mu)
    if method == "d2":
        return _v_pairing(mu)
    if method == "both":
        b, d = _v_backbone(mu), _v_pairing(mu)
        if b != d:
            raise RouteMismatch(
                f"volume routes disagree for {mu}: backbone {b!r} vs pairing {d!r}")
        return b
    raise ValueError(f"unknown method {method!r}")


def v_stratum_d2(mu) -> PiScalar:
    return v_stratum(mu, method="d2")


def a_value(mu) -> Fraction:
    """Reduced per-zero volume coefficient: the volume divided by
    2 (2 pi i)^(2g) prod(m_i + 1) / (2g - 3 + n)!."""
    mu = canonical(mu)
    g, n = genus_of(mu), len(mu)
    v = v_stratum(mu)
    prod = math.prod(m + 1 for m in mu)
    return v.coeff * math.factorial(2 * g - 3 + n) / (2 * Fraction(-4) ** g * prod)


def a_value_direct(mu) -> Fraction:
    """Same quantity from the pairing definition (cross-check route)."""
    mu = canonical(mu)
    g, n = genus_of(mu), len(mu)
    bounds = tuple(m + 1 for m in mu)
    value = pairing_coefficient(bounds).substitute(alpha_table(max(2 * g - 1, 1)))
    return value / ((2 * g - 2 + n) * math.prod(bounds))


def _require_even(mu):
    for m in mu:
        if m % 2 != 0:
            raise OddEntry(f"spin refinement needs even zero orders, got {mu}")


@lru_cache(maxsize=None)
def _v_spin_delta(mu: tuple) -> PiScalar:
    g, n = genus_of(mu), len(mu)
    if n == 1:
        alpha = bold_alpha_table(2 * g - 1)[2 * g - 1]
        coeff = 2 * Fraction(-4) ** g * alpha / math.factorial(2 * g - 1)
        return PiScalar(coeff, 2 * g)
    bounds = tuple(m + 1 for m in mu)
    value = pairing_coefficient(bounds, "bold_h").substitute(
        bold_alpha_table(max(2 * g - 1, 1)))
    coeff = 2 * Fraction(-4) ** g * value / math.factorial(2 * g - 2 + n)
    return PiScalar(coeff, 2 * g)


def v_spin_delta(mu) -> PiScalar:
    """Even-spin volume minus odd-spin volume."""
    mu = canonical(mu)
    _require_even(mu)
    return _v_spin_delta(mu)


def v_spin(mu, parity: str) -> PiScalar:
    """Volume of the even or odd spin part of the stratum."""
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    mu = canonical(mu)
    _require_even(mu)
    v = v_stratum(mu)
    delta = v_spin_delta(mu)
    half = Fraction(1, 2)
    if parity == "even":
        coeff = (v.coeff + delta.coeff) * half
    else:
        coeff = (v.coeff - delta.coeff) * half
    return PiScalar(coeff, v.pi_power)


def v_spin_backbone(mu, parity: str) -> PiScalar:
    """Spin volume through the pair-splitting recursion with a parity-refined
    sum: each block gets a spin parity, the total over blocks matching the
    requested one, with the block volumes taken in their spin parts."""
    mu = canonical(mu)
    _require_even(mu)
    g, n = genus_of(mu), len(mu)
    if n < 2:
        raise ValueError("the refined recursion needs at least two zeros")
    want = 1 if parity == "odd" else 0
    m1, m2 = mu[0], mu[1]
    total = Fraction(0)
    for dec in enumerate_backbones(mu):
        k = dec.k
        h = h_p1_two(m1, m2, tuple(sorted(dec.twists)))
        if h == 0:
            continue
        for phi in spin_assignments(k, want):
            prod = Fraction(1)
            for part, spin_bit in zip(dec.parts, phi):
                sub = v_spin(part.signature, "odd" if spin_bit else "even")
                if sub.coeff == 0:
                    prod = Fraction(0)
                    break
                prod *= (math.factorial(2 * part.genus - 1 + len(part.zeros))
                         * sub.coeff)
            total += (Fraction(h) * prod * dec.count
                      / (2 ** (k - 1) * math.factorial(k)))
    total /= math.factorial(2 * g - 3 + n)
    return PiScalar(total, 2 * g)


def v_spin_backbone_check(mu) -> bool:
    """True when the refined recursion reproduces both spin volumes."""
    return all(v_spin_backbone(mu, parity) == v_spin(mu, parity)
               for parity in ("odd", "even"))


def v_hyp(mu) -> PiScalar:
    """Volume of the hyperelliptic component; shapes (2g-2) and (g-1, g-1)."""
    mu = canonical(mu)
    g, n = genus_of(mu), len(mu)
    if n == 1:
        coeff = ((2 * g - 1) * Fraction(2, math.factorial(2 * g + 1))
                 * Fraction(double_factorial(2 * g - 3),
                            double_factorial(2 * g - 2)))
        return PiScalar(coeff, 2 * g)
    if n == 2 and mu[0] == mu[1]:
        coeff = (g * g * Fraction(8, math.factorial(2 * g + 2))
                 * Fraction(double_factorial(2 * g - 2),
                            double_factorial(2 * g - 1)))
        return PiScalar(coeff, 2 * g)
    raise NotHyperellipticShape(
        f"{mu} is not a single zero or a pair of equal zeros")


def hyp_recursion_check(g: int) -> bool:
    """True when the hyperelliptic two-zero volume satisfies the convolution
    recursion against the single-zero values."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    rhs = v_hyp((2 * g - 2,)).coeff
    for l in range(1, g):
        rhs += (math.factorial(2 * l - 1) * v_hyp((2 * l - 2,)).coeff
                * math.factorial(2 * (g - l) - 1) * v_hyp((2 * (g - l) - 2,)).coeff
                / (4 * math.factorial(2 * g - 1)))
    return v_hyp((g - 1, g - 1)) == PiScalar(rhs, 2 * g)


def merges_of(mu):
    """Signatures obtained by replacing two zeros with one of the summed
    order (genus preserved)."""
    mu = canonical(mu)
    out = set()
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            rest = [m for pos, m in enumerate(mu) if pos not in (i, j)]
            out.add(canonical(tuple(rest) + (mu[i] + mu[j],)))
    return sorted(out)


def asymptotic_report(signatures) -> list:
    """Rows with the numeric volume, its deviation from the large-genus
    limit 4 - 2 pi^2 / (3 (2g - 3 + n)), the g^2-scaled deviation, and an
    exact monotonicity flag (volume does not increase under merging zeros)."""
    pi_sq = float(PI_APPROX * PI_APPROX)
    rows = []
    for mu in signatures:
        mu = canonical(mu)
        g, n = genus_of(mu), len(mu)
        v = v_stratum(mu)
        v_num = v.to_float()
        vhat = v_num - 4 + 2 * pi_sq / (3 * (2 * g - 3 + n))
        monotone = all(v.coeff >= v_stratum(m2).coeff for m2 in merges_of(mu)) \
            if n >= 2 else True
        rows.append({
            "mu": mu,
            "g": g,
            "n": n,
            "volume": v,
            "volume_float": v_num,
            "deviation": vhat,
            "scaled_deviation": g * g * vhat,
            "monotone": monotone,
        })
    return rows
