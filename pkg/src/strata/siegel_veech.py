"""Siegel-Veech constants: area constants by three routes (twist recursion,
derivation on the pairing coefficient, minimal-stratum series ratio) and
saddle-connection counts between a pair of zeros with their configuration
decomposition.

Area constants are rational multiples of pi^(-2); the homologous-multiple
saddle-connection constant is the plain rational (m_i+1)(m_j+1).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import TooFewZeros
from .exact import PI_APPROX, PiScalar
from .series import A_series, alpha_table, d_min_series, delta_series
from .symring import convert, pairing_coefficient, partial2
from .combinatorics import (BackboneDecomposition, configurations,
                            enumerate_backbones, genus_of)
from .hurwitz import h_p1_two
from .volumes import a_value, backbone_pair_term, canonical, v_stratum


@lru_cache(maxsize=None)
def d_minimal(g: int) -> Fraction:
    """Reduced saddle-connection coefficient of the single-zero stratum."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    return delta_series(2 * g).coeff(2 * g) / (2 * g - 1) ** 2


def _d_sum(mu: tuple, i: int, j: int) -> Fraction:
    m1, m2 = mu[i], mu[j]
    total = Fraction(0)
    for dec in enumerate_backbones(mu, i, j):
        k = dec.k
        h = h_p1_two(m1, m2, tuple(sorted(dec.twists)))
        if h == 0:
            continue
        first = dec.parts[0]
        first_sig = first.signature
        a_first = a_value(first_sig)
        prod = Fraction(h, math.factorial(k - 1)) * _d_value(canonical(first_sig)) \
            / a_first
        for part in dec.parts:
            prod *= ((2 * part.genus - 1 + len(part.zeros))
                     * part.pole_twist * a_value(part.signature))
        total += prod * dec.count
    return total / ((m1 + 1) * (m2 + 1))


@lru_cache(maxsize=None)
def _d_value(mu: tuple) -> Fraction:
    g, n = genus_of(mu), len(mu)
    if n == 1:
        return d_minimal(g)
    return _d_sum(mu, 0, 1)


def d_value(mu) -> Fraction:
    """Reduced saddle-connection coefficient; the twist-weighted analogue of
    a_value, with the first block of each decomposition distinguished."""
    return _d_value(canonical(mu))


def d_pair_value(mu, i: int = 0, j: int = 1) -> Fraction:
    """Twist recursion evaluated with zeros i and j distinguished; the
    choice never changes the value, which equals d_value(mu)."""
    mu = tuple(mu)
    if len(mu) == 1:
        return d_minimal(genus_of(mu))
    return _d_sum(mu, i, j)


def c_area(mu) -> PiScalar:
    """Area Siegel-Veech constant, -(1/4) d/a in units of pi^(-2)."""
    mu = canonical(mu)
    return PiScalar(-Fraction(1, 4) * d_value(mu) / a_value(mu), -2)


def c_area_partial2(mu) -> PiScalar:
    """Area constant through the derivation route: -(1/8) times the ratio of
    the derived pairing coefficient to the plain one, in units of pi^(-2)."""
    mu = canonical(mu)
    g = genus_of(mu)
    bounds = tuple(m + 1 for m in mu)
    table = alpha_table(max(2 * g - 1, 1))
    top = pairing_coefficient(bounds)
    derived = convert(partial2(convert(top, "p")), "h")
    num = derived.substitute(table)
    den = top.substitute(table)
    return PiScalar(-Fraction(1, 8) * num / den, -2)


def c_area_minimal_ratio(g: int) -> PiScalar:
    """Area constant of the single-zero stratum from the ratio of the two
    minimal-stratum series at the odd exponent 2g-1."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    e = 2 * g - 1
    num = d_min_series(e).coeff(e)
    den = A_series(e).coeff(e)
    return PiScalar(-Fraction(1, 8) * num / den, -2)


def c_sc_hom(mu, i: int = 0, j: int = 1) -> Fraction:
    """Saddle-connection constant counting homologous multiplicities between
    zeros i and j: (m_i + 1)(m_j + 1)."""
    mu = tuple(mu)
    n = len(mu)
    if n < 2:
        raise TooFewZeros("need two zeros to join by a saddle connection")
    if i == j or not (0 <= i < n) or not (0 <= j < n):
        raise ValueError("zeros must be two distinct positions")
    return Fraction((mu[i] + 1) * (mu[j] + 1))


def configuration_rows(mu, i: int = 0, j: int = 1) -> list:
    """Per-configuration split of the saddle-connection count between zeros
    i and j: each row carries the configuration, its share of the homologous
    count, and the summed area constant of its parts."""
    mu = tuple(mu)
    total_hom = c_sc_hom(mu, i, j)
    v_total = v_stratum(mu)
    mu_for_terms = (mu[i], mu[j]) + tuple(m for pos, m in enumerate(mu)
                                          if pos not in (i, j))
    rows = []
    for config in configurations(mu, i, j):
        rep = BackboneDecomposition(config.parts)
        term = _ordered_term(mu_for_terms, rep) * config.ordered_count
        hom_share = total_hom * term / v_total.coeff
        area_sum = None
        for part in config.parts:
            ca = c_area(part.signature)
            area_sum = ca if area_sum is None else area_sum + ca
        rows.append({
            "parts": tuple(part.signature for part in config.parts),
            "k": config.k,
            "ordered_count": config.ordered_count,
            "hom_share": hom_share,
            "area_sum": area_sum,
        })
    return rows


_ordered_term = backbone_pair_term


def sc_decomposition_check(mu, i: int = 0, j: int = 1) -> bool:
    """Two exact identities: the homologous shares sum to (m_i+1)(m_j+1),
    and weighting each configuration's share by its summed area constant
    reproduces (m_i+1)(m_j+1) c_area(mu)."""
    rows = configuration_rows(mu, i, j)
    total_hom = c_sc_hom(mu, i, j)
    if sum((r["hom_share"] for r in rows), Fraction(0)) != total_hom:
        return False
    weighted = None
    for r in rows:
        contrib = r["area_sum"] * r["hom_share"]
        weighted = contrib if weighted is None else weighted + contrib
    return weighted == c_area(tuple(mu)) * total_hom


def c_area_asymptotic_report(signatures, gmax: int = 12) -> list:
    """Numeric area constants against the large-genus prediction
    1/2 - 1/(2 sum(m_i + 1)), with the g^2-scaled gap."""
    pi_sq = float(PI_APPROX * PI_APPROX)
    rows = []
    for mu in signatures:
        mu = canonical(mu)
        g = genus_of(mu)
        if g > gmax:
            raise ValueError(f"genus {g} beyond report cutoff {gmax}")
        ca = c_area(mu)
        ca_num = ca.to_float()
        predicted = 0.5 - 1.0 / (2 * sum(m + 1 for m in mu))
        gap = ca_num - predicted
        rows.append({
            "mu": mu,
            "g": g,
            "c_area": ca,
            "c_area_float": ca_num,
            "predicted": predicted,
            "gap": gap,
            "scaled_gap": g * g * gap,
        })
    return rows
