"""Self-contained correctness checks.

Each check recomputes a family of quantities along at least two independent
routes (or against frozen exact values) and reports a single pass/fail with a
short diagnostic.  The CLI `verify` subcommand and the acceptance test suite
both run these.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .exact import PiScalar
from . import series as S
from .combinatorics import genus_of, signatures_of_genus
from .hurwitz import h_p1_two, hurwitz_tuple_oracle
from .oracle import (count_covers_brute, count_covers_character, f_eval,
                     p_eval, partitions_of, q_bracket, partition_gf,
                     connected_bracket)
from .siegel_veech import (c_area, c_area_minimal_ratio, c_area_partial2,
                           c_sc_hom, d_pair_value, d_value,
                           sc_decomposition_check)
from .volumes import (asymptotic_report, v_backbone_pair, v_hyp,
                      hyp_recursion_check, v_spin, v_spin_delta,
                      v_spin_backbone_check, v_stratum)

F = Fraction

ALPHA_EXPECTED = {1: F(-1, 24), 3: F(3, 640), 5: F(-1525, 580608),
                  7: F(615881, 199065600)}
DELTA_EXPECTED = {2: F(1, 2), 4: F(-1, 16), 6: F(91, 2304),
                  8: F(-41737, 829440)}
B_EXPECTED = {0: F(1), 2: F(-1, 24), 4: F(7, 5760)}

VOLUME_ANCHORS = {
    (0,): PiScalar(F(1, 3), 2),
    (2,): PiScalar(F(1, 40), 4),
    (1, 1): PiScalar(F(4, 135), 4),
    (4,): PiScalar(F(305, 108864), 6),
    (2, 2): PiScalar(F(17, 5600), 6),
}

SPIN_DELTA_ANCHORS = {
    (0,): PiScalar(F(-1, 3), 2),
    (2,): PiScalar(F(-1, 40), 4),
    (4,): PiScalar(F(-143, 108864), 6),
}

SPIN_DELTA_MAGNITUDES = {
    1: F(1, 3), 2: F(1, 40), 3: F(143, 108864),
    4: F(15697, 279936000), 5: F(2561, 1103872000),
}

C_AREA_ANCHORS = {
    (0,): PiScalar(F(3), -2),
    (2,): PiScalar(F(10, 3), -2),
    (1, 1): PiScalar(F(15, 4), -2),
}


def check_series_coefficients(gmax=None):
    alpha = S.alpha_table(9)
    for ell, expected in ALPHA_EXPECTED.items():
        if alpha[ell] != expected:
            return False, f"alpha_{ell} = {alpha[ell]} != {expected}"
    for ell in (2, 4, 6, 8):
        if alpha.get(ell, F(0)) != 0:
            return False, f"alpha_{ell} nonzero"
    delta = S.delta_series(8)
    for e, expected in DELTA_EXPECTED.items():
        if delta.coeff(e) != expected:
            return False, f"delta coeff t^{e} = {delta.coeff(e)} != {expected}"
    b = S.b_table(4)
    for j, expected in B_EXPECTED.items():
        if b[j] != expected:
            return False, f"b_{j} = {b[j]} != {expected}"
    if not S.lagrange_consistency_check(9):
        return False, "Lagrange inversion consistency failed"
    return True, "alpha_1..alpha_7, delta_2..delta_8, b_0..b_4 exact"


def check_volume_anchors(gmax=None):
    for mu, expected in VOLUME_ANCHORS.items():
        for method in ("backbone", "d2"):
            got = v_stratum(mu, method=method)
            if got != expected:
                return False, f"v{mu} via {method} = {got} != {expected}"
    for mu in ((2,), (1, 1)):
        if v_hyp(mu) != VOLUME_ANCHORS[mu]:
            return False, f"v_hyp{mu} != v{mu} in genus 2"
    return True, "v(2), v(1,1), v(4), v(2,2) agree on both routes"


def check_dual_route(gmax=None):
    gmax = 5 if gmax is None else gmax
    checked = 0
    for g in range(1, gmax + 1):
        for mu in signatures_of_genus(g, max_zeros=4, allow_zero_orders=True):
            if len(mu) > 4:
                continue
            a = v_stratum(mu, method="backbone")
            b = v_stratum(mu, method="d2")
            if a != b:
                return False, f"route mismatch at {mu}: {a} vs {b}"
            checked += 1
    # invariance under reordering and zero-padding
    if v_stratum((1, 2, 1)) != v_stratum((2, 1, 1)):
        return False, "volume not symmetric under reordering"
    if v_stratum((2, 0)) != v_stratum((2,)):
        return False, "marked point changed the volume"
    # invariance under the choice of distinguished pair, in any arrangement
    pairs = 0
    for g in range(1, gmax + 1):
        for mu in signatures_of_genus(g, max_zeros=4, allow_zero_orders=True):
            if len(mu) < 2:
                continue
            v = v_stratum(mu)
            for arr in (mu, mu[::-1]):
                for i in range(len(arr)):
                    for j in range(i + 1, len(arr)):
                        if v_backbone_pair(arr, i, j) != v:
                            return False, (f"pair {i},{j} of {arr} gives a "
                                           f"different backbone sum")
                        pairs += 1
    return True, (f"{checked} strata agree on both routes; "
                  f"{pairs} distinguished-pair choices invariant")


def check_spin(gmax=None):
    for mu, expected in SPIN_DELTA_ANCHORS.items():
        got = v_spin_delta(mu)
        if got != expected:
            return False, f"v_delta{mu} = {got} != {expected}"
    for g, mag in SPIN_DELTA_MAGNITUDES.items():
        got = v_spin_delta((2 * g - 2,))
        if abs(got.coeff) != mag:
            return False, f"|v_delta| at genus {g} = {abs(got.coeff)} != {mag}"
    even_strata = []
    for g in range(1, 5):
        for mu in signatures_of_genus(g):
            if mu and all(m % 2 == 0 for m in mu):
                even_strata.append(mu)
    even_strata.append((0,))
    for mu in even_strata:
        odd = v_spin(mu, "odd")
        even = v_spin(mu, "even")
        if odd + even != v_stratum(mu):
            return False, f"odd+even != total at {mu}"
    if v_spin((0,), "even") != PiScalar(F(0), 2):
        return False, "even component in genus 1 should vanish"
    for mu in ((2, 2), (4, 2)):
        if not v_spin_backbone_check(mu):
            return False, f"spin-refined recursion failed at {mu}"
    return True, "spin differences genus 1..5 and parity splits verified"


def check_hyperelliptic(gmax=None):
    for g in range(2, 11):
        if not hyp_recursion_check(g):
            return False, f"hyperelliptic recursion failed at genus {g}"
    if not S.arctan_identity_one(20):
        return False, "central-binomial arctan identity failed"
    if not S.arctan_identity_two(20):
        return False, "squared arctan identity failed"
    return True, "recursion genus 2..10 and arctan identities to order 20"


def check_area_constants(gmax=None):
    gmax = 4 if gmax is None else gmax
    for mu, expected in C_AREA_ANCHORS.items():
        got = c_area(mu)
        if got != expected:
            return False, f"c_area{mu} = {got} != {expected}"
    checked = 0
    for g in range(1, gmax + 1):
        for mu in signatures_of_genus(g, max_zeros=3, allow_zero_orders=True):
            if len(mu) > 3:
                continue
            via_d = c_area(mu)
            via_d2 = c_area_partial2(mu)
            if via_d != via_d2:
                return False, f"c_area routes differ at {mu}"
            checked += 1
    for g in (1, 2):
        if c_area_minimal_ratio(g) != c_area((2 * g - 2,)):
            return False, f"series ratio route differs at genus {g}"
    # the twist recursion is blind to which pair is distinguished
    pairs = 0
    for g in range(1, gmax + 1):
        for mu in signatures_of_genus(g, max_zeros=4, allow_zero_orders=True):
            if len(mu) < 2:
                continue
            want = d_value(mu)
            for arr in (mu, mu[::-1]):
                for i in range(len(arr)):
                    for j in range(i + 1, len(arr)):
                        if d_pair_value(arr, i, j) != want:
                            return False, (f"twist recursion at pair {i},{j} "
                                           f"of {arr} differs")
                        pairs += 1
    dser = S.d_min_series(11)
    twice_delta = S.delta_series(12) * F(2)
    shifted = dser.shift(1)
    for e in range(2, 13):
        if shifted.coeff(e) != twice_delta.coeff(e):
            return False, f"u*D and 2*Delta differ at u^{e}"
    return True, (f"three routes agree; {checked} strata cross-checked; "
                  f"{pairs} pair choices for the twist recursion")


def check_sc_decomposition(gmax=None):
    gmax = 4 if gmax is None else gmax
    if c_sc_hom((3, 1), 0, 1) != 8:
        return False, "c_hom(3,1) != 8"
    checked = 0
    for g in range(2, gmax + 1):
        for mu in signatures_of_genus(g):
            if len(mu) < 2:
                continue
            for i in range(len(mu)):
                for j in range(i + 1, len(mu)):
                    if not sc_decomposition_check(mu, i, j):
                        return False, f"decomposition identity failed at " \
                                      f"{mu}, zeros {i},{j}"
                    checked += 1
    return True, f"{checked} signature/pair combinations verified"


def check_hurwitz_oracle(gmax=None):
    def distinct_partitions(d):
        def rec(rest, minimum):
            if rest == 0:
                yield ()
            for part in range(minimum, rest + 1):
                for tail in rec(rest - part, part + 1):
                    yield (part,) + tail
        return rec(d, 1)

    checked = 0
    for d in range(1, 8):
        for p in distinct_partitions(d):
            poles = tuple(sorted(p))
            total = sum(q + 1 for q in poles)
            for m1 in range(0, total - 1):
                m2 = total - 2 - m1
                formula = F(h_p1_two(m1, m2, poles))
                oracle = hurwitz_tuple_oracle(m1, m2, poles)
                if formula != oracle:
                    return False, (f"h({m1},{m2};{poles}) formula {formula} "
                                   f"!= oracle {oracle}")
                checked += 1
    for m1 in range(0, 6):
        for m2 in range(m1, 8 - m1):
            poles = (m1 + m2 + 1,)
            if h_p1_two(m1, m2, poles) != h_p1_two(m2, m1, poles):
                return False, f"asymmetry at ({m1},{m2})"
            if m1 + m2 >= 1 and h_p1_two(m1, m2, (m1 + m2,)) != 0:
                return False, f"degree condition violated at ({m1},{m2})"
    # repeated pole orders: the closed formula counts weightless, the
    # automorphism-weighted count can be smaller
    if h_p1_two(1, 1, (1, 1)) != 1:
        return False, "h(1,1;(1,1)) != 1"
    if hurwitz_tuple_oracle(1, 1, (1, 1)) != F(1, 2):
        return False, "weighted count of h(1,1;(1,1)) != 1/2"
    return True, f"{checked} distinct-pole profiles match the weighted count"


def check_partition_oracle(gmax=None):
    for d in range(1, 9):
        for lam in partitions_of(d):
            lhs1 = f_eval(1, lam)
            rhs1 = p_eval(1, lam) + F(1, 24)
            if lhs1 != rhs1:
                return False, f"f_1 identity failed at {lam}"
            if f_eval(2, lam) != F(1, 2) * p_eval(2, lam):
                return False, f"f_2 identity failed at {lam}"
            lhs3 = f_eval(3, lam)
            rhs3 = (F(1, 3) * p_eval(3, lam)
                    - F(1, 2) * p_eval(1, lam) ** 2
                    + F(3, 8) * p_eval(1, lam) + F(9, 640))
            if lhs3 != rhs3:
                return False, f"f_3 identity failed at {lam}"
    gf = partition_gf(8)
    for profile in ((2, 2), (3, 3)):
        fns = [lambda lam, l=l: f_eval(l, lam) for l in profile]
        def product_fn(lam, fns=fns):
            out = F(1)
            for fn in fns:
                out *= fn(lam)
            return out
        bracket = q_bracket(product_fn, 6)
        disconnected = bracket * gf.truncate(6)
        for d in range(0, 7):
            brute = count_covers_brute(profile, d)
            if disconnected.coeff(d) != brute:
                return False, (f"disconnected count at profile {profile}, "
                               f"d={d}: {disconnected.coeff(d)} != {brute}")
        for d in range(0, 7):
            if count_covers_character(profile, d) != count_covers_brute(
                    profile, d):
                return False, f"character count mismatch at {profile}, d={d}"
    fns = [lambda lam: f_eval(2, lam), lambda lam: f_eval(2, lam)]
    connected = connected_bracket(fns, 6)
    for d in range(1, 7):
        brute = count_covers_brute((2, 2), d, connected=True)
        if connected.coeff(d) != brute:
            return False, (f"connected count at d={d}: "
                           f"{connected.coeff(d)} != {brute}")
    return True, "shifted-symmetric identities and cover counts to degree 6"


def check_asymptotics(gmax=None):
    strata = []
    for g in range(2, 5):
        strata.extend(signatures_of_genus(g))
    for g in range(5, 11):
        strata.append((2 * g - 2,))
        strata.append((2 * g - 3, 1))
        strata.append((2 * g - 4, 2))
        strata.append((2 * g - 4, 1, 1))
        strata.append((g - 1, g - 1))
    rows = asymptotic_report(strata)
    worst = F(0)
    for row in rows:
        scaled = abs(row["scaled_deviation"])
        if scaled > 10:
            return False, (f"volume deviation too large at {row['mu']}: "
                           f"{float(scaled):.3f}")
        worst = max(worst, scaled)
        if not row["monotone"]:
            return False, f"volume not monotone under merging at {row['mu']}"
    worst_c = 0.0
    for mu in strata:
        ca = c_area(mu)
        g = genus_of(mu)
        predicted = F(1, 2) - F(1, 2 * sum(m + 1 for m in mu))
        gap = abs(ca.to_float() - float(predicted))
        scaled = g * g * gap
        if scaled > 10:
            return False, (f"c_area deviation too large at {mu}: "
                           f"{scaled:.3f}")
        worst_c = max(worst_c, scaled)
    return True, (f"{len(rows)} strata: max scaled volume deviation "
                  f"{float(worst):.3f}, max scaled c_area deviation "
                  f"{worst_c:.3f}")


CRITERIA = [
    (1, "exact series coefficients", check_series_coefficients),
    (2, "volume anchors by two routes", check_volume_anchors),
    (3, "dual-route volumes across strata", check_dual_route),
    (4, "spin components", check_spin),
    (5, "hyperelliptic recursion and arctan identities", check_hyperelliptic),
    (6, "area constants by three routes", check_area_constants),
    (7, "saddle-connection decomposition identity", check_sc_decomposition),
    (8, "genus-zero counts against permutation oracle", check_hurwitz_oracle),
    (9, "partition oracle identities and cover counts", check_partition_oracle),
    (10, "large-genus behavior and monotonicity", check_asymptotics),
]

SUITES = {
    "core": (1, 2, 5, 6),
    "all": tuple(number for number, _, _ in CRITERIA),
}


def run_criteria(numbers, gmax=None):
    by_number = {number: (name, fn) for number, name, fn in CRITERIA}
    results = []
    for number in numbers:
        name, fn = by_number[number]
        start = time.monotonic()
        ok, detail = fn(gmax=gmax)
        elapsed = time.monotonic() - start
        results.append({"number": number, "name": name, "ok": ok,
                        "detail": detail, "seconds": elapsed})
    return results
