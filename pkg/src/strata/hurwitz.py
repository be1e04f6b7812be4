"""Genus-zero covering counts with two distinguished zeros (closed formula),
their many-zero extension through rooted trees, and a brute-force
permutation oracle for small degree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .errors import DegreeTooLarge, TooFewZeros
from .combinatorics import enumerate_rooted_trees


@lru_cache(maxsize=None)
def h_p1_two(m1: int, m2: int, poles: tuple) -> int:
    """Count for two zeros of orders m1, m2 and pole twists ``poles``.

    (k-1)! times the t^(m1+1) coefficient of prod_i t(1-t^{p_i})/(1-t);
    zero unless sum(p_i + 1) = m1 + m2 + 2.
    """
    poles = tuple(sorted(poles))
    if m1 < 0 or m2 < 0 or any(p < 1 for p in poles):
        raise ValueError("zero orders must be >= 0 and twists >= 1")
    k = len(poles)
    if sum(p + 1 for p in poles) != m1 + m2 + 2:
        return 0
    target = m1 + 1
    # product of t + t^2 + ... + t^p, truncated above t^target
    acc = [0] * (target + 1)
    acc[0] = 1
    for p in poles:
        nxt = [0] * (target + 1)
        for e, c in enumerate(acc):
            if c == 0:
                continue
            for step in range(1, min(p, target - e) + 1):
                nxt[e + step] += c
        acc = nxt
    return math.factorial(k - 1) * acc[target]


def h_p1_general(mu0, mu_inf) -> int:
    """Genus-zero count with any number of zeros: two-zero closed formula at
    the root times one factor per extra zero, summed over rooted-tree data."""
    mu0 = tuple(mu0)
    mu_inf = tuple(mu_inf)
    if len(mu0) < 2:
        raise TooFewZeros("need at least two zeros")
    if len(mu0) == 2:
        return h_p1_two(mu0[0], mu0[1], tuple(sorted(mu_inf)))
    total = 0
    for tree in enumerate_rooted_trees(mu0, mu_inf):
        n_vert = len(mu0) - 1
        children = {v: [] for v in range(n_vert)}
        for v in range(1, n_vert):
            children[tree.parent[v - 1]].append(v)
        factor = 1
        for v in range(1, n_vert):
            local = tuple(sorted(tree.poles_at[v]
                                 + tuple(tree.twists[c] for c in children[v])))
            m_tilde = tree.twists[v] - 1
            factor *= h_p1_two(mu0[v + 1], m_tilde, local)
            if factor == 0:
                break
        if factor == 0:
            continue
        root_local = tuple(sorted(tree.poles_at[0]
                                  + tuple(tree.twists[c] for c in children[0])))
        total += factor * h_p1_two(mu0[0], mu0[1], root_local)
    return total


def _cycles_on(points, length):
    """All cycles of the given length as dict fragments, over chosen points."""
    for support in combinations(points, length):
        first = support[0]
        for rest in permutations(support[1:]):
            cyc = (first,) + rest
            yield {cyc[i]: cyc[(i + 1) % length] for i in range(length)}


def _cycle_type(perm, d):
    seen = [False] * d
    lens = []
    for start in range(d):
        if seen[start]:
            continue
        n, cur = 0, start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
            n += 1
        lens.append(n)
    return tuple(sorted(lens))


def _transitive(gens, d):
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == d


@lru_cache(maxsize=None)
def hurwitz_tuple_oracle(m1: int, m2: int, poles: tuple) -> Fraction:
    """Weighted count |A|/d! of pairs of cycles whose product has cycle type
    ``poles`` and which generate a transitive group, at degree d = sum(poles).

    A zero of order 0 is a marked unramified point (its cycle is trivial);
    each such marking multiplies the weighted count by d, one marking per
    sheet.  Counts covers with automorphism weights, which differs from
    h_p1_two when ``poles`` has repeated entries.
    """
    poles = tuple(sorted(poles))
    d = sum(poles)
    if d > 8:
        raise DegreeTooLarge(f"degree {d} beyond the oracle cutoff 8")
    if d < max(m1 + 1, m2 + 1) or d < 1:
        return Fraction(0)
    target_type = poles
    points = tuple(range(d))
    # only sigma1's conjugacy class matters: fix one representative cycle and
    # scale by the number of (m1+1)-cycles in the symmetric group
    if m1 == 0:
        s1 = points
        n1 = 1
    else:
        c1 = {x: (x + 1) % (m1 + 1) for x in range(m1 + 1)}
        s1 = tuple(c1.get(x, x) for x in points)
        n1 = math.comb(d, m1 + 1) * math.factorial(m1)
    sigma2_list = [dict(c) for c in _cycles_on(points, m2 + 1)] \
        if m2 + 1 > 1 else [{}]
    count = 0
    for c2 in sigma2_list:
        s2 = tuple(c2.get(x, x) for x in points)
        prod = tuple(s1[s2[x]] for x in points)
        if _cycle_type(prod, d) != target_type:
            continue
        if _transitive((s1, s2), d):
            count += 1
    total = Fraction(n1 * count, math.factorial(d))
    for m in (m1, m2):
        if m == 0:
            total *= d
    return total
