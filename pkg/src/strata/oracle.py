"""Independent oracles over partitions and permutations: shifted power sums,
Murnaghan-Nakayama characters, normalized class functions, q-brackets with
their connected variants, and brute-force torus-cover counts.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import DegreeTooLarge, SizeMismatch
from .exact import zeta_negative
from .series import LaurentSeries


@lru_cache(maxsize=None)
def partitions_of(d: int) -> tuple:
    """All partitions of d as descending tuples."""
    if d < 0:
        return ()
    out = []

    def rec(remaining, largest, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, largest), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    if d == 0:
        return ((),)
    rec(d, d, [])
    return tuple(out)


def p_eval(l: int, lam) -> Fraction:
    """Shifted power sum of exponent l on a partition, including the constant
    regularization (1 - 2^-l) zeta(-l); p_1 of the empty partition is -1/24."""
    if l < 1:
        raise ValueError("exponent must be >= 1")
    lam = tuple(lam)
    half = Fraction(1, 2)
    total = Fraction(0)
    for i, part in enumerate(lam, start=1):
        total += (part - i + half) ** l - (-i + half) ** l
    return total + (1 - Fraction(1, 2 ** l)) * zeta_negative(l)


@lru_cache(maxsize=None)
def dim_partition(lam: tuple) -> int:
    """Number of standard tableaux (hook length formula)."""
    lam = tuple(sorted(lam, reverse=True))
    d = sum(lam)
    if d == 0:
        return 1
    conj = [sum(1 for part in lam if part > c) for c in range(lam[0])]
    hooks = 1
    for i, part in enumerate(lam):
        for j in range(part):
            hooks *= (part - j) + (conj[j] - i) - 1
    return math.factorial(d) // hooks


@lru_cache(maxsize=None)
def _mn_beta(betas: tuple, rho: tuple) -> int:
    if not rho:
        return 1
    k = rho[0]
    rest = rho[1:]
    beta_set = set(betas)
    total = 0
    for b in betas:
        target = b - k
        if target < 0 or target in beta_set:
            continue
        between = sum(1 for x in betas if target < x < b)
        nxt = tuple(sorted(beta_set - {b} | {target}))
        total += (-1) ** between * _mn_beta(nxt, rest)
    return total


def mn_character(lam, rho) -> int:
    """Irreducible symmetric-group character at the class of cycle type rho."""
    lam = tuple(sorted(lam, reverse=True))
    rho = tuple(sorted((r for r in rho if r > 0), reverse=True))
    if sum(lam) != sum(rho):
        raise SizeMismatch(f"partition {lam} and cycle type {rho} differ in size")
    r = len(lam)
    betas = tuple(sorted(lam[i] + (r - 1 - i) for i in range(r)))
    return _mn_beta(betas, rho)


def f_eval(l: int, lam) -> Fraction:
    """Normalized class function: class size of an l-cycle (completed by
    fixed points) times the character ratio; zero when l exceeds |lam|."""
    if l < 1:
        raise ValueError("cycle length must be >= 1")
    lam = tuple(sorted(lam, reverse=True))
    d = sum(lam)
    if l > d:
        return Fraction(0)
    z = Fraction(math.factorial(d), math.factorial(d - l) * l)
    rho = (l,) + (1,) * (d - l)
    return z * Fraction(mn_character(lam, rho), dim_partition(lam))


def product_f(profile):
    """Pointwise product of f_eval factors for a cycle-type profile."""
    profile = tuple(profile)

    def fn(lam):
        out = Fraction(1)
        for l in profile:
            out *= f_eval(l, lam)
            if out == 0:
                break
        return out

    return fn


def q_bracket(fn, depth: int) -> LaurentSeries:
    """Partition-weighted average: the q-series sum fn(lam) q^|lam| divided
    by the partition generating function, to order q^depth."""
    if depth > 20:
        raise DegreeTooLarge("q-bracket depth capped at 20")
    num = {}
    den = {}
    for d in range(depth + 1):
        parts = partitions_of(d)
        num[d] = sum((fn(lam) for lam in parts), Fraction(0))
        den[d] = Fraction(len(parts))
    num_s = LaurentSeries.from_terms(num, depth)
    den_s = LaurentSeries.from_terms(den, depth)
    return num_s * den_s.inverse()


def partition_gf(depth: int) -> LaurentSeries:
    return LaurentSeries.from_terms(
        {d: len(partitions_of(d)) for d in range(depth + 1)}, depth)


def set_partitions(items: tuple):
    """All partitions of a sequence of indices into unordered blocks."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(tuple(rest)):
        yield ((first,),) + sub
        for i, block in enumerate(sub):
            yield sub[:i] + ((first,) + block,) + sub[i + 1:]


def connected_bracket(fns: tuple, depth: int) -> LaurentSeries:
    """Cumulant of q-brackets over set partitions of the function list:
    sum over partitions of (-1)^(blocks-1) (blocks-1)! times the product of
    the blockwise brackets of pointwise products."""
    fns = tuple(fns)
    if len(fns) > 4:
        raise ValueError("connected bracket limited to four functions")
    if depth > 16:
        raise DegreeTooLarge("connected bracket depth capped at 16")
    total = LaurentSeries.zero(depth)
    for blocks in set_partitions(tuple(range(len(fns)))):
        ell = len(blocks)
        prod = LaurentSeries.one(depth)
        for block in blocks:
            members = [fns[i] for i in block]

            def block_fn(lam, members=members):
                out = Fraction(1)
                for f in members:
                    out *= f(lam)
                return out

            prod = prod * q_bracket(block_fn, depth)
        total = total + prod * (Fraction((-1) ** (ell - 1))
                                * math.factorial(ell - 1))
    return total


def count_covers_character(profile, d: int) -> Fraction:
    """Sum over partitions of d of the product of f_eval factors; equals the
    weighted count of all (possibly disconnected) degree-d torus covers with
    one branch cycle per profile entry."""
    fn = product_f(profile)
    return sum((fn(lam) for lam in partitions_of(d)), Fraction(0))


def _perm_cycle_type(perm):
    d = len(perm)
    seen = [False] * d
    lens = []
    for s in range(d):
        if seen[s]:
            continue
        n, cur = 0, s
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
            n += 1
        lens.append(n)
    return tuple(sorted(lens, reverse=True))


def _inverse(perm):
    out = [0] * len(perm)
    for i, v in enumerate(perm):
        out[v] = i
    return tuple(out)


def _compose(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


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


def count_covers_brute(profile, d: int, connected: bool = False) -> Fraction:
    """(1/d!) times the number of tuples (a, b, g_1..g_n) with the commutator
    of (a, b) equal to the ordered product of the g_i, each g_i a single
    cycle of the profile length completed by fixed points; with ``connected``
    the whole tuple must generate a transitive group."""
    profile = tuple(profile)
    if d > 6:
        raise DegreeTooLarge(f"degree {d} beyond the brute-force cutoff 6")
    if any(l < 1 for l in profile):
        raise ValueError("profile entries must be >= 1")
    if any(l > d for l in profile):
        return Fraction(0)
    perms = list(permutations(range(d)))
    by_type = {}
    for p in perms:
        by_type.setdefault(_perm_cycle_type(p), []).append(p)
    gamma_classes = []
    for l in profile:
        t = tuple(sorted((l,) + (1,) * (d - l), reverse=True))
        gamma_classes.append(by_type.get(t, []))

    gamma_sets = [set(c) for c in gamma_classes]

    total = 0
    identity = tuple(range(d))
    n = len(profile)
    for a_type, a_members in by_type.items():
        a = a_members[0]
        weight = len(a_members)
        a_inv = _inverse(a)
        for b in perms:
            b_inv = _inverse(b)
            comm = _compose(_compose(a, b), _compose(a_inv, b_inv))

            def rec(prefix, idx, gens):
                # the last branch cycle is forced: solve instead of looping
                if idx == n - 1:
                    last = _compose(_inverse(prefix), comm)
                    if last not in gamma_sets[idx]:
                        return 0
                    if connected and not _transitive(gens + (last,), d):
                        return 0
                    return 1
                acc = 0
                for gcand in gamma_classes[idx]:
                    acc += rec(_compose(prefix, gcand), idx + 1,
                               gens + (gcand,))
                return acc

            if n == 0:
                ok = comm == identity and (not connected or _transitive((a, b), d))
                total += weight if ok else 0
            else:
                total += weight * rec(identity, 0, (a, b))
    return Fraction(total, math.factorial(d))
