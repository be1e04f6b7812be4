"""Enumeration of the combinatorial index sets for the volume and
Siegel-Veech recursions: backbone decompositions of a signature relative to
a distinguished pair of zeros, their unordered groupings (configurations),
spin assignments, and the rooted trees behind the many-zero Hurwitz counts.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import InconsistentProfile, TooFewZeros


def genus_of(mu) -> int:
    """Genus determined by the zero orders: twice genus minus 2 equals the
    order sum."""
    total = sum(mu)
    if total % 2 != 0:
        raise ValueError(f"order sum of {mu} is odd; not a valid signature")
    return total // 2 + 1


def validate_signature(mu):
    mu = tuple(int(m) for m in mu)
    if any(m < 0 for m in mu):
        raise ValueError("zero orders must be nonnegative")
    genus_of(mu)
    return mu


@dataclass(frozen=True)
class BackbonePart:
    """One branch of a backbone decomposition: a lower stratum of genus
    ``genus`` carrying the zeros ``zeros`` plus one new zero of order
    ``pole_twist`` - 1."""

    genus: int
    zeros: tuple
    pole_twist: int          # the positive twist p_i; new zero order is p_i - 1

    @property
    def signature(self) -> tuple:
        return tuple(sorted(self.zeros + (self.pole_twist - 1,)))


@dataclass(frozen=True)
class BackboneDecomposition:
    parts: tuple          # ordered tuple of BackbonePart
    count: int = 1        # labeled-zero assignments with these block contents

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def twists(self) -> tuple:
        return tuple(p.pole_twist for p in self.parts)


def _distributions(values: tuple, k: int):
    """All ways to place a multiset into k ordered, possibly empty blocks."""
    counts = sorted(Counter(values).items())

    def rec(idx, blocks):
        if idx == len(counts):
            yield tuple(tuple(sorted(b)) for b in blocks)
            return
        value, count = counts[idx]

        def place(pos, remaining):
            if pos == k - 1:
                blocks[pos].extend([value] * remaining)
                yield from rec(idx + 1, blocks)
                if remaining:
                    del blocks[pos][-remaining:]
                return
            for take in range(remaining + 1):
                blocks[pos].extend([value] * take)
                yield from place(pos + 1, remaining - take)
                if take:
                    del blocks[pos][-take:]

        yield from place(0, count)

    yield from rec(0, [[] for _ in range(k)])


def _compositions(total: int, k: int):
    """Ordered k-tuples of positive integers with the given sum."""
    if k == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - k + 2):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def enumerate_backbones(mu, i: int = 0, j: int = 1):
    """Ordered backbone decompositions of ``mu`` relative to zeros i and j.

    Each decomposition distributes the remaining zeros into k ordered blocks,
    assigns positive genus g_b to each block, and requires the derived twist
    p_b = 2 g_b - 1 - (order sum of the block) to be positive.  k never
    exceeds min(mu[i]+1, mu[j]+1) (larger k has vanishing two-zero count).
    Decompositions are listed once per block-content tuple; ``count`` is the
    number of assignments of the labeled remaining zeros realizing it, so
    equal orders split across blocks are weighted by how many ways the
    actual zeros can be routed.
    """
    mu = validate_signature(mu)
    n = len(mu)
    if n < 2:
        raise TooFewZeros("need at least two zeros to split off a pair")
    if i == j or not (0 <= i < n) or not (0 <= j < n):
        raise ValueError("distinguished zeros must be two distinct positions")
    m1, m2 = mu[i], mu[j]
    rest = tuple(m for pos, m in enumerate(mu) if pos not in (i, j))
    g = genus_of(mu)
    rest_counts = Counter(rest)
    out = []
    for k in range(1, min(m1 + 1, m2 + 1, g) + 1):
        for genera in _compositions(g, k):
            for blocks in _distributions(rest, k):
                parts = []
                ok = True
                for gb, block in zip(genera, blocks):
                    p = 2 * gb - 1 - sum(block)
                    if p < 1:
                        ok = False
                        break
                    parts.append(BackbonePart(gb, block, p))
                if ok:
                    # the zeros are labeled: equal orders split across
                    # blocks in several distinguishable ways
                    mult = 1
                    for value, c in rest_counts.items():
                        mult *= math.factorial(c)
                        for block in blocks:
                            mult //= math.factorial(block.count(value))
                    out.append(BackboneDecomposition(tuple(parts), mult))
    return out


@dataclass(frozen=True)
class Configuration:
    """Unordered grouping of backbone decompositions sharing the same
    multiset of parts; ``ordered_count`` is how many ordered decompositions
    of the labeled zeros map to it."""

    parts: tuple             # sorted tuple of BackbonePart
    ordered_count: int

    @property
    def k(self) -> int:
        return len(self.parts)


def _part_key(part: BackbonePart):
    return (part.genus, part.pole_twist, part.zeros)


def configurations(mu, i: int = 0, j: int = 1):
    groups = Counter()
    for dec in enumerate_backbones(mu, i, j):
        key = tuple(sorted(dec.parts, key=_part_key))
        groups[key] += dec.count
    return [Configuration(parts, count)
            for parts, count in sorted(
                groups.items(),
                key=lambda kv: (len(kv[0]), [_part_key(p) for p in kv[0]]))]


def spin_assignments(k: int, parity: int):
    """All 0/1 tuples of length k whose sum has the requested parity;
    there are 2^(k-1) of them for k >= 1."""
    if k < 1:
        raise ValueError("need at least one block")
    out = []
    for bits in range(1 << k):
        tup = tuple(bits >> i & 1 for i in range(k))
        if sum(tup) % 2 == parity % 2:
            out.append(tup)
    return out


@dataclass(frozen=True)
class RootedTree:
    """Rooted tree datum for a genus-zero count with many zeros.

    Vertex 0 carries the two distinguished zeros; vertex v >= 1 carries zero
    v+1 (0-indexed into the zero tuple).  ``parent[v]`` is the parent of
    vertex v >= 1, ``poles_at[v]`` the pole orders assigned to v, and
    ``twists[v]`` the derived positive twist on the edge toward the parent.
    """

    parent: tuple
    poles_at: tuple
    twists: tuple


def _parent_maps(n_extra: int):
    """All parent assignments for vertices 1..n_extra over vertex set
    {0,..,n_extra} that form a tree rooted at 0."""
    if n_extra == 0:
        yield ()
        return
    choices = [[p for p in range(0, n_extra + 1) if p != v]
               for v in range(1, n_extra + 1)]

    def rec(v, acc):
        if v > n_extra:
            # acyclicity: walk each vertex to the root
            for start in range(1, n_extra + 1):
                seen = set()
                cur = start
                while cur != 0:
                    if cur in seen:
                        return
                    seen.add(cur)
                    cur = acc[cur - 1]
            yield tuple(acc)
            return
        for p in choices[v - 1]:
            acc.append(p)
            yield from rec(v + 1, acc)
            acc.pop()

    yield from rec(1, [])


def enumerate_rooted_trees(mu0, mu_inf):
    """Valid rooted-tree data for zeros ``mu0`` (first two at the root) and
    labeled poles ``mu_inf``: every tree shape, every assignment of each pole
    to a vertex, keeping only data whose derived twists are all >= 1."""
    mu0 = tuple(mu0)
    mu_inf = tuple(mu_inf)
    if len(mu0) < 2:
        raise TooFewZeros("need at least two zeros")
    if sum(mu0) - sum(p + 1 for p in mu_inf) != -2:
        raise InconsistentProfile(
            f"zeros {mu0} and poles {mu_inf} violate the degree relation")
    n_extra = len(mu0) - 2
    n_vert = n_extra + 1
    out = []
    for parent in _parent_maps(n_extra):
        # children lists and a leaves-first processing order
        children = {v: [] for v in range(n_vert)}
        for v in range(1, n_vert):
            children[parent[v - 1]].append(v)
        order = []
        stack = [0]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(children[v])
        order.reverse()                       # leaves first, root last
        for assignment in _pole_assignments(len(mu_inf), n_vert):
            poles_at = tuple(tuple(mu_inf[idx] for idx in range(len(mu_inf))
                                   if assignment[idx] == v)
                             for v in range(n_vert))
            twists = [0] * n_vert
            ok = True
            for v in order:
                if v == 0:
                    continue
                local = list(poles_at[v]) + [twists[c] for c in children[v]]
                m_v = mu0[v + 1]
                t = sum(q + 1 for q in local) - m_v - 1
                if t < 1:
                    ok = False
                    break
                twists[v] = t
            if ok:
                out.append(RootedTree(parent, poles_at, tuple(twists)))
    return out


def _pole_assignments(n_poles: int, n_vert: int):
    if n_poles == 0:
        yield ()
        return
    for rest in _pole_assignments(n_poles - 1, n_vert):
        for v in range(n_vert):
            yield rest + (v,)


def signatures_of_genus(g: int, max_zeros=None, allow_zero_orders=False):
    """Signatures of genus g, sorted descending and listed in lexicographic
    descending order.  Without zero orders these are the partitions of 2g-2
    into positive parts (at most ``max_zeros`` of them when given); with
    ``allow_zero_orders`` every padding by order-0 entries up to the length
    cap is included as a distinct signature."""

    total = 2 * g - 2
    base = []

    def partitions(remaining, largest, acc):
        if remaining == 0:
            base.append(tuple(acc))
            return
        for part in range(min(remaining, largest), 0, -1):
            acc.append(part)
            partitions(remaining - part, part, acc)
            acc.pop()

    if total == 0:
        base.append(())
    else:
        partitions(total, total, [])
    results = set()
    for p in base:
        if max_zeros is not None and len(p) > max_zeros:
            continue
        if p:
            results.add(p)
        if allow_zero_orders and max_zeros is not None:
            for pad in range(1, max_zeros - len(p) + 1):
                results.add(p + (0,) * pad)
    return sorted(results, key=lambda s: tuple(-m for m in s))
