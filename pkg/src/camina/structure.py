"""Structural invariants of a GroupTable.

Conjugacy classes, centralizers, center, derived and upper central
series, solvability and nilpotency, Sylow subgroups, O_p and O^p,
normal closure, core, subgroup enumeration, p-part decomposition,
Frobenius-kernel detection and class products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .grouptable import (
    CapExceeded,
    ElementSet,
    GroupTable,
    closure_indices,
    small_generating_set,
    subgroup_table,
)
from .perm import Permutation, element_order

DEFAULT_SUBGROUP_CAP = 50_000


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


@dataclass(frozen=True)
class ConjClassPartition:
    """Partition of a group into conjugacy classes.

    Classes are numbered by (element order of representative, class size,
    least representative index); the identity is always class 0.
    """

    group: GroupTable
    class_of: tuple[int, ...]
    reps: tuple[int, ...]
    sizes: tuple[int, ...]
    inverse_class: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.reps)

    def members(self, cid: int) -> tuple[int, ...]:
        key = ("class_members", cid)
        hit = self.group._cache.get(key)
        if hit is None:
            hit = tuple(i for i, c in enumerate(self.class_of) if c == cid)
            self.group._cache[key] = hit
        return hit


def conjugacy_classes(G: GroupTable) -> ConjClassPartition:
    """Orbits of G acting on itself by conjugation; cached on the table."""
    hit = G._cache.get("classes")
    if hit is not None:
        return hit
    assigned = [-1] * G.order
    raw: list[list[int]] = []
    for seed in range(G.order):
        if assigned[seed] != -1:
            continue
        cid = len(raw)
        orbit = [seed]
        assigned[seed] = cid
        frontier = [seed]
        while frontier:
            nxt = []
            for x in frontier:
                for g in G.generator_ids:
                    y = G.conj(x, g)
                    if assigned[y] == -1:
                        assigned[y] = cid
                        orbit.append(y)
                        nxt.append(y)
            frontier = nxt
        raw.append(sorted(orbit))
    order_key = sorted(
        range(len(raw)),
        key=lambda c: (G.element_order(raw[c][0]), len(raw[c]), raw[c][0]),
    )
    relabel = [0] * len(raw)
    for new, old in enumerate(order_key):
        relabel[old] = new
    class_of = tuple(relabel[c] for c in assigned)
    reps = tuple(raw[old][0] for old in order_key)
    sizes = tuple(len(raw[old]) for old in order_key)
    inverse_class = tuple(class_of[G.inv(r)] for r in reps)
    part = ConjClassPartition(G, class_of, reps, sizes, inverse_class)
    G._cache["classes"] = part
    return part


def centralizer(G: GroupTable, x: int) -> ElementSet:
    xs = G.elements[x].images
    out = []
    for g in range(G.order):
        gs = G.elements[g].images
        if all(gs[xs[i]] == xs[gs[i]] for i in range(G.degree)):
            out.append(g)
    return ElementSet(G, out)


def center(G: GroupTable) -> ElementSet:
    members = set(range(G.order))
    for g in G.generator_ids:
        members &= set(centralizer(G, g).members)
    return ElementSet(G, members)


def normal_closure(G: GroupTable, H: ElementSet) -> ElementSet:
    """Least normal subgroup of G containing H (H may be any subset)."""
    gens = list(small_generating_set(G, H.members)) if H.is_subgroup else list(H.members)
    while True:
        current = closure_indices(G, gens)
        memberset = set(current)
        missing = []
        for x in current:
            for g in G.generator_ids:
                y = G.conj(x, g)
                if y not in memberset:
                    missing.append(y)
        if not missing:
            return ElementSet(G, current)
        gens.extend(missing)


def core(G: GroupTable, H: ElementSet) -> ElementSet:
    """Largest normal subgroup of G inside H: the classes wholly inside H."""
    if not H.is_subgroup:
        raise ValueError("core requires a subgroup")
    classes = conjugacy_classes(G)
    inside = {cid for cid in range(classes.count) if all(m in H for m in classes.members(cid))}
    return ElementSet(G, (i for i in H.members if classes.class_of[i] in inside))


def normalizer(G: GroupTable, H: ElementSet) -> ElementSet:
    gens = small_generating_set(G, H.members)
    out = [g for g in range(G.order) if all(G.conj(h, g) in H for h in gens)]
    return ElementSet(G, out)


def derived_subgroup(G: GroupTable, S: ElementSet | None = None) -> ElementSet:
    """[S, S] as a subgroup of G (S defaults to the whole group).

    Generated by commutators of a generating set of S, then closed under
    conjugation by S (the derived subgroup is normal in S).
    """
    members = S.members if S is not None else tuple(range(G.order))
    gens = small_generating_set(G, members)
    seed = {G.commutator(a, b) for a in gens for b in gens}
    closure_gens = sorted(seed)
    while True:
        current = closure_indices(G, closure_gens)
        memberset = set(current)
        missing = []
        for x in current:
            for g in gens:
                y = G.conj(x, g)
                if y not in memberset:
                    missing.append(y)
        if not missing:
            return ElementSet(G, current)
        closure_gens.extend(missing)


def commutator_subgroup(G: GroupTable) -> ElementSet:
    return derived_subgroup(G)


@dataclass(frozen=True)
class SeriesChain:
    """A stabilized chain of subgroups: derived or upper central."""

    kind: str
    terms: tuple[ElementSet, ...]


def derived_series(G: GroupTable) -> SeriesChain:
    terms = [ElementSet.whole(G)]
    while True:
        nxt = derived_subgroup(G, terms[-1])
        if len(nxt) == len(terms[-1]):
            break
        terms.append(nxt)
    return SeriesChain("derived", tuple(terms))


def is_solvable(G: GroupTable) -> bool:
    return len(derived_series(G).terms[-1]) == 1


def upper_central_series(G: GroupTable) -> SeriesChain:
    """1 = Z_0 <= Z_1 <= ... with Z_{i+1}/Z_i the center of G/Z_i."""
    terms = [ElementSet.trivial(G)]
    while True:
        prev = terms[-1]
        members = [
            x
            for x in range(G.order)
            if all(G.commutator(x, g) in prev for g in G.generator_ids)
        ]
        nxt = ElementSet(G, members)
        if len(nxt) == len(prev):
            break
        terms.append(nxt)
    return SeriesChain("upper_central", tuple(terms))


def is_nilpotent(G: GroupTable) -> bool:
    return len(upper_central_series(G).terms[-1]) == G.order


def subgroups(G: GroupTable, count_cap: int = DEFAULT_SUBGROUP_CAP) -> list[ElementSet]:
    """All subgroups of G, ordered by (order, member tuple).

    Seeded with every cyclic subgroup and saturated under pairwise join
    until no new subgroup appears.  Cached on the table.
    """
    hit = G._cache.get("subgroups")
    if hit is not None:
        return hit
    gens_of: dict[tuple[int, ...], tuple[int, ...]] = {}
    set_of: dict[tuple[int, ...], frozenset[int]] = {}

    def record(members: tuple[int, ...]) -> bool:
        if members in gens_of:
            return False
        if len(gens_of) >= count_cap:
            raise CapExceeded("subgroup cap exceeded", len(gens_of))
        gens_of[members] = small_generating_set(G, members)
        set_of[members] = frozenset(members)
        return True

    for x in range(G.order):
        record(closure_indices(G, (x,)))
    worklist = list(gens_of)
    while worklist:
        a = worklist.pop()
        aset = set_of[a]
        for b in list(gens_of):
            bset = set_of[b]
            if aset <= bset or bset <= aset:
                continue
            join = closure_indices(G, gens_of[a] + gens_of[b])
            if record(join):
                worklist.append(join)
    ordered = sorted(gens_of, key=lambda m: (len(m), m))
    result = [ElementSet(G, m) for m in ordered]
    for s in result:
        s._is_subgroup = True
    G._cache["subgroups"] = result
    return result


def sylow_subgroup(G: GroupTable, p: int) -> ElementSet:
    """A Sylow p-subgroup, grown greedily by joining p-elements.

    Every maximal p-subgroup is a Sylow subgroup, so the greedy join with
    a p-group filter always reaches the full p-part; verified at the end.
    """
    target = p_part(G.order, p)
    if target == 1:
        return ElementSet.trivial(G)
    p_elements = [x for x in range(G.order) if p_part(G.element_order(x), p) == G.element_order(x)]
    current: tuple[int, ...] = (0,)
    gens: list[int] = []
    grew = True
    while len(current) < target and grew:
        grew = False
        memberset = set(current)
        for y in p_elements:
            if y in memberset:
                continue
            candidate = closure_indices(G, gens + [y])
            if p_part(len(candidate), p) == len(candidate):
                gens.append(y)
                current = candidate
                grew = True
                break
    if len(current) != target:
        raise RuntimeError(f"sylow construction stalled at order {len(current)} of {target}")
    return ElementSet(G, current)


def o_lower_p(G: GroupTable, p: int) -> ElementSet:
    """O_p(G): the largest normal p-subgroup (core of a Sylow p-subgroup)."""
    return core(G, sylow_subgroup(G, p))


def o_upper_p(G: GroupTable, p: int) -> ElementSet:
    """O^p(G): the subgroup generated by all p-regular elements.

    It is normal (the p-regular elements are closed under conjugation)
    and is the least normal subgroup with p-group quotient.
    """
    regulars = [x for x in range(G.order) if G.element_order(x) % p != 0]
    return ElementSet(G, closure_indices(G, regulars))


def p_decomposition(a: Permutation, p: int) -> tuple[Permutation, Permutation]:
    """Write a = a_p * a_p' with commuting power-of-a factors.

    a_p has p-power order and a_p' has order coprime to p; both are
    powers of a, found by solving exponent congruences.
    """
    n = element_order(a)
    pa = p_part(n, p)
    m = n // pa
    if pa == 1:
        return Permutation.identity(a.degree), a
    if m == 1:
        return a, Permutation.identity(a.degree)
    # u = 1 mod pa, 0 mod m gives a_p = a^u; v = u complement gives a_p'.
    u = m * pow(m, -1, pa)
    v = pa * pow(pa, -1, m)
    return a ** u, a ** v


def is_frobenius_with_kernel(G: GroupTable, N: ElementSet) -> bool:
    """True iff N is a proper nontrivial normal subgroup with C_G(n) <= N
    for every nonidentity n in N."""
    if not N.is_subgroup or not N.is_normal():
        return False
    if len(N) == 1 or len(N) == G.order:
        return False
    for n in N.members:
        if n == 0:
            continue
        for g in centralizer(G, n).members:
            if g not in N:
                return False
    return True


def class_product(G: GroupTable, cid: int, did: int) -> ElementSet:
    """The set of products {c * d : c in class cid, d in class did}."""
    classes = conjugacy_classes(G)
    out = set()
    for c in classes.members(cid):
        for d in classes.members(did):
            out.add(G.mul(c, d))
    return ElementSet(G, out)


def set_times_class(G: GroupTable, S: ElementSet, did: int) -> ElementSet:
    classes = conjugacy_classes(G)
    out = set()
    for s in S.members:
        for d in classes.members(did):
            out.add(G.mul(s, d))
    return ElementSet(G, out)


def is_p_group(order: int) -> bool:
    return len(prime_factors(order)) <= 1


def is_simple(G: GroupTable) -> bool:
    """True iff G is nonabelian simple: every nontrivial class normally
    generates the whole group, and G is not abelian."""
    if G.order == 1:
        return False
    classes = conjugacy_classes(G)
    if classes.count == G.order:
        return False
    for cid in range(1, classes.count):
        rep = classes.reps[cid]
        if len(normal_closure(G, ElementSet(G, (rep,)))) < G.order:
            return False
    return True


def exponent(G: GroupTable) -> int:
    """lcm of all element orders; cached."""
    hit = G._cache.get("exponent")
    if hit is None:
        hit = math.lcm(*(G.element_order(i) for i in range(G.order)))
        G._cache["exponent"] = hit
    return hit


def solvable_subgroup(G: GroupTable, H: ElementSet) -> bool:
    table, _, _ = subgroup_table(G, H)
    return is_solvable(table)


def nilpotent_subgroup(G: GroupTable, H: ElementSet) -> bool:
    table, _, _ = subgroup_table(G, H)
    return is_nilpotent(table)
