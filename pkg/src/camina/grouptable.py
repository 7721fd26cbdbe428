"""Exhaustively enumerated finite permutation groups.

A GroupTable holds every element of the group generated by a set of
permutations, in canonical (lexicographic) order, with index-based
arithmetic on top.  ElementSet is a subset of a table (a subgroup, a
coset, a conjugacy class, ...) given by sorted element indices.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .perm import Permutation, element_order, inverse

DEFAULT_ORDER_CAP = 20_000
MUL_MEMO_LIMIT = 512


class CapExceeded(RuntimeError):
    """A configured size cap was exceeded; ``partial`` is the count reached."""

    def __init__(self, message: str, partial: int):
        super().__init__(f"{message} (reached {partial})")
        self.partial = partial


class GroupTable:
    """A fully enumerated permutation group.

    ``elements[0]`` is the identity (the identity image table is the
    lexicographic minimum among bijections), ``index_of`` maps an image
    tuple back to its index, and ``cayley_action[k][i]`` is the index of
    ``elements[i] * generators[k]``.
    """

    def __init__(self, degree: int, elements: Sequence[Permutation], generator_ids: Sequence[int]):
        self.degree = degree
        self.elements = tuple(elements)
        self.index_of = {p.images: i for i, p in enumerate(self.elements)}
        self.generator_ids = tuple(generator_ids)
        inv = []
        for p in self.elements:
            inv.append(self.index_of[inverse(p).images])
        self.inverse_ids = tuple(inv)
        self._orders: list[int | None] = [None] * len(self.elements)
        self._mul_memo: dict[int, int] | None = {} if len(self.elements) <= MUL_MEMO_LIMIT else None
        self._cache: dict = {}
        self.cayley_action = tuple(
            tuple(self.mul(i, g) for i in range(len(self.elements)))
            for g in self.generator_ids
        )

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        """Index of the product: elements[i] first, then elements[j]."""
        memo = self._mul_memo
        if memo is None:
            a = self.elements[i].images
            b = self.elements[j].images
            return self.index_of[tuple(b[v] for v in a)]
        key = i * len(self.elements) + j
        hit = memo.get(key)
        if hit is None:
            a = self.elements[i].images
            b = self.elements[j].images
            hit = memo[key] = self.index_of[tuple(b[v] for v in a)]
        return hit

    def inv(self, i: int) -> int:
        return self.inverse_ids[i]

    def conj(self, x: int, g: int) -> int:
        """Index of g^-1 x g."""
        gi = self.elements[g].images
        xi = self.elements[x].images
        ginv = self.elements[self.inverse_ids[g]].images
        return self.index_of[tuple(gi[xi[ginv[i]]] for i in range(self.degree))]

    def commutator(self, a: int, b: int) -> int:
        """Index of a^-1 b^-1 a b."""
        return self.mul(self.mul(self.mul(self.inv(a), self.inv(b)), a), b)

    def power(self, i: int, k: int) -> int:
        k %= self.element_order(i)
        result, base = 0, i
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, i: int) -> int:
        o = self._orders[i]
        if o is None:
            o = self._orders[i] = element_order(self.elements[i])
        return o

    def __repr__(self) -> str:
        return f"GroupTable(degree={self.degree}, order={self.order})"


def generate(degree: int, gens: Sequence[Permutation], cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Breadth-first closure of ``gens`` under composition.

    Raises CapExceeded as soon as more than ``cap`` elements are discovered.
    The trivial group is produced for an empty generator list.
    """
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != {degree}")
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    gen_images = [g.images for g in gens]
    while frontier:
        nxt = []
        for a in frontier:
            for b in gen_images:
                prod = tuple(b[v] for v in a)
                if prod not in seen:
                    seen.add(prod)
                    if len(seen) > cap:
                        raise CapExceeded("order cap exceeded", len(seen))
                    nxt.append(prod)
        frontier = nxt
    elements = [Permutation(t) for t in sorted(seen)]
    index = {p.images: i for i, p in enumerate(elements)}
    generator_ids = [index[g.images] for g in gens]
    return GroupTable(degree, elements, generator_ids)


class ElementSet:
    """A subset of a GroupTable, stored as strictly increasing element indices."""

    def __init__(self, parent: GroupTable, members: Iterable[int]):
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        for m in self.members:
            if not 0 <= m < parent.order:
                raise ValueError(f"element index {m} out of range")
        self._memberset = frozenset(self.members)
        self._is_subgroup: bool | None = None

    @classmethod
    def whole(cls, parent: GroupTable) -> ElementSet:
        return cls(parent, range(parent.order))

    @classmethod
    def trivial(cls, parent: GroupTable) -> ElementSet:
        return cls(parent, (0,))

    def __contains__(self, idx: int) -> bool:
        return idx in self._memberset

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ElementSet)
            and self.parent is other.parent
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"ElementSet(order={len(self.members)} of {self.parent.order})"

    @property
    def is_subgroup(self) -> bool:
        if self._is_subgroup is None:
            G = self.parent
            ok = 0 in self._memberset
            if ok:
                for a in self.members:
                    if G.inv(a) not in self._memberset:
                        ok = False
                        break
                    for b in self.members:
                        if G.mul(a, b) not in self._memberset:
                            ok = False
                            break
                    if not ok:
                        break
            self._is_subgroup = ok
        return self._is_subgroup

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conj(m, g) in self._memberset for m in self.members for g in G.generator_ids)


def left_coset(G: GroupTable, x: int, H: ElementSet) -> ElementSet:
    """The left coset xH as an ElementSet of size |H|."""
    if not H.is_subgroup:
        raise ValueError("H is not a subgroup")
    return ElementSet(G, (G.mul(x, h) for h in H.members))


def closure_indices(G: GroupTable, seed: Iterable[int]) -> tuple[int, ...]:
    """Indices of the subgroup of G generated by ``seed``, sorted."""
    gens = sorted(set(seed) | {0})
    members = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for b in gens:
                p = G.mul(a, b)
                if p not in members:
                    members.add(p)
                    nxt.append(p)
        frontier = nxt
    return tuple(sorted(members))


def small_generating_set(G: GroupTable, members: Sequence[int]) -> tuple[int, ...]:
    """A short generating list for the subgroup with the given members."""
    target = len(members)
    gens: list[int] = []
    reached = {0}
    for m in members:
        if m in reached:
            continue
        gens.append(m)
        reached = set(closure_indices(G, gens))
        if len(reached) == target:
            break
    return tuple(gens)


def subgroup_table(G: GroupTable, H: ElementSet) -> tuple[GroupTable, tuple[int, ...], dict[int, int]]:
    """Realize a subgroup as a standalone GroupTable.

    Returns ``(table, to_parent, from_parent)`` where ``to_parent[i]`` is
    the G-index of the subgroup's element i and ``from_parent`` inverts it.
    The subgroup's canonical element order agrees with G's, so ``to_parent``
    is just the member tuple.  Results are cached on G.
    """
    key = ("subtable", H.members)
    hit = G._cache.get(key)
    if hit is not None:
        return hit
    if not H.is_subgroup:
        raise ValueError("not a subgroup")
    elements = [G.elements[i] for i in H.members]
    gens = small_generating_set(G, H.members)
    index = {G.elements[i].images: pos for pos, i in enumerate(H.members)}
    table = GroupTable(G.degree, elements, [index[G.elements[g].images] for g in gens])
    to_parent = H.members
    from_parent = {g_idx: i for i, g_idx in enumerate(H.members)}
    result = (table, to_parent, from_parent)
    G._cache[key] = result
    return result


def quotient_table(G: GroupTable, M: ElementSet) -> tuple[GroupTable, tuple[int, ...]]:
    """Realize G/M (M normal) as a permutation group on the cosets of M.

    Returns ``(table, proj)`` with ``proj[i]`` the quotient index of the
    coset containing element i.  Cosets are numbered by their least member,
    so coset 0 is M itself and proj is a group homomorphism onto the table.
    """
    key = ("quotient", M.members)
    hit = G._cache.get(key)
    if hit is not None:
        return hit
    if not M.is_subgroup or not M.is_normal():
        raise ValueError("quotient requires a normal subgroup")
    coset_of = [-1] * G.order
    reps: list[int] = []
    for i in range(G.order):
        if coset_of[i] == -1:
            cid = len(reps)
            reps.append(i)
            for m in M.members:
                coset_of[G.mul(m, i)] = cid
    n_cosets = len(reps)

    def coset_perm(g: int) -> Permutation:
        return Permutation(tuple(coset_of[G.mul(reps[c], g)] for c in range(n_cosets)))

    gens = [coset_perm(g) for g in G.generator_ids]
    table = generate(n_cosets, gens, cap=n_cosets)
    proj = tuple(table.index_of[coset_perm(i).images] for i in range(G.order))
    result = (table, proj)
    G._cache[key] = result
    return result
