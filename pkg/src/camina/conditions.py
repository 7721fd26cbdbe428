"""Executable predicates for the coset-conjugacy conditions.

Every predicate is an exhaustive scan with early exit; a failing verdict
carries the first witness in canonical element order, and replaying the
witness against the defining clause reproduces the violation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import character_table, is_homogeneous_induction
from .grouptable import ElementSet, GroupTable, subgroup_table
from .structure import conjugacy_classes, p_part

CAMINA = "CAMINA"
F = "F"
FPM = "FPM"
CI = "CI"
O = "O"
EQUAL_ORDER = "EQUAL_ORDER"
EQUAL_ORDER_COSET = "EQUAL_ORDER_COSET"
BS_HYPOTHESIS = "BS_HYPOTHESIS"


@dataclass(frozen=True)
class Witness:
    x: int | None
    h: int | None
    detail: str


@dataclass(frozen=True)
class ConditionVerdict:
    holds: bool
    witness: Witness | None
    condition: str

    @staticmethod
    def ok(condition: str) -> ConditionVerdict:
        return ConditionVerdict(True, None, condition)

    @staticmethod
    def fail(condition: str, x: int | None, h: int | None, detail: str) -> ConditionVerdict:
        return ConditionVerdict(False, Witness(x, h, detail), condition)


def _require_nontrivial_proper(G: GroupTable, H: ElementSet, what: str) -> None:
    if not H.is_subgroup:
        raise ValueError(f"{what} requires a subgroup")
    if len(H) <= 1 or len(H) >= G.order:
        raise ValueError(f"{what} requires a nontrivial proper subgroup")


def is_camina_pair(G: GroupTable, N: ElementSet) -> ConditionVerdict:
    """(G, N) with N nontrivial proper normal and gN inside g^G for all g not in N."""
    if not N.is_subgroup:
        return ConditionVerdict.fail(CAMINA, None, None, "N is not a subgroup")
    if len(N) <= 1 or len(N) >= G.order:
        return ConditionVerdict.fail(CAMINA, None, None, "N is not nontrivial proper")
    if not N.is_normal():
        for n in N.members:
            for g in G.generator_ids:
                if G.conj(n, g) not in N:
                    return ConditionVerdict.fail(
                        CAMINA, g, n, "N is not normal: conjugate of h by x leaves N"
                    )
    classes = conjugacy_classes(G)
    for g in range(G.order):
        if g in N:
            continue
        cg = classes.class_of[g]
        for n in N.members:
            if classes.class_of[G.mul(g, n)] != cg:
                return ConditionVerdict.fail(CAMINA, g, n, "x*h is not conjugate to x")
    return ConditionVerdict.ok(CAMINA)


def satisfies_F(G: GroupTable, H: ElementSet) -> ConditionVerdict:
    """xH inside x^G for every x outside H."""
    _require_nontrivial_proper(G, H, "condition (F)")
    classes = conjugacy_classes(G)
    for x in range(G.order):
        if x in H:
            continue
        cx = classes.class_of[x]
        for h in H.members:
            if classes.class_of[G.mul(x, h)] != cx:
                return ConditionVerdict.fail(F, x, h, "x*h is not conjugate to x")
    return ConditionVerdict.ok(F)


def satisfies_Fpm(G: GroupTable, H: ElementSet) -> ConditionVerdict:
    """x*h conjugate to x or to x^-1 for every x outside H, h in H."""
    _require_nontrivial_proper(G, H, "condition (F+-)")
    classes = conjugacy_classes(G)
    for x in range(G.order):
        if x in H:
            continue
        cx = classes.class_of[x]
        cxinv = classes.inverse_class[cx]
        for h in H.members:
            c = classes.class_of[G.mul(x, h)]
            if c != cx and c != cxinv:
                return ConditionVerdict.fail(
                    FPM, x, h, "x*h is conjugate to neither x nor x^-1"
                )
    return ConditionVerdict.ok(FPM)


def satisfies_CI(
    G: GroupTable,
    H: ElementSet,
    order_cap: int | None = None,
    class_cap: int | None = None,
) -> ConditionVerdict:
    """Every nontrivial irreducible character of H induces homogeneously to G."""
    _require_nontrivial_proper(G, H, "condition (CI)")
    caps = {}
    if order_cap is not None:
        caps["order_cap"] = order_cap
    if class_cap is not None:
        caps["class_cap"] = class_cap
    character_table(G, **caps)
    table, _, _ = subgroup_table(G, H)
    h_chars = character_table(table, **caps)
    for idx, theta in enumerate(h_chars.irreducibles):
        if all(v == 1 for v in theta.values):
            continue
        homogeneous, _, _ = is_homogeneous_induction(G, H, theta)
        if not homogeneous:
            return ConditionVerdict.fail(
                CI, None, None, f"theta_index={idx} induces non-homogeneously"
            )
    return ConditionVerdict.ok(CI)


def satisfies_O(G: GroupTable, H: ElementSet) -> ConditionVerdict:
    """Cosets xH of odd-order x outside H consist of odd-order elements.

    H must be proper; the trivial subgroup is allowed and the condition is
    vacuously true when no odd-order element lies outside H."""
    if not H.is_subgroup:
        raise ValueError("condition (O) requires a subgroup")
    if len(H) >= G.order:
        raise ValueError("condition (O) requires a proper subgroup")
    for x in range(G.order):
        if x in H or G.element_order(x) % 2 == 0:
            continue
        for h in H.members:
            if G.element_order(G.mul(x, h)) % 2 == 0:
                return ConditionVerdict.fail(O, x, h, "x has odd order but x*h has even order")
    return ConditionVerdict.ok(O)


def is_equal_order_pair(G: GroupTable, N: ElementSet) -> ConditionVerdict:
    """All elements of each coset xN (x outside N) share the order of x; N normal."""
    _require_nontrivial_proper(G, N, "equal order pair")
    if not N.is_normal():
        raise ValueError("equal order pair requires a normal subgroup")
    return _equal_order_scan(G, N, EQUAL_ORDER)


def equal_order_coset(G: GroupTable, H: ElementSet) -> ConditionVerdict:
    """Same scan as the equal order pair, without assuming normality."""
    _require_nontrivial_proper(G, H, "equal order coset condition")
    return _equal_order_scan(G, H, EQUAL_ORDER_COSET)


def _equal_order_scan(G: GroupTable, H: ElementSet, tag: str) -> ConditionVerdict:
    for x in range(G.order):
        if x in H:
            continue
        ox = G.element_order(x)
        for h in H.members:
            if G.element_order(G.mul(x, h)) != ox:
                return ConditionVerdict.fail(tag, x, h, "o(x*h) differs from o(x)")
    return ConditionVerdict.ok(tag)


def derangements(G: GroupTable, H: ElementSet) -> ElementSet:
    """G minus the union of all conjugates of H; nonempty for proper H."""
    if not H.is_subgroup:
        raise ValueError("derangements requires a subgroup")
    if len(H) >= G.order:
        raise ValueError("derangements requires a proper subgroup")
    covered = set()
    for g in range(G.order):
        for h in H.members:
            covered.add(G.conj(h, g))
    members = [x for x in range(G.order) if x not in covered]
    if not members:
        raise RuntimeError("a proper subgroup always has derangements")
    return ElementSet(G, members)


def bs_hypothesis(G: GroupTable, x: int, p: int) -> ConditionVerdict:
    """x*y is p-regular for every nontrivial p-regular y in G; x must be a p-element."""
    ox = G.element_order(x)
    if p_part(ox, p) != ox:
        raise ValueError(f"element {x} of order {ox} is not a {p}-element")
    for y in range(1, G.order):
        if G.element_order(y) % p == 0:
            continue
        if G.element_order(G.mul(x, y)) % p == 0:
            return ConditionVerdict.fail(
                BS_HYPOTHESIS, x, y, f"x*y is {p}-singular for p-regular y"
            )
    return ConditionVerdict.ok(BS_HYPOTHESIS)
