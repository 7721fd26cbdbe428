"""Theorem and lemma harness.

Each verifier evaluates one implication on one (G, H) pair and reports
PASS (hypothesis and conclusion hold), VACUOUS (hypothesis fails),
VIOLATION (hypothesis holds, conclusion fails: a counterexample), or
SKIPPED (a size cap prevented evaluation).  Every VIOLATION carries a
replayable witness in the details record.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .catalog import CatalogEntry
from .chartab import character_table, inner_product_int, restrict, trivial_character
from .conditions import (
    ConditionVerdict,
    bs_hypothesis,
    derangements,
    is_camina_pair,
    satisfies_CI,
    satisfies_F,
    satisfies_Fpm,
    satisfies_O,
)
from .grouptable import (
    CapExceeded,
    ElementSet,
    GroupTable,
    quotient_table,
    small_generating_set,
    subgroup_table,
)
from .structure import (
    DEFAULT_SUBGROUP_CAP,
    center,
    class_product,
    commutator_subgroup,
    conjugacy_classes,
    is_frobenius_with_kernel,
    is_p_group,
    is_simple,
    nilpotent_subgroup,
    normal_closure,
    normalizer,
    o_lower_p,
    o_upper_p,
    p_part,
    prime_factors,
    set_times_class,
    solvable_subgroup,
    subgroups,
)

PASS = "PASS"
VACUOUS = "VACUOUS"
VIOLATION = "VIOLATION"
SKIPPED = "SKIPPED"

THEOREM1 = "theorem1"
THEOREM2 = "theorem2"
ODD_ORDER = "odd_order"
COR1 = "cor1"
COR2 = "cor2"
LEMMA_CLAIMS = tuple(f"lemma_{c}" for c in "abcdefghijklm")
CLAIM9 = "claim9"
COVERING = "covering"

PAIR_CLAIMS = (THEOREM1, THEOREM2, ODD_ORDER, COR1) + LEMMA_CLAIMS + (CLAIM9,)
GROUP_CLAIMS = (COR2, COVERING)
ALL_CLAIMS = PAIR_CLAIMS + GROUP_CLAIMS

# Claims that need character tables, hence tighter caps.
CHARACTER_CLAIMS = (THEOREM1, "lemma_l", "lemma_m")


@dataclass(frozen=True)
class VerificationReport:
    group_label: str
    group_order: int
    subgroup_index: int
    subgroup_order: int
    claim: str
    status: str
    details: dict


def _witness_dict(verdict: ConditionVerdict) -> dict | None:
    return None if verdict.witness is None else asdict(verdict.witness)


@dataclass
class _Ctx:
    """Identification and caps threaded through a single verification."""

    label: str = ""
    subgroup_index: int = -1
    order_cap: int | None = None
    class_cap: int | None = None

    def report(self, G: GroupTable, H: ElementSet | None, claim: str, status: str, details: dict) -> VerificationReport:
        return VerificationReport(
            self.label,
            G.order,
            self.subgroup_index,
            0 if H is None else len(H),
            claim,
            status,
            details,
        )


def _char_caps(ctx: _Ctx) -> dict:
    caps = {}
    if ctx.order_cap is not None:
        caps["order_cap"] = ctx.order_cap
    if ctx.class_cap is not None:
        caps["class_cap"] = ctx.class_cap
    return caps


def _is_2_power(n: int) -> bool:
    return n & (n - 1) == 0


def is_subnormal(G: GroupTable, H: ElementSet) -> bool:
    """Iterate normalizers upward; subnormal iff the chain reaches G."""
    current = H
    while True:
        nxt = normalizer(G, current)
        if len(nxt) == G.order:
            return True
        if len(nxt) == len(current):
            return False
        current = nxt


def _o2_in_parent(G: GroupTable, H: ElementSet, p: int = 2) -> ElementSet:
    """O^p(H) as a subset of G."""
    table, to_parent, _ = subgroup_table(G, H)
    inner = o_upper_p(table, p)
    return ElementSet(G, (to_parent[i] for i in inner.members))


def _quotient_pair(G: GroupTable, M: ElementSet, H: ElementSet) -> tuple[GroupTable, ElementSet]:
    table, proj = quotient_table(G, M)
    return table, ElementSet(table, (proj[h] for h in H.members))


def _equal_order_holds(G: GroupTable, H: ElementSet) -> tuple[bool, dict | None]:
    for x in range(G.order):
        if x in H:
            continue
        ox = G.element_order(x)
        for h in H.members:
            if G.element_order(G.mul(x, h)) != ox:
                return False, {"x": x, "h": h, "detail": "o(x*h) differs from o(x)"}
    return True, None


# --- main theorems ----------------------------------------------------------


def verify_theorem1(G: GroupTable, H: ElementSet, ctx: _Ctx | None = None) -> VerificationReport:
    """CI holds iff F holds; a biconditional, so never VACUOUS."""
    ctx = ctx or _Ctx()
    f = satisfies_F(G, H)
    try:
        ci = satisfies_CI(G, H, **_char_caps(ctx))
    except CapExceeded as exc:
        return ctx.report(G, H, THEOREM1, SKIPPED, {"reason": str(exc)})
    details = {
        "f_holds": f.holds,
        "ci_holds": ci.holds,
        "fired": f.holds or ci.holds,
        "h_normal": H.is_normal(),
    }
    if f.holds != ci.holds:
        details["f_witness"] = _witness_dict(f)
        details["ci_witness"] = _witness_dict(ci)
        return ctx.report(G, H, THEOREM1, VIOLATION, details)
    return ctx.report(G, H, THEOREM1, PASS, details)


def verify_theorem2(G: GroupTable, H: ElementSet, ctx: _Ctx | None = None) -> VerificationReport:
    """F+- on (G,H) implies F+- on (G,N) and N nilpotent, N the normal closure.

    The nilpotency conclusion requires H non-normal: (Frob(5:4), D5) satisfies
    the coset condition with a normal H whose closure D5 is not nilpotent, so
    for normal H only the closure condition is asserted and the nilpotency
    verdict is recorded in the details.
    """
    ctx = ctx or _Ctx()
    hyp = satisfies_Fpm(G, H)
    if not hyp.holds:
        return ctx.report(G, H, THEOREM2, VACUOUS, {"fpm_witness": _witness_dict(hyp)})
    N = normal_closure(G, H)
    h_normal = H.is_normal()
    details = {"n_order": len(N), "fired": True, "h_normal": h_normal}
    if len(N) == G.order:
        details["failure"] = "normal closure is the whole group"
        return ctx.report(G, H, THEOREM2, VIOLATION, details)
    fpm_n = satisfies_Fpm(G, N)
    nilp = nilpotent_subgroup(G, N)
    details["fpm_on_closure"] = fpm_n.holds
    details["closure_nilpotent"] = nilp
    if fpm_n.holds and (nilp or h_normal):
        return ctx.report(G, H, THEOREM2, PASS, details)
    details["fpm_witness"] = _witness_dict(fpm_n)
    return ctx.report(G, H, THEOREM2, VIOLATION, details)


def verify_odd_order(G: GroupTable, H: ElementSet, ctx: _Ctx | None = None) -> VerificationReport:
    """(O) implies O^2(H) normal with 2-group quotient, or H solvable."""
    ctx = ctx or _Ctx()
    hyp = satisfies_O(G, H)
    if not hyp.holds:
        return ctx.report(G, H, ODD_ORDER, VACUOUS, {"o_witness": _witness_dict(hyp)})
    o2 = _o2_in_parent(G, H)
    o2_normal = o2.is_normal()
    quotient_2group = _is_2_power(G.order // len(o2))
    solvable = solvable_subgroup(G, H)
    details = {
        "fired": True,
        "o2_order": len(o2),
        "o2_normal": o2_normal,
        "quotient_is_2_group": quotient_2group,
        "h_solvable": solvable,
    }
    ok = (o2_normal and quotient_2group) or solvable
    return ctx.report(G, H, ODD_ORDER, PASS if ok else VIOLATION, details)


def verify_cor1(G: GroupTable, H: ElementSet, ctx: _Ctx | None = None) -> VerificationReport:
    """Equal orders on every coset xH implies H solvable, or the
    2-element/subnormal structure with (N_G(H), H) an equal order pair."""
    ctx = ctx or _Ctx()
    hyp_holds, witness = _equal_order_holds(G, H)
    if not hyp_holds:
        return ctx.report(G, H, COR1, VACUOUS, {"equal_order_witness": witness})
    details: dict = {"fired": True}
    if solvable_subgroup(G, H):
        details["h_solvable"] = True
        return ctx.report(G, H, COR1, PASS, details)
    details["h_solvable"] = False
    o2g = o_upper_p(G, 2)
    a_ok = all(m in H for m in o2g.members) and is_subnormal(G, H)
    b_ok = all(
        _is_2_power(G.element_order(x)) for x in range(G.order) if x not in H
    )
    ngh = normalizer(G, H)
    if len(ngh) > len(H):
        c_ok, c_wit = _equal_order_holds_within(G, ngh, H)
    else:
        c_ok, c_wit = False, {"detail": "H is self-normalizing"}
    details.update(
        {"o2_in_h_and_subnormal": a_ok, "outside_all_2_elements": b_ok, "normalizer_pair_equal_order": c_ok}
    )
    if a_ok and b_ok and c_ok:
        return ctx.report(G, H, COR1, PASS, details)
    if not c_ok:
        details["c_witness"] = c_wit
    return ctx.report(G, H, COR1, VIOLATION, details)


def _equal_order_holds_within(G: GroupTable, ambient: ElementSet, H: ElementSet) -> tuple[bool, dict | None]:
    for x in ambient.members:
        if x in H:
            continue
        ox = G.element_order(x)
        for h in H.members:
            if G.element_order(G.mul(x, h)) != ox:
                return False, {"x": x, "h": h, "detail": "o(x*h) differs from o(x)"}
    return True, None


def verify_cor2(G: GroupTable, p: int, ctx: _Ctx | None = None) -> VerificationReport:
    """Every p-element whose products with nontrivial p-regular elements stay
    p-regular lies in O_p(G)."""
    ctx = ctx or _Ctx()
    if G.order % p:
        return ctx.report(G, None, COR2, VACUOUS, {"p": p, "reason": "p does not divide |G|"})
    opg = o_lower_p(G, p)
    fired = 0
    for x in range(G.order):
        ox = G.element_order(x)
        if p_part(ox, p) != ox:
            continue
        if bs_hypothesis(G, x, p).holds:
            fired += 1
            if x not in opg:
                return ctx.report(
                    G,
                    None,
                    COR2,
                    VIOLATION,
                    {"p": p, "x": x, "detail": "hypothesis fires but x is outside O_p(G)"},
                )
    return ctx.report(G, None, COR2, PASS, {"p": p, "fired": fired, "o_p_order": len(opg)})


# --- lemma suite ------------------------------------------------------------


def _normal_subgroups(G: GroupTable, cap: int) -> list[ElementSet]:
    return [S for S in subgroups(G, cap) if S.is_normal()]


def _lemma_a(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    hyp = satisfies_F(G, H)
    if not hyp.holds:
        return VACUOUS, {}
    checked = 0
    for M in _normal_subgroups(G, DEFAULT_SUBGROUP_CAP):
        if all(h in M for h in H.members):
            continue
        checked += 1
        if not (all(m in H for m in M.members) and len(M) < len(H)):
            return VIOLATION, {"m_order": len(M), "failure": "M is not properly below H"}
        Q, imageH = _quotient_pair(G, M, H)
        sub = satisfies_F(Q, imageH)
        if not sub.holds:
            return VIOLATION, {
                "m_order": len(M),
                "failure": "quotient pair loses condition (F)",
                "quotient_witness": _witness_dict(sub),
            }
    return PASS, {"normal_subgroups_checked": checked}


def _lemma_b(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    hyp = satisfies_F(G, H)
    if not hyp.holds:
        return VACUOUS, {}
    z = center(G)
    gprime = commutator_subgroup(G)
    z_in_h = all(m in H for m in z.members)
    h_in_gprime = all(h in gprime for h in H.members)
    details = {"center_in_h": z_in_h, "h_in_derived": h_in_gprime}
    return (PASS if z_in_h and h_in_gprime else VIOLATION), details


def _lemma_c(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    hyp = satisfies_Fpm(G, H)
    if not hyp.holds or H.is_normal():
        return VACUOUS, {}
    N = normal_closure(G, H)
    union = set()
    for g in range(G.order):
        for h in H.members:
            union.add(G.conj(h, g))
    details = {"n_order": len(N), "union_size": len(union)}
    ok = union == set(N.members) and 1 < len(N) < G.order
    return (PASS if ok else VIOLATION), details


def _lemma_d(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    hyp = satisfies_F(G, H)
    if not hyp.holds:
        return VACUOUS, {}
    N = normal_closure(G, H)
    verdict = is_camina_pair(G, N)
    details = {"n_order": len(N), "camina": verdict.holds}
    if not verdict.holds:
        details["witness"] = _witness_dict(verdict)
    return (PASS if verdict.holds else VIOLATION), details


def _lemma_e(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    hyp = satisfies_F(G, H)
    if not hyp.holds or H.is_normal():
        return VACUOUS, {}
    N = normal_closure(G, H)
    nilp = nilpotent_subgroup(G, N)
    frob = is_frobenius_with_kernel(G, N)
    pgrp = is_p_group(len(N))
    details = {"n_order": len(N), "n_nilpotent": nilp, "frobenius_kernel": frob, "n_p_group": pgrp}
    return (PASS if nilp and (frob or pgrp) else VIOLATION), details


def _lemma_f(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    hyp = satisfies_F(G, H)
    if not hyp.holds or H.is_normal():
        return VACUOUS, {}
    N = normal_closure(G, H)
    n_gens = small_generating_set(G, N.members)
    h_normal_in_n = all(G.conj(h, n) in H for h in H.members for n in n_gens)
    table, to_parent, _ = subgroup_table(G, N)
    derived = commutator_subgroup(table)
    derived_in_h = all(to_parent[i] in H for i in derived.members)
    details = {"h_normal_in_n": h_normal_in_n, "n_over_h_abelian": derived_in_h}
    return (PASS if h_normal_in_n and derived_in_h else VIOLATION), details


def _lemma_g(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    hyp = satisfies_Fpm(G, H)
    if not hyp.holds or H.is_normal():
        return VACUOUS, {}
    for M in _normal_subgroups(G, DEFAULT_SUBGROUP_CAP):
        if all(h in M for h in H.members):
            continue
        if not (all(m in H for m in M.members) and len(M) < len(H)):
            return VIOLATION, {"m_order": len(M), "failure": "M is not properly below H"}
        Q, imageH = _quotient_pair(G, M, H)
        sub = satisfies_Fpm(Q, imageH)
        if not sub.holds:
            return VIOLATION, {
                "m_order": len(M),
                "failure": "quotient pair loses condition (F+-)",
                "quotient_witness": _witness_dict(sub),
            }
    z = center(G)
    gprime = commutator_subgroup(G)
    strict_lower = all(m in H for m in z.members) and len(z) < len(H)
    strict_upper = all(h in gprime for h in H.members) and len(H) < len(gprime)
    details = {"center_strictly_below": strict_lower, "strictly_inside_derived": strict_upper}
    return (PASS if strict_lower and strict_upper else VIOLATION), details


def _lemma_h(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    hyp = satisfies_Fpm(G, H)
    if not hyp.holds or H.is_normal():
        return VACUOUS, {}
    N = normal_closure(G, H)
    classes = conjugacy_classes(G)
    delta = derangements(G, H)
    checked = 0
    for cid in sorted({classes.class_of[x] for x in delta.members}):
        members = classes.members(cid)
        allowed = set(members) | set(classes.members(classes.inverse_class[cid]))
        checked += 1
        for k in members:
            for n in N.members:
                if G.mul(k, n) not in allowed:
                    return VIOLATION, {
                        "class_rep": classes.reps[cid],
                        "k": k,
                        "n": n,
                        "failure": "K*N escapes K union K^-1",
                    }
    return PASS, {"derangement_classes_checked": checked}


def _lemma_i(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    if not is_p_group(G.order):
        return VACUOUS, {}
    hyp = satisfies_Fpm(G, H)
    if not hyp.holds:
        return VACUOUS, {}
    normal = H.is_normal()
    return (PASS if normal else VIOLATION), {"h_normal": normal}


def _lemma_j(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    outside = [x for x in range(G.order) if x not in H]
    fired = []
    for p in prime_factors(G.order):
        lhs = all(G.element_order(x) % p == 0 for x in outside)
        op = _o2_in_parent(G, H, p)
        rhs = op.is_normal() and p_part(G.order // len(op), p) == G.order // len(op)
        if lhs:
            fired.append(p)
        if lhs != rhs:
            return VIOLATION, {"p": p, "all_outside_p_singular": lhs, "o_p_normal_with_p_quotient": rhs}
    return PASS, {"fired": bool(fired), "primes_with_all_outside_singular": fired}


def _lemma_k(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    hyp = satisfies_O(G, H)
    if not hyp.holds:
        return VACUOUS, {}
    o2 = _o2_in_parent(G, H)
    sub = satisfies_O(G, o2)
    details = {"o2_order": len(o2), "o_on_o2": sub.holds}
    if not sub.holds:
        details["witness"] = _witness_dict(sub)
    return (PASS if sub.holds else VIOLATION), details


def _lemma_l(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    ci = satisfies_CI(G, H, **_char_caps(ctx))
    if not ci.holds:
        return VACUOUS, {}
    N = normal_closure(G, H)
    table = character_table(G, **_char_caps(ctx))
    triv_h = trivial_character(subgroup_table(G, H)[0])
    relevant = 0
    for chi in table.irreducibles:
        if all(n in _kernel_members(chi) for n in N.members):
            continue
        relevant += 1
        if inner_product_int(restrict(G, chi, H), triv_h) != 0:
            return VACUOUS, {"reason": "some chi in Irr(G|H) restricts with trivial constituent"}
    normal = H.is_normal()
    return (PASS if normal else VIOLATION), {"irr_given_h": relevant, "h_normal": normal}


def _kernel_members(chi) -> set[int]:
    classes = conjugacy_classes(chi.group)
    top = chi.values[0]
    return {
        i for i in range(chi.group.order) if chi.values[classes.class_of[i]] == top
    }


def _lemma_m(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    ci = satisfies_CI(G, H, **_char_caps(ctx))
    if not ci.holds or H.is_normal():
        return VACUOUS, {}
    N = normal_closure(G, H)
    table = character_table(G, **_char_caps(ctx))
    classes = conjugacy_classes(G)
    checked = 0
    for chi in table.irreducibles:
        if all(n in _kernel_members(chi) for n in N.members):
            continue
        checked += 1
        for x in N.members:
            if x in H:
                continue
            vx = chi.values[classes.class_of[x]]
            for h in H.members:
                if not chi.values[classes.class_of[G.mul(x, h)]] == vx:
                    return VIOLATION, {
                        "x": x,
                        "h": h,
                        "failure": "character is not constant on the coset xH",
                    }
    return PASS, {"characters_checked": checked}


def _verify_claim9(G: GroupTable, H: ElementSet, ctx: _Ctx) -> tuple[str, dict]:
    hyp = satisfies_O(G, H)
    if not hyp.holds:
        return VACUOUS, {}
    classes = conjugacy_classes(G)
    delta = derangements(G, H)
    h_class_ids = sorted({classes.class_of[h] for h in H.members})
    checked = 0
    for did in sorted({classes.class_of[x] for x in delta.members}):
        x_odd = G.element_order(classes.reps[did]) % 2 == 1
        for cid in h_class_ids:
            checked += 1
            product = class_product(G, did, cid)
            for z in product.members:
                oz = G.element_order(z)
                if x_odd and oz % 2 == 0:
                    return VIOLATION, {
                        "derangement_class_rep": classes.reps[did],
                        "h_class_rep": classes.reps[cid],
                        "z": z,
                        "failure": "even order element in x^G y^G with x odd",
                    }
                if not x_odd and oz % 2 == 1:
                    return VIOLATION, {
                        "derangement_class_rep": classes.reps[did],
                        "h_class_rep": classes.reps[cid],
                        "z": z,
                        "failure": "odd order element in x^G y^G with x even",
                    }
    return PASS, {"class_pairs_checked": checked}


def verify_covering(G: GroupTable, ctx: _Ctx | None = None, step_cap: int | None = None) -> VerificationReport:
    """For nonabelian simple G, every nontrivial class C has C^m = G for
    some m bounded by |G| (the power is iterated as a set product)."""
    ctx = ctx or _Ctx()
    if not is_simple(G):
        return ctx.report(G, None, COVERING, VACUOUS, {"reason": "group is not nonabelian simple"})
    classes = conjugacy_classes(G)
    cap = step_cap if step_cap is not None else G.order
    everything = set(range(G.order))
    max_m = 0
    for cid in range(1, classes.count):
        current = ElementSet(G, classes.members(cid))
        m = 1
        while set(current.members) != everything:
            if m > cap:
                return ctx.report(
                    G,
                    None,
                    COVERING,
                    VIOLATION,
                    {"class_rep": classes.reps[cid], "failure": f"C^m did not reach G within {cap} steps"},
                )
            current = set_times_class(G, current, cid)
            m += 1
        max_m = max(max_m, m)
    return ctx.report(G, None, COVERING, PASS, {"fired": True, "max_power_needed": max_m})


_LEMMA_FUNCS = {
    "lemma_a": _lemma_a,
    "lemma_b": _lemma_b,
    "lemma_c": _lemma_c,
    "lemma_d": _lemma_d,
    "lemma_e": _lemma_e,
    "lemma_f": _lemma_f,
    "lemma_g": _lemma_g,
    "lemma_h": _lemma_h,
    "lemma_i": _lemma_i,
    "lemma_j": _lemma_j,
    "lemma_k": _lemma_k,
    "lemma_l": _lemma_l,
    "lemma_m": _lemma_m,
}


def verify_lemma(G: GroupTable, H: ElementSet, claim: str, ctx: _Ctx | None = None) -> VerificationReport:
    ctx = ctx or _Ctx()
    func = _LEMMA_FUNCS[claim]
    try:
        status, details = func(G, H, ctx)
    except CapExceeded as exc:
        return ctx.report(G, H, claim, SKIPPED, {"reason": str(exc)})
    if status == PASS:
        details.setdefault("fired", True)
    elif status == VACUOUS:
        details.setdefault("fired", False)
    return ctx.report(G, H, claim, status, details)


def verify_lemma_suite(G: GroupTable, H: ElementSet, ctx: _Ctx | None = None) -> list[VerificationReport]:
    ctx = ctx or _Ctx()
    return [verify_lemma(G, H, claim, ctx) for claim in LEMMA_CLAIMS]


def verify_pair_claim(G: GroupTable, H: ElementSet, claim: str, ctx: _Ctx | None = None) -> VerificationReport:
    ctx = ctx or _Ctx()
    if claim == THEOREM1:
        return verify_theorem1(G, H, ctx)
    if claim == THEOREM2:
        return verify_theorem2(G, H, ctx)
    if claim == ODD_ORDER:
        return verify_odd_order(G, H, ctx)
    if claim == COR1:
        return verify_cor1(G, H, ctx)
    if claim == CLAIM9:
        return verify_lemma_like_claim9(G, H, ctx)
    if claim in _LEMMA_FUNCS:
        return verify_lemma(G, H, claim, ctx)
    raise ValueError(f"unknown pair claim {claim!r}")


def verify_lemma_like_claim9(G: GroupTable, H: ElementSet, ctx: _Ctx | None = None) -> VerificationReport:
    ctx = ctx or _Ctx()
    try:
        status, details = _verify_claim9(G, H, ctx)
    except CapExceeded as exc:
        return ctx.report(G, H, CLAIM9, SKIPPED, {"reason": str(exc)})
    if status == PASS:
        details.setdefault("fired", True)
    elif status == VACUOUS:
        details.setdefault("fired", False)
    return ctx.report(G, H, CLAIM9, status, details)


def _claim_admissible(claim: str, G: GroupTable, H: ElementSet) -> bool:
    if claim in (ODD_ORDER, COR1):
        return len(H) < G.order
    return 1 < len(H) < G.order


def sweep(
    entries: list[CatalogEntry],
    order_cap: int,
    claims: list[str] | tuple[str, ...] = ALL_CLAIMS,
    *,
    char_order_cap: int | None = None,
    char_class_cap: int | None = None,
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP,
    generation_cap: int = 20_000,
) -> list[VerificationReport]:
    """Run the selected claims over every admissible (G, H) pair of every
    catalog entry with |G| <= order_cap; reports come back in canonical
    (group label, subgroup index, claim) order."""
    claims = list(claims)
    unknown = [c for c in claims if c not in ALL_CLAIMS]
    if unknown:
        raise ValueError(f"unknown claims: {unknown}")
    reports: list[VerificationReport] = []
    for entry in entries:
        G = entry.group(cap=generation_cap)
        if G.order > order_cap:
            continue
        reports.extend(sweep_single(entry.label, G, claims, char_order_cap, char_class_cap, subgroup_cap))
    reports.sort(key=lambda r: (r.group_label, r.subgroup_index, r.claim, str(sorted(r.details.items(), key=lambda kv: kv[0]))))
    return reports


def sweep_single(
    label: str,
    G: GroupTable,
    claims: list[str],
    char_order_cap: int | None = None,
    char_class_cap: int | None = None,
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP,
) -> list[VerificationReport]:
    reports: list[VerificationReport] = []
    ctx = _Ctx(label=label, order_cap=char_order_cap, class_cap=char_class_cap)
    if COR2 in claims:
        for p in prime_factors(G.order) or []:
            reports.append(verify_cor2(G, p, ctx))
    if COVERING in claims:
        reports.append(verify_covering(G, ctx))
    pair_claims = [c for c in claims if c in PAIR_CLAIMS]
    if pair_claims:
        try:
            subs = subgroups(G, subgroup_cap)
        except CapExceeded as exc:
            for claim in pair_claims:
                reports.append(ctx.report(G, None, claim, SKIPPED, {"reason": str(exc)}))
            return reports
        for idx, H in enumerate(subs):
            pair_ctx = _Ctx(
                label=label,
                subgroup_index=idx,
                order_cap=char_order_cap,
                class_cap=char_class_cap,
            )
            for claim in pair_claims:
                if _claim_admissible(claim, G, H):
                    reports.append(verify_pair_claim(G, H, claim, pair_ctx))
    return reports


def summarize(reports: list[VerificationReport]) -> dict:
    """Per-claim status counts, hypothesis-fired counts, and the empirical
    count of non-normal subgroups satisfying condition (F)."""
    summary: dict = {"claims": {}, "total": len(reports)}
    nonnormal_f = 0
    for r in reports:
        c = summary["claims"].setdefault(
            r.claim, {"PASS": 0, "VACUOUS": 0, "VIOLATION": 0, "SKIPPED": 0, "fired": 0}
        )
        c[r.status] += 1
        if r.details.get("fired"):
            c["fired"] += 1
        if r.claim == THEOREM1 and r.details.get("f_holds") and not r.details.get("h_normal", True):
            nonnormal_f += 1
    summary["violations"] = sum(c["VIOLATION"] for c in summary["claims"].values())
    summary["nonnormal_f_pairs"] = nonnormal_f
    return summary
