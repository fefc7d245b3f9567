"""The Z-way-below and Z-beneath relations and every continuity checker.

Checkers come in pairs: ``*_witness`` returns None when the property holds and
a labeled counterexample dict otherwise (first in canonical iteration order);
the ``is_*`` wrapper just tests for None.
"""

from __future__ import annotations

from functools import lru_cache

from zdt import poset as ps, topology as tp
from zdt.errors import NotBelowError
from zdt.reports import CheckResult


@lru_cache(maxsize=512)
def _member_cut_pairs(P, system):
    return tuple((s, ps.cut(P, s)) for s in system.members(P))


def way_below_sets(P, system, a_mask, b_mask):
    """A ≪_Z B: every member whose cut meets ↑B itself meets ↑A.

    Depends on the arguments only through their up-closures, which keys the
    memo table.
    """
    return _wb(P, system, ps.up_set(P, a_mask), ps.up_set(P, b_mask))


@lru_cache(maxsize=200_000)
def _wb(P, system, up_a, up_b):
    for s, c in _member_cut_pairs(P, system):
        if c & up_b and not s & up_a:
            return False
    return True


@lru_cache(maxsize=512)
def _dd_all(P, system):
    """↟_Z x for every x, as a tuple of masks."""
    out = []
    for x in range(P.n):
        m = 0
        for y in range(P.n):
            if _wb(P, system, P.up[y], P.up[x]):
                m |= 1 << y
        out.append(m)
    return tuple(out)


def dd_set(P, system, x):
    """↟_Z x = {y : y ≪_Z x}."""
    return _dd_all(P, system)[x]


def uu_set(P, system, a_mask):
    """⇑_Z A = {x : A ≪_Z x}."""
    out = 0
    for x in range(P.n):
        if way_below_sets(P, system, a_mask, 1 << x):
            out |= 1 << x
    return out


def wb_above(P, system, a_mask):
    """⇟_Z A = {p : a ≪_Z p for some a ∈ A}."""
    dd = _dd_all(P, system)
    out = 0
    for p in range(P.n):
        if dd[p] & a_mask:
            out |= 1 << p
    return out


def relative_dd_set(P, system, x, y):
    """↟_Z^x y: the way-below set of y computed inside the subposet ↓x."""
    if not P.leq(y, x):
        raise NotBelowError(f"{P.labels[y]} is not below {P.labels[x]}")
    sub = ps.principal_down_subposet(P, x)
    sy = sub.to_sub(1 << y).bit_length() - 1
    return sub.to_parent(dd_set(sub.poset, system, sy))


def omega_z(P, system, x):
    """All nonempty finite F with F ≪_Z x, ascending."""
    return tuple(
        f for f in range(1, P.full + 1) if way_below_sets(P, system, f, 1 << x)
    )


# -- continuity ---------------------------------------------------------


def weak_s_z_witness(P, system):
    dd = _dd_all(P, system)
    for x in range(P.n):
        if not (ps.cut(P, dd[x]) >> x) & 1:
            return {"element": P.labels[x], "waybelow_set": P.names(dd[x])}
    return None


def is_weak_s_z_continuous(P, system):
    return weak_s_z_witness(P, system) is None


@lru_cache(maxsize=512)
def _member_ideals(P, system):
    """I_Z(P) = {↓S : S ∈ Z(P)}."""
    return frozenset(ps.down_set(P, s) for s in system.members(P))


def s_z_witness(P, system):
    w = weak_s_z_witness(P, system)
    if w is not None:
        return w
    ideals = _member_ideals(P, system)
    for x in range(P.n):
        if dd_set(P, system, x) not in ideals:
            return {
                "element": P.labels[x],
                "waybelow_set": P.names(dd_set(P, system, x)),
                "reason": "not the down-closure of any member",
            }
    return None


def is_s_z_continuous(P, system):
    return s_z_witness(P, system) is None


def quasicontinuity_witness(P, system, cap=ps.FINP_CAP):
    fp = ps.fin_poset(P, cap=cap)
    for p in range(P.n):
        fam = 0
        for f in omega_z(P, system, p):
            fam |= 1 << fp.index[ps.up_set(P, f)]
        if not system.contains(fp.poset, fam):
            return {"element": P.labels[p], "reason": "ω-family not a member of Z(Fin P)"}
        inter = P.full
        for i in ps.bits(fam):
            inter &= fp.sets[i]
        if inter != P.up[p]:
            return {
                "element": P.labels[p],
                "family_intersection": P.names(inter),
                "expected": P.names(P.up[p]),
            }
    return None


def is_s_z_quasicontinuous(P, system, cap=ps.FINP_CAP):
    return quasicontinuity_witness(P, system, cap=cap) is None


# -- meet continuity ----------------------------------------------------


def weakly_meet_witness(P, system):
    for x in range(P.n):
        for d in system.members(P):
            if not (ps.cut(P, d) >> x) & 1:
                continue
            dd_mask = ps.down_set(P, d)
            if (dd_mask >> x) & 1:
                continue  # x ∈ ↓D lands inside the closed-over set at once
            meet_part = P.down[x] & dd_mask
            if not (tp.closure_subbasic(P, system, meet_part) >> x) & 1:
                return {"element": P.labels[x], "member": P.names(d)}
    return None


def is_weakly_meet(P, system):
    return weakly_meet_witness(P, system) is None


def meet_witness(P, system):
    for x in range(P.n):
        for d in system.members(P):
            if not (ps.cut(P, d) >> x) & 1:
                continue
            dd_mask = ps.down_set(P, d)
            if (dd_mask >> x) & 1:
                continue
            meet_part = P.down[x] & dd_mask
            if not (tp.closure_topological(P, system, meet_part) >> x) & 1:
                return {"element": P.labels[x], "member": P.names(d)}
    return None


def is_meet(P, system):
    return meet_witness(P, system) is None


def weakly_meet_upsets_witness(P, system):
    """↑(↓x ∩ U) must be subbasic open for every x and subbasic open U."""
    gamma = tp.gamma_subbasis(P, system)
    for x in range(P.n):
        for u in gamma.opens:
            lifted = ps.up_set(P, P.down[x] & u)
            if not gamma.is_open(lifted):
                return {"element": P.labels[x], "open_set": P.names(u)}
    return None


def weakly_meet_via_upsets(P, system):
    return weakly_meet_upsets_witness(P, system) is None


def locally_weakly_meet_witness(P, system):
    for x in range(P.n):
        sub = ps.principal_down_subposet(P, x)
        w = weakly_meet_witness(sub.poset, system)
        if w is not None:
            return {"principal": P.labels[x], **w}
    return None


def is_locally_weakly_meet(P, system):
    return locally_weakly_meet_witness(P, system) is None


def semilattice_meet_check(P, system):
    """On Z-complete meet-semilattices: weak meet continuity ⟺ meets distribute.

    Inapplicable unless all binary meets and all member sups exist.
    """
    meets = {}
    for i in range(P.n):
        for j in range(i, P.n):
            m = ps.inf_of(P, (1 << i) | (1 << j))
            if m is None:
                return CheckResult.inapplicable(
                    reason=f"no meet for {P.labels[i]},{P.labels[j]}"
                )
            meets[i, j] = meets[j, i] = m
    sups = {}
    for d in system.members(P):
        s = ps.sup_of(P, d)
        if s is None:
            return CheckResult.inapplicable(reason=f"no sup for member {P.names(d)}")
        sups[d] = s
    law = True
    law_witness = None
    for x in range(P.n):
        for d, sup_d in sups.items():
            lhs = meets[x, sup_d]
            image = 0
            for e in ps.bits(d):
                image |= 1 << meets[x, e]
            rhs = ps.sup_of(P, image)
            if rhs != lhs:
                law = False
                law_witness = {"element": P.labels[x], "member": P.names(d)}
                break
        if not law:
            break
    wm = is_weakly_meet(P, system)
    if wm == law:
        return CheckResult.holds()
    return CheckResult.fails(
        weakly_meet=wm, distribution_law=law, law_witness=law_witness
    )


def interior_lemma_check(P, system):
    """int(↑F) ⊆ ⋃{⇟_Z x : x ∈ F} on weakly meet posets, all nonempty F."""
    if not is_weakly_meet(P, system):
        return CheckResult.inapplicable(reason="not weakly meet")
    for f in range(1, P.full + 1):
        inside = tp.interior_subbasic(P, system, ps.up_set(P, f))
        if inside & ~wb_above(P, system, f):
            return CheckResult.fails(
                finite_set=P.names(f),
                interior=P.names(inside),
                union_wb=P.names(wb_above(P, system, f)),
            )
    return CheckResult.holds()


def uu_eq_wbabove_check(P, system):
    """⇑_Z F = ⇟_Z F under weak meet continuity plus quasicontinuity."""
    if not is_weakly_meet(P, system):
        return CheckResult.inapplicable(reason="not weakly meet")
    if not is_s_z_quasicontinuous(P, system):
        return CheckResult.inapplicable(reason="not quasicontinuous")
    for f in range(1, P.full + 1):
        a = uu_set(P, system, f)
        b = wb_above(P, system, f)
        if a != b:
            return CheckResult.fails(
                finite_set=P.names(f), uu=P.names(a), wb_above=P.names(b)
            )
    return CheckResult.holds()


def separation_witness(P, system):
    """A pair x ≰ y that no disjoint (σ^Z, ω) open pair separates, if any."""
    sigma_opens = tp.gamma_subbasis(P, system).opens
    omega_opens = tp.lower_topology(P).opens
    for x in range(P.n):
        for y in range(P.n):
            if P.leq(x, y):
                continue
            found = False
            for u in sigma_opens:
                if not (u >> x) & 1:
                    continue
                for v in omega_opens:
                    if (v >> y) & 1 and u & v == 0:
                        found = True
                        break
                if found:
                    break
            if not found:
                return {"above": P.labels[x], "below": P.labels[y]}
    return None


def has_separation(P, system):
    return separation_witness(P, system) is None


def separation_check(P, system):
    w = separation_witness(P, system)
    return CheckResult.holds() if w is None else CheckResult.fails(**w)


# -- beneath relation ---------------------------------------------------


@lru_cache(maxsize=512)
def _beneath_all(P, system):
    """beneath_set(y) for every y: ⋂ of nonempty subbasic closed A with y ∈ A^δ."""
    closed = [a for a in tp.gamma_subbasis(P, system).closed if a]
    cuts = [(a, ps.cut(P, a)) for a in closed]
    out = []
    for y in range(P.n):
        acc = P.full
        for a, c in cuts:
            if (c >> y) & 1:
                acc &= a
        out.append(acc)
    return tuple(out)


def beneath(P, system, x, y):
    """x ≺_Z y: every nonempty subbasic closed set whose cut captures y holds x."""
    return bool((_beneath_all(P, system)[y] >> x) & 1)


def beneath_set(P, system, y):
    return _beneath_all(P, system)[y]


def delta_z_witness(P, system):
    ben = _beneath_all(P, system)
    for a in range(P.n):
        if not (ps.cut(P, ben[a]) >> a) & 1:
            return {"element": P.labels[a], "beneath_set": P.names(ben[a])}
    return None


def is_delta_z_continuous(P, system):
    return delta_z_witness(P, system) is None


def kz_compacts(P, system):
    """k_Z(P) = {x : x ≺_Z x}."""
    ben = _beneath_all(P, system)
    out = 0
    for x in range(P.n):
        if (ben[x] >> x) & 1:
            out |= 1 << x
    return out


def prealgebraic_witness(P, system):
    k = kz_compacts(P, system)
    for x in range(P.n):
        if not (ps.cut(P, k & P.down[x]) >> x) & 1:
            return {"element": P.labels[x], "compact_below": P.names(k & P.down[x])}
    return None


def is_delta_z_prealgebraic(P, system):
    return prealgebraic_witness(P, system) is None
