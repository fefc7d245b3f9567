"""Subbasic and generated Z-Scott topologies, closures, and map continuity.

The subbasic closed family Γ^Z(P) consists of the subsets A absorbing cuts of
their Z-subsets: for all S ∈ Z(P), S ⊆ A implies S^δ ⊆ A.  Since singletons
always belong to Z(P), members are necessarily lower sets, so candidates range
over order ideals.  The constraint "S ⊆ A ⇒ S^δ ⊆ A" depends on S only through
↓S (ideals contain S iff they contain ↓S, and S^δ = (↓S)^δ), letting each
system contribute one constraint per distinct down-closure:

* singletons, chains, directed: finite members contain their maximum, so the
  down-closures are exactly the principal ideals (whose cuts never escape);
* finite: every nonempty ideal;
* connected: the order-connected nonempty ideals (S and ↓S share both
  connectivity witnesses and bounds).

Tests verify these generators against brute-force enumeration of Z(P).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from zdt import kernels, poset as ps


class TopologyFamily:
    """A family of closed subsets of one poset, in ascending mask order."""

    __slots__ = ("base", "kind", "closed", "_members")

    def __init__(self, base, kind, closed):
        self.base = base
        self.kind = kind
        self.closed = tuple(closed)
        self._members = frozenset(self.closed)

    @property
    def opens(self):
        full = self.base.full
        return tuple(sorted(full & ~c for c in self.closed))

    def is_closed(self, mask):
        return mask in self._members

    def is_open(self, mask):
        return (self.base.full & ~mask) in self._members

    def closure(self, mask):
        """Least member containing the mask (the family is a closure system)."""
        out = self.base.full
        for c in self.closed:
            if mask & ~c == 0:
                out &= c
        return out

    def interior(self, mask):
        """Union of all open members inside the mask."""
        out = 0
        full = self.base.full
        for c in self.closed:
            u = full & ~c
            if u & ~mask == 0:
                out |= u
        return out

    def __eq__(self, other):
        return (
            isinstance(other, TopologyFamily)
            and self.base == other.base
            and self.closed == other.closed
        )

    def __hash__(self):
        return hash((self.base, self.closed))

    def __repr__(self):
        return f"TopologyFamily({self.kind}, {len(self.closed)} closed sets)"


def down_closure_family(P, system):
    """The distinct sets ↓S for S ∈ Z(P), without enumerating Z(P)."""
    name = system.name
    if name in ("singletons", "chains", "directed"):
        return sorted(set(P.down))
    ideals = kernels.order_ideals(P.n, P.up, P.down)
    if name == "finite":
        return [d for d in ideals if d]
    if name == "connected":
        return [
            d
            for d in ideals
            if d and kernels.z_contains(kernels.SYS_CONNECTED, P.n, P.up, P.down, d)
        ]
    # unknown systems fall back to brute enumeration
    return sorted({ps.down_set(P, s) for s in system.members(P)})


@lru_cache(maxsize=512)
def gamma_subbasis(P, system):
    """Γ^Z(P): the subbasic closed family (a closure system of lower sets)."""
    ideals = kernels.order_ideals(P.n, P.up, P.down)
    constraints = []
    for d in down_closure_family(P, system):
        c = ps.cut(P, d)
        if c & ~d:
            constraints.append((d, c))
    closed = kernels.absorbing_ideals(ideals, constraints)
    return TopologyFamily(P, "subbasic-closed", tuple(closed))


def sigma_subbasis(P, system):
    """σ^Z(P), the open view: exactly the complements of Γ^Z(P) members."""
    gamma = gamma_subbasis(P, system)
    return TopologyFamily(P, "subbasic-open-complements", gamma.closed)


@lru_cache(maxsize=256)
def sigma_topology(P, system):
    """Γ_Z(P): close Γ^Z(P) under finite unions and intersections to a fixpoint."""
    family = set(gamma_subbasis(P, system).closed)
    changed = True
    while changed:
        changed = False
        fam = sorted(family)
        for i, a in enumerate(fam):
            for b in fam[i + 1:]:
                for new in (a | b, a & b):
                    if new not in family:
                        family.add(new)
                        changed = True
    return TopologyFamily(P, "topology-closed", tuple(sorted(family)))


def closure_subbasic(P, system, mask):
    return gamma_subbasis(P, system).closure(mask)


def closure_topological(P, system, mask):
    return sigma_topology(P, system).closure(mask)


def interior_subbasic(P, system, mask):
    """Union of the subbasic opens inside the mask (σ^Z is union-closed)."""
    return gamma_subbasis(P, system).interior(mask)


@lru_cache(maxsize=256)
def lower_topology(P):
    """ω(P): closed sets generated by the principal filters ↑x."""
    unions = {0}
    for x in range(P.n):
        unions |= {u | P.up[x] for u in unions}
    family = set(unions)
    family.add(P.full)
    changed = True
    while changed:
        changed = False
        fam = sorted(family)
        for i, a in enumerate(fam):
            for b in fam[i + 1:]:
                if a & b not in family:
                    family.add(a & b)
                    changed = True
    return TopologyFamily(P, "lower-topology-closed", tuple(sorted(family)))


FAMILY_KINDS = {
    "gamma-subbasis": lambda P, Z: gamma_subbasis(P, Z),
    "sigma-subbasis": lambda P, Z: sigma_subbasis(P, Z),
    "gamma-topology": lambda P, Z: sigma_topology(P, Z),
    "sigma-topology": lambda P, Z: sigma_topology(P, Z),
    "lower": lambda P, Z: lower_topology(P),
}


# -- maps ---------------------------------------------------------------


def is_sigma_z_continuous(f, system):
    """Preimages of subbasic closed sets of the codomain are subbasic closed."""
    dom_family = gamma_subbasis(f.dom, system)
    for a in gamma_subbasis(f.cod, system).closed:
        if not dom_family.is_closed(f.preimage(a)):
            return False
    return True


def map_preserves_cuts(f, system):
    """f(D^δ) ⊆ f(D)^δ for every member D of Z(dom)."""
    for d in system.members(f.dom):
        if f.image(ps.cut(f.dom, d)) & ~ps.cut(f.cod, f.image(d)):
            return False
    return True


def map_preserves_closures(f, system):
    """f(cl A) ⊆ cl f(A) for every subset A of the domain."""
    for a in range(1 << f.dom.n):
        img_cl = f.image(closure_subbasic(f.dom, system, a))
        if img_cl & ~closure_subbasic(f.cod, system, f.image(a)):
            return False
    return True


# -- lower hereditariness ------------------------------------------------


def trace_family(P, system, a_mask):
    """{B ∩ A : B ∈ Γ^Z(P)} in the subposet coordinates of A."""
    sub = ps.restrict(P, a_mask)
    traces = {sub.to_sub(b & a_mask) for b in gamma_subbasis(P, system).closed}
    return sub, tuple(sorted(traces))


def is_lower_hereditary(P, system):
    return lower_hereditary_witness(P, system) is None


def lower_hereditary_witness(P, system):
    """First subbasic closed A whose trace family differs from Γ^Z(A), if any."""
    for a in gamma_subbasis(P, system).closed:
        if a == 0:
            continue
        sub, traces = trace_family(P, system, a)
        own = gamma_subbasis(sub.poset, system).closed
        if tuple(sorted(own)) != traces:
            return {
                "closed_set": P.names(a),
                "trace_only": [
                    sub.poset.names(m) for m in sorted(set(traces) - set(own))
                ],
                "subposet_only": [
                    sub.poset.names(m) for m in sorted(set(own) - set(traces))
                ],
            }
    return None


def lh_conditions(P, system):
    """The five lower-hereditariness conditions, each as a bool.

    (1) lower hereditary; (2) every inclusion ↓x → P is σ^Z-continuous;
    (3) relative cuts over ↓x agree with cuts for members of Z(↓x);
    (4) same over every subbasic closed ambient set; (5) upper-bound sets of
    members are filtered.
    """
    c1 = is_lower_hereditary(P, system)

    c2 = True
    for x in range(P.n):
        sub = ps.principal_down_subposet(P, x)
        incl = ps.MonotoneMap(sub.poset, P, sub.embed, _trusted=True)
        if not is_sigma_z_continuous(incl, system):
            c2 = False
            break

    c3 = True
    for x in range(P.n):
        sub = ps.principal_down_subposet(P, x)
        for m in system.members(sub.poset):
            pm = sub.to_parent(m)
            if ps.relative_cut(P, pm, P.down[x]) != ps.cut(P, pm):
                c3 = False
                break
        if not c3:
            break

    c4 = True
    for a in gamma_subbasis(P, system).closed:
        if a == 0:
            continue
        sub = ps.restrict(P, a)
        for m in system.members(sub.poset):
            pm = sub.to_parent(m)
            if ps.relative_cut(P, pm, a) != ps.cut(P, pm):
                c4 = False
                break
        if not c4:
            break

    c5 = all(
        ps.is_filtered(P, ps.upper_bounds(P, d)) for d in system.members(P)
    )
    return {"1": c1, "2": c2, "3": c3, "4": c4, "5": c5}


def lemma_lh_conditions(P, system):
    """Evaluate the five conditions and the implication pattern (5)⇒(1)⇔(2)⇔(3)⇔(4)."""
    from zdt.reports import CheckResult

    c = lh_conditions(P, system)
    if (not c["5"] or c["1"]) and c["1"] == c["2"] == c["3"] == c["4"]:
        return CheckResult.holds()
    return CheckResult.fails(**{f"cond{k}": v for k, v in c.items()})
