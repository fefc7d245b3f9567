"""The closed-family lattice functor, its right adjoint on compacts, the
induced monad, and Eilenberg-Moore algebra checks.

Objects: ``gamma_lattice(P, Z)`` is Γ^Z(P) under inclusion (a complete
lattice); ``delta_object(P, Z)`` is its poset of Z-compact elements, the value
of the composite endofunctor on P.  The unit sends p to ↓p; the
multiplication takes the sup inside the compact poset.
"""

from __future__ import annotations

from functools import lru_cache

from zdt import poset as ps, topology as tp
from zdt.continuity import kz_compacts, prealgebraic_witness
from zdt.errors import SupMissingError, ZdtError
from zdt.galois import upper_adjoint_of
from zdt.reports import CheckResult
from zdt.systems import family_poset


class GammaLattice:
    """Γ^Z(P) as an inclusion-ordered complete lattice."""

    __slots__ = ("base", "system", "elements", "poset", "index")

    def __init__(self, base, system, elements, poset):
        self.base = base
        self.system = system
        self.elements = elements
        self.poset = poset
        self.index = {m: i for i, m in enumerate(elements)}

    def sup(self, idx_mask):
        """Sup of a set of lattice elements: the closure of their union."""
        union = 0
        for i in ps.bits(idx_mask):
            union |= self.elements[i]
        return self.index[tp.closure_subbasic(self.base, self.system, union)]

    def __repr__(self):
        return f"GammaLattice({self.base!r}, {self.system.name}, {len(self.elements)})"


class DeltaObject:
    """The Z-compact members of Γ^Z(P), still ordered by inclusion."""

    __slots__ = ("base", "system", "sets", "poset", "index")

    def __init__(self, base, system, sets, poset):
        self.base = base
        self.system = system
        self.sets = sets
        self.poset = poset
        self.index = {m: i for i, m in enumerate(sets)}

    def __repr__(self):
        return f"DeltaObject({self.base!r}, {self.system.name}, {len(self.sets)})"


@lru_cache(maxsize=256)
def gamma_lattice(P, system):
    elements = tp.gamma_subbasis(P, system).closed
    poset = family_poset(P, elements)
    if P.full not in elements:
        raise ZdtError("closed family misses the carrier")
    members = set(elements)
    for a in elements:
        for b in elements:
            if a & b not in members:
                raise ZdtError("closed family not intersection-closed")
    return GammaLattice(P, system, elements, poset)


def check_gamma_lattice(L):
    """Completeness plus prealgebraicity of a computed Γ-lattice."""
    for fam in range(1 << L.poset.n):
        union = 0
        for i in ps.bits(fam):
            union |= L.elements[i]
        s = ps.sup_of(L.poset, fam)
        if s is None or L.sup(fam) != s:
            return CheckResult.fails(subfamily=fam, reason="sup mismatch")
    w = prealgebraic_witness(L.poset, L.system)
    if w is not None:
        return CheckResult.fails(**w)
    return CheckResult.holds()


@lru_cache(maxsize=512)
def delta_object(P, system):
    L = gamma_lattice(P, system)
    k = kz_compacts(L.poset, system)
    sets = tuple(L.elements[i] for i in ps.bits(k))
    obj = DeltaObject(P, system, sets, family_poset(P, sets))
    for p in range(P.n):
        if P.down[p] not in obj.index:
            raise ZdtError(
                f"principal ideal of {P.labels[p]} is not compact; unit ill-typed"
            )
    return obj


def eta(P, system):
    """The unit at P: p ↦ ↓p, an order embedding into the compact poset."""
    d = delta_object(P, system)
    return ps.MonotoneMap(
        P, d.poset, tuple(d.index[P.down[p]] for p in range(P.n)), _trusted=True
    )


def gamma_map(f, system):
    """Γ^Z on morphisms: A ↦ cl(f(A)), between the two Γ-lattices."""
    LP = gamma_lattice(f.dom, system)
    LQ = gamma_lattice(f.cod, system)
    table = tuple(
        LQ.index[tp.closure_subbasic(f.cod, system, f.image(a))] for a in LP.elements
    )
    return ps.MonotoneMap(LP.poset, LQ.poset, table, _trusted=True)


def delta_map(f, system):
    """The endofunctor on morphisms; None plus witness when an image escapes
    the compacts (cannot happen for genuine σ^Z-continuous maps)."""
    DP = delta_object(f.dom, system)
    DQ = delta_object(f.cod, system)
    table = []
    for a in DP.sets:
        val = tp.closure_subbasic(f.cod, system, f.image(a))
        if val not in DQ.index:
            return None, {"of": f.dom.names(a), "image_closure": f.cod.names(val)}
        table.append(DQ.index[val])
    return ps.MonotoneMap(DP.poset, DQ.poset, tuple(table)), None


def epsilon(L_poset, system):
    """The counit at a complete lattice: a closed family of compacts ↦ its sup.

    Returns the map from the closed-family poset of the compact subposet into
    the lattice, together with that subposet.
    """
    k = kz_compacts(L_poset, system)
    sub = ps.restrict(L_poset, k)
    members = tp.gamma_subbasis(sub.poset, system).closed
    dom = family_poset(sub.poset, members)
    table = []
    for e in members:
        s = ps.sup_of(L_poset, sub.to_parent(e))
        if s is None:
            raise SupMissingError("counit needs sups of compact families")
        table.append(s)
    return ps.MonotoneMap(dom, L_poset, tuple(table)), sub


def mu(P, system):
    """The multiplication: sup inside the compact poset, cross-checked against
    the union-closure prediction whenever that value is itself compact."""
    D1 = delta_object(P, system)
    D2 = delta_object(D1.poset, system)
    table = []
    for fam in D2.sets:
        s = ps.sup_of(D1.poset, fam)
        if s is None:
            raise SupMissingError(
                f"family {fam:#x} has no sup among the compact elements"
            )
        union = 0
        for i in ps.bits(fam):
            union |= D1.sets[i]
        predicted = tp.closure_subbasic(P, system, union)
        if predicted in D1.index and D1.index[predicted] != s:
            raise ZdtError("multiplication disagrees with the union closure")
        table.append(s)
    return ps.MonotoneMap(D2.poset, D1.poset, tuple(table))


# -- delta-cpos and Eilenberg-Moore algebras -----------------------------


def is_delta_cpo(P, system):
    """Every compact closed set, as a subset of P, has a supremum in P."""
    return all(ps.sup_of(P, a) is not None for a in delta_object(P, system).sets)


def em_structure_map(P, system):
    """The sup map as the algebra structure, present exactly on delta-cpos."""
    d = delta_object(P, system)
    table = []
    for a in d.sets:
        s = ps.sup_of(P, a)
        if s is None:
            return None
        table.append(s)
    return ps.MonotoneMap(d.poset, P, tuple(table))


def em_check(P, xi, system):
    """Unit law, multiplication law, and σ^Z-continuity of a structure map."""
    et = eta(P, system)
    for p in range(P.n):
        if xi(et(p)) != p:
            return CheckResult.fails(law="unit", element=P.labels[p])
    mu_p = mu(P, system)
    dxi, bad = delta_map(xi, system)
    if dxi is None:
        return CheckResult.fails(law="multiplication", reason="δ(ξ) ill-typed", **bad)
    lhs = xi.compose(mu_p)
    rhs = xi.compose(dxi)
    if lhs.table != rhs.table:
        return CheckResult.fails(law="multiplication")
    if not tp.is_sigma_z_continuous(xi, system):
        return CheckResult.fails(law="continuity")
    return CheckResult.holds()


def is_em_morphism(f, system):
    """f(sup A) = sup f(A) for every compact closed A of the domain.

    Requires both endpoints to be delta-cpos.
    """
    if not (is_delta_cpo(f.dom, system) and is_delta_cpo(f.cod, system)):
        raise ZdtError("endpoints must be delta-cpos")
    return em_morphism_equation_witness(f, system) is None


def em_morphism_equation_witness(f, system):
    for a in delta_object(f.dom, system).sets:
        if f(ps.sup_of(f.dom, a)) != ps.sup_of(f.cod, f.image(a)):
            return {"closed_set": f.dom.names(a)}
    return None


# -- theorem-level verifications -----------------------------------------


def union_sup_check(P, system):
    """Sups in the Γ-lattice of its own closed families are plain unions."""
    L = gamma_lattice(P, system)
    for fam in tp.gamma_subbasis(L.poset, system).closed:
        union = 0
        for i in ps.bits(fam):
            union |= L.elements[i]
        if union not in L.index:
            return CheckResult.fails(
                family=[P.names(L.elements[i]) for i in ps.bits(fam)],
                union=P.names(union),
                reason="union escapes the closed family",
            )
        if ps.sup_of(L.poset, fam) != L.index[union]:
            return CheckResult.fails(
                family=[P.names(L.elements[i]) for i in ps.bits(fam)],
                union=P.names(union),
                reason="lattice sup differs from the union",
            )
    return CheckResult.holds()


MEDIATOR_SEARCH_LIMIT = 100_000


def verify_adjunction(P, system, L=None):
    """Triangle identities and the universal property of the unit.

    ``L`` defaults to the Γ-lattice of P itself.  The mediator for a
    continuous f into the compacts of L is A ↦ sup f(A); uniqueness is brute
    forced among monotone candidates when the search space is small and
    otherwise follows from sup-determination on principal ideals (every
    lattice element is the closure of the union of its principal ideals),
    which is verified.
    """
    if L is None:
        L = gamma_lattice(P, system)

    # triangle at P: counit after Γ^Z(unit) is the identity on Γ^Z(P)
    LP = gamma_lattice(P, system)
    D1 = delta_object(P, system)
    g_eta = gamma_map(eta(P, system), system)
    gamma_d1 = gamma_lattice(D1.poset, system)
    for i, a in enumerate(LP.elements):
        fam = gamma_d1.elements[g_eta(i)]
        union = 0
        for j in ps.bits(fam):
            union |= D1.sets[j]
        back = tp.closure_subbasic(P, system, union)
        if back != a:
            return CheckResult.fails(
                triangle="poset side", closed_set=P.names(a), got=P.names(back)
            )

    # triangle at L: compacts of L travel through the counit unchanged
    eps, sub = epsilon(L.poset, system)
    et_q = eta(sub.poset, system)
    dq = delta_object(sub.poset, system)
    for q in range(sub.poset.n):
        fam = dq.sets[et_q(q)]
        s = ps.sup_of(L.poset, sub.to_parent(fam))
        if s != sub.embed[q]:
            return CheckResult.fails(
                triangle="lattice side", compact=L.poset.labels[sub.embed[q]]
            )

    # universal property of the unit
    kq = sub  # compacts of L as a subposet
    for f in ps.enumerate_monotone_maps(P, kq.poset, cap=max(P.n, kq.poset.n)):
        if not tp.is_sigma_z_continuous(f, system):
            continue
        mediator = []
        ok = True
        for a in LP.elements:
            s = ps.sup_of(L.poset, kq.to_parent(f.image(a)))
            if s is None:
                ok = False
                break
            mediator.append(s)
        if not ok:
            return CheckResult.fails(part="mediator", reason="sup missing")
        fbar = ps.MonotoneMap(LP.poset, L.poset, tuple(mediator))
        for p in range(P.n):
            if fbar(LP.index[P.down[p]]) != kq.embed[f(p)]:
                return CheckResult.fails(part="mediator", reason="does not factor f")
        if upper_adjoint_of(fbar) is None:
            return CheckResult.fails(part="mediator", reason="no upper adjoint")
        if not _preserves_beneath(fbar, system):
            return CheckResult.fails(part="mediator", reason="beneath not preserved")
        res = _mediator_unique(P, system, LP, L, kq, f, fbar)
        if res is not None:
            return res
    return CheckResult.holds()


def _preserves_beneath(f, system):
    from zdt.continuity import beneath

    for x in range(f.dom.n):
        for y in range(f.dom.n):
            if beneath(f.dom, system, x, y) and not beneath(
                f.cod, system, f(x), f(y)
            ):
                return False
    return True


def _mediator_unique(P, system, LP, L, kq, f, fbar):
    pinned = {LP.index[P.down[p]]: kq.embed[f(p)] for p in range(P.n)}
    if L.poset.n ** LP.poset.n <= MEDIATOR_SEARCH_LIMIT:
        cap = max(LP.poset.n, L.poset.n)
        for h in ps.enumerate_monotone_maps(LP.poset, L.poset, cap=cap):
            if h.table == fbar.table:
                continue
            if any(h(i) != v for i, v in pinned.items()):
                continue
            if upper_adjoint_of(h) is None:
                continue
            if not _preserves_beneath(h, system):
                continue
            return CheckResult.fails(part="uniqueness", other=h.table)
        return None
    # sup-determination: every element is the sup of its principal ideals
    for i, a in enumerate(LP.elements):
        idx_mask = 0
        for p in ps.bits(a):
            idx_mask |= 1 << LP.index[P.down[p]]
        if LP.sup(idx_mask) != i:
            return CheckResult.fails(part="uniqueness", reason="sup-determination")
    return None


def verify_monad_laws(P, system, naturality_size=3):
    """Unit and associativity laws plus naturality on small codomains."""
    D1 = delta_object(P, system)
    eta_p = eta(P, system)
    if not tp.is_sigma_z_continuous(eta_p, system):
        return CheckResult.fails(law="unit continuity")
    mu_p = mu(P, system)
    if not tp.is_sigma_z_continuous(mu_p, system):
        return CheckResult.fails(law="multiplication continuity")

    eta_d1 = eta(D1.poset, system)
    for a in range(D1.poset.n):
        if mu_p(eta_d1(a)) != a:
            return CheckResult.fails(law="left unit", element=D1.poset.labels[a])
    d_eta, bad = delta_map(eta_p, system)
    if d_eta is None:
        return CheckResult.fails(law="right unit", reason="δ(η) ill-typed", **bad)
    for a in range(D1.poset.n):
        if mu_p(d_eta(a)) != a:
            return CheckResult.fails(law="right unit", element=D1.poset.labels[a])

    mu_d1 = mu(D1.poset, system)
    d_mu, bad = delta_map(mu_p, system)
    if d_mu is None:
        return CheckResult.fails(law="associativity", reason="δ(μ) ill-typed", **bad)
    lhs = mu_p.compose(mu_d1)
    rhs = mu_p.compose(d_mu)
    if lhs.table != rhs.table:
        return CheckResult.fails(law="associativity")

    for n in range(1, naturality_size + 1):
        for Q in ps.enumerate_posets(n):
            eta_q = eta(Q, system)
            mu_q = mu(Q, system)
            for f in ps.enumerate_monotone_maps(P, Q):
                if not tp.is_sigma_z_continuous(f, system):
                    continue
                df, bad = delta_map(f, system)
                if df is None:
                    return CheckResult.fails(law="functoriality", **bad)
                if df.compose(eta_p).table != eta_q.compose(f).table:
                    return CheckResult.fails(law="unit naturality", map=f.table)
                ddf, bad = delta_map(df, system)
                if ddf is None:
                    return CheckResult.fails(law="functoriality", **bad)
                if df.compose(mu_p).table != mu_q.compose(ddf).table:
                    return CheckResult.fails(
                        law="multiplication naturality", map=f.table
                    )
    return CheckResult.holds()
