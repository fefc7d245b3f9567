"""Claim registry and the exhaustive verification harness.

Each claim binds hypothesis and conclusion predicates over a (poset, system)
instance and returns a three-valued result, so vacuously satisfied hypotheses
are visible in reports.  Claims whose statement quantifies over a second
poset or over maps run that quantifier internally, over all iso-classes of
size <= INNER_SIZE.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from functools import lru_cache

from zdt import continuity as ct, galois as gl, io as zio, monad as md
from zdt import poset as ps, topology as tp
from zdt.errors import SizeCapError, SupMissingError, UnknownClaimError
from zdt.reports import CheckResult, ClaimReport
from zdt.systems import SYSTEMS, get_system, is_zcpo

INNER_SIZE = 3
ALL_SYSTEMS = ("singletons", "chains", "directed", "finite", "connected")
LATTICE_CAP = 24  # largest Γ-lattice the double-family claims will walk


@lru_cache(maxsize=8)
def _inner_posets(size=INNER_SIZE):
    return tuple(
        P for n in range(1, size + 1) for P in ps.enumerate_posets(n)
    )


# -- claim conclusions ---------------------------------------------------


def _eval_lemma_wmc(P, system):
    direct = ct.is_weakly_meet(P, system)
    via = ct.weakly_meet_via_upsets(P, system)
    if direct == via:
        return CheckResult.holds()
    return CheckResult.fails(direct=direct, via_upsets=via)


def _eval_lemma_semilattice(P, system):
    return ct.semilattice_meet_check(P, system)


def _eval_prop_gamma_wmc(P, system):
    L = md.gamma_lattice(P, system)
    if L.poset.n > LATTICE_CAP:
        return CheckResult.inapplicable(reason="lattice too large")
    base = ct.is_weakly_meet(P, system)
    lifted = ct.is_weakly_meet(L.poset, system)
    if base == lifted:
        return CheckResult.holds()
    return CheckResult.fails(poset_side=base, lattice_side=lifted)


def _eval_lemma_int(P, system):
    return ct.interior_lemma_check(P, system)


def _eval_lemma_uu_eq(P, system):
    return ct.uu_eq_wbabove_check(P, system)


def _eval_thm_main_s3(P, system):
    ideals = ct._member_ideals(P, system)
    for x in range(P.n):
        if ct.dd_set(P, system, x) not in ideals:
            return CheckResult.inapplicable(
                reason="waybelow set of some element is not a member ideal",
                element=P.labels[x],
            )
    c1 = ct.is_s_z_continuous(P, system)
    wm = ct.is_weakly_meet(P, system)
    c2 = wm and ct.is_s_z_quasicontinuous(P, system)
    c3 = wm and ct.has_separation(P, system)
    if c1 == c2 == c3:
        return CheckResult.holds()
    return CheckResult.fails(continuous=c1, quasicontinuous_side=c2, separation_side=c3)


def _eval_lemma_sigma_cont(P, system):
    for Q in _inner_posets():
        for f in ps.enumerate_monotone_maps(P, Q):
            c1 = tp.is_sigma_z_continuous(f, system)
            c2 = tp.map_preserves_cuts(f, system)
            if c1 != c2:
                return CheckResult.fails(
                    cod=repr(Q), table=f.table, continuous=c1, preserves_cuts=c2
                )
            if c2 and not tp.map_preserves_closures(f, system):
                return CheckResult.fails(
                    cod=repr(Q), table=f.table, reason="closure image escapes"
                )
    return CheckResult.holds()


def _eval_lemma_lh(P, system):
    return tp.lemma_lh_conditions(P, system)


def _eval_cor_zcpo_lh(P, system):
    if not is_zcpo(P, system):
        return CheckResult.inapplicable(reason="not a zcpo")
    if tp.is_lower_hereditary(P, system):
        return CheckResult.holds()
    return CheckResult.fails(**tp.lower_hereditary_witness(P, system))


def _eval_thm_local_wmc(P, system):
    if not tp.is_lower_hereditary(P, system):
        return CheckResult.inapplicable(reason="topology not lower hereditary")
    w = ct.is_weakly_meet(P, system)
    loc = ct.is_locally_weakly_meet(P, system)
    if w == loc:
        return CheckResult.holds()
    return CheckResult.fails(weakly_meet=w, locally=loc)


def _rel_dd_in_system(P, system):
    for x in range(P.n):
        sub = ps.principal_down_subposet(P, x)
        for y in ps.bits(P.down[x]):
            rel = ct.relative_dd_set(P, system, x, y)
            if not system.contains(sub.poset, sub.to_sub(rel)):
                return False
    return True


def _down_sets_continuous(P, system):
    for x in range(P.n):
        sub = ps.principal_down_subposet(P, x)
        if not ct.is_s_z_continuous(sub.poset, system):
            return False
    return True


def _dd_in_system(P, system):
    return all(
        system.contains(P, ct.dd_set(P, system, x)) for x in range(P.n)
    )


def _eval_prop_down_cont(P, system):
    if not tp.is_lower_hereditary(P, system):
        return CheckResult.inapplicable(reason="topology not lower hereditary")
    if not ct.is_weak_s_z_continuous(P, system):
        return CheckResult.inapplicable(reason="not weak s_Z-continuous")
    if not _rel_dd_in_system(P, system):
        return CheckResult.inapplicable(reason="relative waybelow set not a member")
    if _down_sets_continuous(P, system):
        return CheckResult.holds()
    return CheckResult.fails(reason="some principal ideal is not continuous")


def _eval_prop_up_cont(P, system):
    if not tp.is_lower_hereditary(P, system):
        return CheckResult.inapplicable(reason="topology not lower hereditary")
    if not _down_sets_continuous(P, system):
        return CheckResult.inapplicable(reason="principal ideals not all continuous")
    if not _dd_in_system(P, system):
        return CheckResult.inapplicable(reason="waybelow set not a member")
    if ct.is_s_z_continuous(P, system):
        return CheckResult.holds()
    return CheckResult.fails(**ct.s_z_witness(P, system))


def _eval_thm_s4_equiv(P, system):
    if not tp.is_lower_hereditary(P, system):
        return CheckResult.inapplicable(reason="topology not lower hereditary")
    side1 = ct.is_s_z_continuous(P, system) and _rel_dd_in_system(P, system)
    side2 = _down_sets_continuous(P, system) and _dd_in_system(P, system)
    if side1 == side2:
        return CheckResult.holds()
    return CheckResult.fails(global_side=side1, local_side=side2)


def _eval_prop_beneath(P, system):
    gamma = tp.gamma_subbasis(P, system)
    bottom = ps.least_of(P, P.full)
    for y in range(P.n):
        bset = ct.beneath_set(P, system, y)
        if not gamma.is_closed(bset):
            return CheckResult.fails(
                element=P.labels[y], reason="beneath set not subbasic closed"
            )
        if bset & ~P.down[y]:
            return CheckResult.fails(element=P.labels[y], reason="beneath above")
        if bottom is not None and not (bset >> bottom) & 1:
            return CheckResult.fails(element=P.labels[y], reason="bottom not beneath")
    for m in range(P.n):
        for x in range(P.n):
            if not P.leq(m, x):
                continue
            for y in range(P.n):
                if not ct.beneath(P, system, x, y):
                    continue
                for n_ in range(P.n):
                    if P.leq(y, n_) and not ct.beneath(P, system, m, n_):
                        return CheckResult.fails(
                            chain=(P.labels[m], P.labels[x], P.labels[y], P.labels[n_]),
                            reason="interpolation broken",
                        )
    return CheckResult.holds()


def _eval_prop_union_sup(P, system):
    L = md.gamma_lattice(P, system)
    if L.poset.n > LATTICE_CAP:
        return CheckResult.inapplicable(reason="lattice too large")
    return md.union_sup_check(P, system)


def _eval_gamma_prealgebraic(P, system):
    L = md.gamma_lattice(P, system)
    if L.poset.n > LATTICE_CAP:
        return CheckResult.inapplicable(reason="lattice too large")
    return md.check_gamma_lattice(L)


def _eval_lemma_galois_cut(P, system):
    for S in _inner_posets():
        for gc in gl.enumerate_galois_connections(P, S):
            if not gl.lower_preserves_cuts(gc):
                return CheckResult.fails(cod=repr(S), table=gc.lower.table)
    return CheckResult.holds()


def _eval_lemma_galois_closed(P, system):
    for S in _inner_posets():
        for gc in gl.enumerate_galois_connections(P, S):
            if not gl.upper_image_closed(gc, system):
                return CheckResult.fails(cod=repr(S), table=gc.lower.table)
    return CheckResult.holds()


def _eval_lemma_galois_beneath(P, system):
    delta_cont = ct.is_delta_z_continuous(P, system)
    for S in _inner_posets():
        for gc in gl.enumerate_galois_connections(P, S):
            cond1 = gl.upper_preserves_closed_cuts(gc, system)
            cond2 = gl.lower_preserves_beneath(gc, system)
            if cond1 and not cond2:
                return CheckResult.fails(
                    cod=repr(S), table=gc.lower.table, direction="(1) without (2)"
                )
            if delta_cont and cond2 and not cond1:
                return CheckResult.fails(
                    cod=repr(S), table=gc.lower.table, direction="(2) without (1)"
                )
    return CheckResult.holds()


def _eval_lemma_kz_zcpo(P, system):
    if not is_zcpo(P, system):
        return CheckResult.inapplicable(reason="not a zcpo")
    k = ct.kz_compacts(P, system)
    sub = ps.restrict(P, k)
    for d in system.members(sub.poset):
        s_sub = ps.sup_of(sub.poset, d)
        s_par = ps.sup_of(P, sub.to_parent(d))
        if s_sub is None:
            return CheckResult.fails(member=sub.poset.names(d), reason="no sup")
        if sub.embed[s_sub] != s_par:
            return CheckResult.fails(
                member=sub.poset.names(d), reason="sup disagrees with ambient sup"
            )
    return CheckResult.holds()


def _guarded(f, *args):
    try:
        return f(*args)
    except SizeCapError as e:
        return CheckResult.inapplicable(reason=str(e))
    except SupMissingError as e:
        return CheckResult.fails(reason=str(e))


def _eval_thm_adjunction(P, system):
    L = md.gamma_lattice(P, system)
    if L.poset.n > LATTICE_CAP:
        return CheckResult.inapplicable(reason="lattice too large")
    return _guarded(md.verify_adjunction, P, system)


def _eval_thm_monad(P, system):
    if md.gamma_lattice(P, system).poset.n > LATTICE_CAP:
        return CheckResult.inapplicable(reason="lattice too large")
    return _guarded(md.verify_monad_laws, P, system)


EM_SEARCH_LIMIT = 300_000


def _eval_thm_em(P, system):
    if md.gamma_lattice(P, system).poset.n > LATTICE_CAP:
        return CheckResult.inapplicable(reason="lattice too large")
    d = md.delta_object(P, system)
    xi = md.em_structure_map(P, system)
    dcpo = md.is_delta_cpo(P, system)
    if dcpo != (xi is not None):
        return CheckResult.fails(delta_cpo=dcpo, structure_map=xi is not None)
    if xi is not None:
        res = md.em_check(P, xi, system)
        if not res.ok:
            return res
    if P.n ** d.poset.n <= EM_SEARCH_LIMIT:
        survivors = []
        cap = max(P.n, d.poset.n)
        for cand in ps.enumerate_monotone_maps(d.poset, P, cap=cap):
            if not tp.is_sigma_z_continuous(cand, system):
                continue
            if md.em_check(P, cand, system).ok:
                survivors.append(cand.table)
        if xi is None and survivors:
            return CheckResult.fails(
                reason="structure map on a non-delta-cpo", tables=survivors
            )
        if xi is not None and survivors != [xi.table]:
            return CheckResult.fails(reason="structure map not unique", tables=survivors)
    return CheckResult.holds()


def _eval_prop_em_morph(P, system):
    if not md.is_delta_cpo(P, system):
        return CheckResult.inapplicable(reason="domain not a delta-cpo")
    xi_p = md.em_structure_map(P, system)
    for Q in _inner_posets():
        if not md.is_delta_cpo(Q, system):
            continue
        xi_q = md.em_structure_map(Q, system)
        for f in ps.enumerate_monotone_maps(P, Q):
            if not tp.is_sigma_z_continuous(f, system):
                continue
            eq = md.em_morphism_equation_witness(f, system) is None
            df, bad = md.delta_map(f, system)
            if df is None:
                return CheckResult.fails(reason="functor ill-typed", **bad)
            square = f.compose(xi_p).table == xi_q.compose(df).table
            if eq != square:
                return CheckResult.fails(
                    cod=repr(Q), table=f.table, equation=eq, square=square
                )
    return CheckResult.holds()


def _eval_ctrl_directed(P, system):
    if system.name != "directed":
        return CheckResult.inapplicable(reason="control applies to the directed system")
    if ct.is_s_z_continuous(P, system) and ct.is_weakly_meet(P, system):
        return CheckResult.holds()
    return CheckResult.fails()


def _eval_ctrl_finite(P, system):
    if system.name != "finite":
        return CheckResult.inapplicable(reason="control applies to the finite system")
    for x in range(P.n):
        for y in range(P.n):
            if ct.beneath(P, system, x, y) != P.leq(x, y):
                return CheckResult.fails(pair=(P.labels[x], P.labels[y]))
    if not ct.is_delta_z_continuous(P, system):
        return CheckResult.fails(reason="not delta continuous")
    if ct.kz_compacts(P, system) != P.full:
        return CheckResult.fails(reason="some element is not compact")
    return CheckResult.holds()


# -- registry ------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    """One verifiable statement: default system scope plus the population
    depth the suite exercises it at (run_claim's default)."""

    id: str
    statement: str
    systems: tuple
    evaluate: object
    max_size: int = 4

    def __repr__(self):
        return f"Claim({self.id})"


_CLAIMS = [
    Claim(
        "lemma-wmc",
        "weak meet continuity coincides with openness of ↑(↓x ∩ U)",
        ALL_SYSTEMS,
        _eval_lemma_wmc,
        max_size=5,
    ),
    Claim(
        "lemma-semilattice",
        "on Z-complete semilattices weak meet continuity is the meet distribution law",
        ALL_SYSTEMS,
        _eval_lemma_semilattice,
        max_size=5,
    ),
    Claim(
        "prop-gamma-wmc",
        "P and its closed-set lattice agree on weak meet continuity",
        ALL_SYSTEMS,
        _eval_prop_gamma_wmc,
        max_size=4,
    ),
    Claim(
        "lemma-int",
        "interiors of up-closures stay inside the union of waybelow-above sets",
        ALL_SYSTEMS,
        _eval_lemma_int,
        max_size=5,
    ),
    Claim(
        "lemma-uu-eq",
        "the two waybelow liftings of a finite set agree under quasicontinuity",
        ALL_SYSTEMS,
        _eval_lemma_uu_eq,
        max_size=5,
    ),
    Claim(
        "thm-main-s3",
        "continuity = weak meet continuity + quasicontinuity = weak meet continuity + separation"
        " (assumes the system's family-union and minimal-family machinery; singletons and"
        " chains fail those on two-element instances and are out of default scope)",
        ("finite", "directed", "connected"),
        _eval_thm_main_s3,
        max_size=5,
    ),
    Claim(
        "lemma-sigma-cont",
        "map continuity coincides with cut preservation and implies closure preservation",
        ALL_SYSTEMS,
        _eval_lemma_sigma_cont,
        max_size=4,
    ),
    Claim(
        "lemma-lh",
        "filtered bounds imply lower hereditariness; four reformulations agree",
        ALL_SYSTEMS,
        _eval_lemma_lh,
        max_size=5,
    ),
    Claim(
        "cor-zcpo-lh",
        "zcpos have lower hereditary subbasic topologies",
        ALL_SYSTEMS,
        _eval_cor_zcpo_lh,
        max_size=5,
    ),
    Claim(
        "thm-local-wmc",
        "under lower hereditariness weak meet continuity is a local property",
        ALL_SYSTEMS,
        _eval_thm_local_wmc,
        max_size=5,
    ),
    Claim(
        "prop-down-cont",
        "relative waybelow membership makes every principal ideal continuous",
        ALL_SYSTEMS,
        _eval_prop_down_cont,
        max_size=5,
    ),
    Claim(
        "prop-up-cont",
        "continuous principal ideals with member waybelow sets make P continuous",
        ALL_SYSTEMS,
        _eval_prop_up_cont,
        max_size=5,
    ),
    Claim(
        "thm-s4-equiv",
        "the global and principal-ideal continuity packages are equivalent",
        ALL_SYSTEMS,
        _eval_thm_s4_equiv,
        max_size=5,
    ),
    Claim(
        "prop-beneath",
        "beneath is below, interpolates with the order, holds at the bottom, and closes",
        ALL_SYSTEMS,
        _eval_prop_beneath,
        max_size=5,
    ),
    Claim(
        "prop-union-sup",
        "sups of closed families of closed sets are plain unions",
        ALL_SYSTEMS,
        _eval_prop_union_sup,
        max_size=4,
    ),
    Claim(
        "gamma-prealgebraic",
        "every closed-set lattice is complete and prealgebraic",
        ALL_SYSTEMS,
        _eval_gamma_prealgebraic,
        max_size=4,
    ),
    Claim(
        "lemma-galois-cut",
        "lower adjoints preserve cuts of arbitrary subsets",
        ALL_SYSTEMS,
        _eval_lemma_galois_cut,
        max_size=3,
    ),
    Claim(
        "lemma-galois-closed",
        "down-closures of upper-adjoint images of closed sets are closed",
        ALL_SYSTEMS,
        _eval_lemma_galois_closed,
        max_size=3,
    ),
    Claim(
        "lemma-galois-beneath",
        "closed-cut preservation transfers beneath along the lower adjoint",
        ALL_SYSTEMS,
        _eval_lemma_galois_beneath,
        max_size=3,
    ),
    Claim(
        "lemma-kz-zcpo",
        "compacts of a zcpo form a zcpo with the ambient sups",
        ALL_SYSTEMS,
        _eval_lemma_kz_zcpo,
        max_size=5,
    ),
    Claim(
        "thm-adjunction",
        "the closed-family functor is left adjoint to the compacts functor",
        ALL_SYSTEMS,
        _eval_thm_adjunction,
        max_size=4,
    ),
    Claim(
        "thm-monad",
        "unit, multiplication, associativity and naturality of the induced monad",
        ALL_SYSTEMS,
        _eval_thm_monad,
        max_size=4,
    ),
    Claim(
        "thm-em",
        "algebra structure maps exist exactly on delta-cpos, uniquely",
        ALL_SYSTEMS,
        _eval_thm_em,
        max_size=4,
    ),
    Claim(
        "prop-em-morph",
        "algebra morphisms are exactly the sup-preserving continuous maps",
        ALL_SYSTEMS,
        _eval_prop_em_morph,
        max_size=4,
    ),
    Claim(
        "ctrl-directed",
        "directed control: every finite poset is continuous and weakly meet continuous",
        ("directed",),
        _eval_ctrl_directed,
        max_size=5,
    ),
    Claim(
        "ctrl-finite",
        "finite control: beneath collapses to the order and everything is compact",
        ("finite",),
        _eval_ctrl_finite,
        max_size=5,
    ),
]


def registry():
    return tuple(_CLAIMS)


def get_claim(claim_id):
    for c in _CLAIMS:
        if c.id == claim_id:
            return c
    raise UnknownClaimError(f"unknown claim {claim_id!r}")


# -- harness --------------------------------------------------------------


def _worker(task):
    claim_id, system_name, labels, rows = task
    claim = get_claim(claim_id)
    system = get_system(system_name)
    P = ps.FinitePoset(labels, rows, _trusted=True)
    res = _guarded(claim.evaluate, P, system)
    return res.status.value, res.witness


def run_claim(
    claim_id,
    max_size=None,
    mode="up_to_iso",
    systems=None,
    jobs=1,
    witness_cap=10,
    min_size=1,
):
    """Evaluate one claim over all posets of the given sizes and systems.

    Returns one ClaimReport per (system, size), deterministically; ``jobs``
    only parallelizes, it never reorders.  ``max_size`` defaults to the
    claim's own tested depth.
    """
    claim = get_claim(claim_id)
    if max_size is None:
        max_size = claim.max_size
    if systems is None:
        system_names = claim.systems
    else:
        system_names = tuple(s for s in systems if s in claim.systems) or tuple(systems)
    reports = []
    cells = []
    tasks = []
    for name in system_names:
        for n in range(min_size, max_size + 1):
            posets = list(ps.enumerate_posets(n, mode))
            report = ClaimReport(
                claim_id, f"{name} n={n}", witness_cap=witness_cap
            )
            reports.append(report)
            for P in posets:
                cells.append((report, P))
                tasks.append((claim_id, name, P.labels, P.up))
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            outcomes = pool.map(_worker, tasks, chunksize=max(1, len(tasks) // (jobs * 4)))
    else:
        outcomes = [_worker(t) for t in tasks]
    from zdt.reports import Status

    for (report, P), (status, witness) in zip(cells, outcomes):
        report.record(CheckResult(Status(status), witness), P)
    return reports


def format_reports(reports):
    """The harness text format: one CLAIM line per cell plus witness blocks."""
    lines = []
    for r in reports:
        lines.append(r.summary_line())
        for instance, witness in r.witnesses:
            lines.append("WITNESS")
            if isinstance(instance, ps.FinitePoset):
                lines.extend(zio.format_poset_text(instance, "witness").rstrip().splitlines())
            lines.extend(zio.format_witness(witness))
    return "\n".join(lines) + "\n"
