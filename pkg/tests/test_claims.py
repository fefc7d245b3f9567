"""Registry behavior, harness determinism, and the recorded findings."""

import pytest

from zdt import claims as cl, continuity as ct, poset as ps, topology as tp
from zdt import fixtures as fx
from zdt.errors import UnknownClaimError
from zdt.reports import Status
from zdt.systems import FINITE, SYSTEMS


def test_registry_contents():
    reg = cl.registry()
    assert len(reg) >= 22
    ids = [c.id for c in reg]
    assert len(set(ids)) == len(ids)
    for required in (
        "lemma-wmc",
        "lemma-semilattice",
        "prop-gamma-wmc",
        "lemma-int",
        "lemma-uu-eq",
        "thm-main-s3",
        "lemma-sigma-cont",
        "lemma-lh",
        "cor-zcpo-lh",
        "thm-local-wmc",
        "prop-down-cont",
        "prop-up-cont",
        "prop-beneath",
        "prop-union-sup",
        "lemma-galois-cut",
        "lemma-galois-closed",
        "lemma-galois-beneath",
        "lemma-kz-zcpo",
        "thm-adjunction",
        "thm-monad",
        "thm-em",
        "prop-em-morph",
    ):
        assert required in ids
    assert cl.get_claim("thm-em").statement
    with pytest.raises(UnknownClaimError):
        cl.get_claim("nonsense")


def test_run_claim_population_counts():
    reports = cl.run_claim("lemma-wmc", 3, mode="labeled", systems=("finite",))
    assert [r.total for r in reports] == [1, 3, 19]
    assert all(r.ok for r in reports)
    reports = cl.run_claim("lemma-wmc", 3, systems=("finite",))
    assert [r.total for r in reports] == [1, 2, 5]


def test_run_claim_deterministic_across_jobs():
    for claim_id, size, systems in (
        ("lemma-wmc", 4, ("finite", "chains")),
        ("thm-local-wmc", 4, ("finite",)),  # failing cells carry witnesses
        ("prop-beneath", 3, None),
    ):
        solo = cl.format_reports(cl.run_claim(claim_id, size, systems=systems, jobs=1))
        multi = cl.format_reports(cl.run_claim(claim_id, size, systems=systems, jobs=2))
        assert solo == multi


def test_witness_cap_and_exact_counts():
    reports = cl.run_claim(
        "thm-local-wmc", 5, systems=("finite",), witness_cap=3
    )
    total_fails = sum(r.fails for r in reports)
    assert total_fails == 39
    for r in reports:
        assert len(r.witnesses) <= 3
        assert r.holds + r.fails + r.inapplicable == r.total


def test_scope_restriction_and_override():
    # singletons are outside the main theorem's default scope but can be
    # forced explicitly, in which case the missing hypotheses show up as
    # real counterexamples
    assert "singletons" not in cl.get_claim("thm-main-s3").systems
    reports = cl.run_claim("thm-main-s3", 2, systems=("singletons",))
    assert sum(r.fails for r in reports) > 0


# -- recorded findings ----------------------------------------------------


def test_finding_local_wmc_gap_on_the_three_antichain():
    """The locally-weakly-meet equivalence breaks when a member has no
    upper bounds at all: the discrete 3-poset is lower hereditary and
    locally weakly meet, yet not weakly meet."""
    P = fx.antichain(3)
    assert tp.is_lower_hereditary(P, FINITE)
    assert ct.is_locally_weakly_meet(P, FINITE)
    assert not ct.is_weakly_meet(P, FINITE)
    d = P.mask_of(["b", "c"])
    assert ps.upper_bounds(P, d) == 0
    assert ps.cut(P, d) == P.full
    res = cl.get_claim("thm-local-wmc").evaluate(P, FINITE)
    assert res.status is Status.FAILS


def test_finding_up_cont_gap():
    """Same root cause for the principal-ideal-to-global direction: a 2-chain
    plus an isolated point has continuous principal ideals and member
    waybelow sets, yet the whole poset is not continuous."""
    P = ps.from_order_pairs(["a", "b", "c"], [("c", "a")])
    res = cl.get_claim("prop-up-cont").evaluate(P, FINITE)
    assert res.status is Status.FAILS
    res = cl.get_claim("thm-s4-equiv").evaluate(P, FINITE)
    assert res.status is Status.FAILS


def test_repaired_hypothesis_restores_all_three():
    """Restricting to posets whose members all have filtered upper-bound sets
    (which are then nonempty) removes every counterexample through n = 4."""
    for P in (p for n in (1, 2, 3, 4) for p in ps.enumerate_posets(n)):
        for system in SYSTEMS.values():
            if not tp.lh_conditions(P, system)["5"]:
                continue
            for claim_id in ("thm-local-wmc", "prop-up-cont", "thm-s4-equiv"):
                res = cl.get_claim(claim_id).evaluate(P, system)
                assert res.status is not Status.FAILS, (P, system.name, claim_id)


def test_chains_half_of_the_local_theorem_is_clean():
    reports = cl.run_claim("thm-local-wmc", 4, systems=("chains",))
    assert all(r.ok for r in reports)


def test_interior_and_lifting_lemmas_full_depth():
    reports = cl.run_claim("lemma-int", 5, systems=("finite",))
    reports += cl.run_claim("lemma-uu-eq", 5, systems=("finite",))
    assert all(r.ok for r in reports)


def test_compacts_of_zcpos_full_depth():
    reports = cl.run_claim("lemma-kz-zcpo", 5, systems=("finite", "directed"))
    assert all(r.ok for r in reports)


def test_gamma_lattice_weak_meet_transfer_small():
    reports = cl.run_claim("prop-gamma-wmc", 3)
    assert all(r.ok for r in reports)


@pytest.mark.slow
def test_gamma_lattice_weak_meet_transfer_n4():
    reports = cl.run_claim("prop-gamma-wmc", 4)
    assert all(r.ok for r in reports)


@pytest.mark.slow
def test_map_continuity_lemma_exhaustive_n4():
    posets = [P for n in (1, 2, 3, 4) for P in ps.enumerate_posets(n)]
    for P in posets:
        for Q in posets:
            for f in ps.enumerate_monotone_maps(P, Q):
                for system in SYSTEMS.values():
                    assert tp.is_sigma_z_continuous(f, system) == tp.map_preserves_cuts(
                        f, system
                    )


def test_format_reports_round_trip(tmp_path):
    from zdt import cli, io as zio

    reports = cl.run_claim("thm-local-wmc", 3, systems=("finite",))
    text = cl.format_reports(reports)
    assert "CLAIM thm-local-wmc finite n=3" in text
    # the emitted witness poset reproduces its failure through the CLI
    witness_poset = None
    for r in reports:
        if r.witnesses:
            witness_poset = r.witnesses[0][0]
            break
    assert witness_poset is not None
    path = tmp_path / "w.poset"
    path.write_text(zio.format_poset_text(witness_poset, "w"))
    assert (
        cli.main(
            ["check", "--poset", str(path), "--system", "finite", "--property", "weakly-meet"]
        )
        == 1
    )
    assert (
        cli.main(
            [
                "check",
                "--poset",
                str(path),
                "--system",
                "finite",
                "--property",
                "locally-weakly-meet",
            ]
        )
        == 0
    )
