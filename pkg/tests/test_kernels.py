"""Backend parity and enumeration counts against the independent oracle."""

import random

import pytest

import oracles
from zdt import _kernels_py as kpy
from zdt import kernels
from zdt import poset as ps

try:
    from zdt import _ckernels as kc
except ImportError:
    kc = None

needs_compiled = pytest.mark.skipif(kc is None, reason="compiled kernels not built")

LABELED_COUNTS = {1: 1, 2: 3, 3: 19, 4: 219, 5: 4231}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_labeled_counts(n):
    assert len(kernels.enumerate_labeled_orders(n)) == LABELED_COUNTS[n]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_labeled_counts_against_relation_filter(n):
    assert oracles.labeled_order_count(n) == LABELED_COUNTS[n]


@pytest.mark.slow
def test_labeled_count_n5_against_relation_filter():
    assert oracles.labeled_order_count(5) == 4231


@pytest.mark.slow
def test_labeled_count_n6():
    assert len(kernels.enumerate_labeled_orders(6)) == 130023


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_iso_counts(n):
    assert ps.count_posets(n) == {1: 1, 2: 2, 3: 5, 4: 16, 5: 63}[n]


def _down_rows(n, up):
    down = [0] * n
    for i in range(n):
        r = up[i]
        while r:
            l = r & -r
            r ^= l
            down[l.bit_length() - 1] |= 1 << i
    return tuple(down)


@needs_compiled
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_enumeration_parity(n):
    assert kpy.enumerate_labeled_orders(n) == kc.enumerate_labeled_orders(n)


@needs_compiled
def test_pointwise_parity_on_random_posets():
    rng = random.Random(20240817)
    orders = kernels.enumerate_labeled_orders(5)
    for up in rng.sample(orders, 200):
        n = 5
        down = _down_rows(n, up)
        assert kpy.canonical_key(n, up) == kc.canonical_key(n, up)
        assert kpy.is_partial_order(n, up) == kc.is_partial_order(n, up) is True
        assert kpy.order_ideals(n, up, down) == kc.order_ideals(n, up, down)
        for sys_id in range(5):
            assert kpy.z_member_masks(sys_id, n, up, down) == kc.z_member_masks(
                sys_id, n, up, down
            )
            for mask in range(32):
                assert kpy.z_contains(sys_id, n, up, down, mask) == kc.z_contains(
                    sys_id, n, up, down, mask
                )


@needs_compiled
def test_closure_parity_on_arbitrary_relations():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 6)
        rows = tuple(rng.getrandbits(n) | (1 << i) for i in range(n))
        assert kpy.transitive_closure(n, rows) == kc.transitive_closure(n, rows)


@needs_compiled
def test_absorbing_parity():
    rng = random.Random(99)
    ideals = sorted(rng.sample(range(1 << 10), 200))
    constraints = [(rng.getrandbits(10), rng.getrandbits(10)) for _ in range(40)]
    assert kpy.absorbing_ideals(ideals, constraints) == kc.absorbing_ideals(
        ideals, constraints
    )


def test_canonical_is_permutation_invariant():
    rng = random.Random(5)
    orders = kernels.enumerate_labeled_orders(4)
    for up in rng.sample(orders, 60):
        n = 4
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = [0] * n
        for i in range(n):
            acc = 0
            r = up[i]
            while r:
                l = r & -r
                r ^= l
                acc |= 1 << perm[l.bit_length() - 1]
            relabeled[perm[i]] = acc
        assert kernels.canonical_key(n, up) == kernels.canonical_key(
            n, tuple(relabeled)
        )


def test_directed_members_match_pairwise_definition():
    for P in (p for n in (1, 2, 3, 4) for p in ps.enumerate_posets(n, "labeled")):
        from_filter = [
            m
            for m in range(1, P.full + 1)
            if kernels.z_contains(kernels.SYS_DIRECTED, P.n, P.up, P.down, m)
        ]
        assert list(
            kernels.z_member_masks(kernels.SYS_DIRECTED, P.n, P.up, P.down)
        ) == from_filter
