import random

import pytest
from hypothesis import given, settings, strategies as st

from focktiles.partitions import EMPTY, Partition, all_partitions, conjugate, parse_partition
from focktiles.abacus import (
    BlockId,
    abacus_of,
    add_full_runner,
    block_of,
    core_from_levels,
    core_levels,
    core_of,
    core_quotient_weight,
    crystal_E,
    crystal_F,
    enumerate_block,
    is_rouquier,
    partition_of,
    quotient_of,
    rouquier_charge,
    scopes_chain,
    scopes_chain_blocks,
    weight_of,
    weyl_s,
)
from focktiles.labels import is_hook_quotient, z_label


parts_strategy = st.integers(0, 16).flatmap(
    lambda n: st.sampled_from(all_partitions(n) or [EMPTY])
)


@given(parts_strategy, st.integers(2, 7))
@settings(max_examples=150, deadline=None)
def test_roundtrip(lam, e):
    a = abacus_of(lam, e)
    assert partition_of(a) == lam
    core, quot, w = core_quotient_weight(a)
    assert lam.size == core.size + e * w
    assert w == sum(q.size for q in quot)


def test_beta_conjugation_convention():
    # x in beta(lam') iff -1-x not in beta(lam)
    for n in range(0, 13):
        for lam in all_partitions(n):
            a = abacus_of(lam, 3)
            ac = abacus_of(conjugate(lam), 3)
            for x in range(-n - 4, n + 4):
                assert ac.occupied(x) == (not a.occupied(-1 - x))


def test_core_quotient_examples():
    lam = parse_partition("5,5,4,2,2,2,1,1")
    core, quot, w = core_quotient_weight(abacus_of(lam, 4))
    assert core == parse_partition("2") and w == 5
    assert quotient_of(parse_partition("7,3,3,2,2,1"), 4) == (
        parse_partition("1"), EMPTY, parse_partition("2,1"), EMPTY)
    kappa = parse_partition("2,1")
    assert core_quotient_weight(abacus_of(kappa, 2)) == (kappa, (EMPTY,) * 2, 0)


def test_abacus_examples():
    a = abacus_of(Partition((1,)), 2)
    assert a.occupied(0) and not a.occupied(-1) and a.occupied(-2)
    a = abacus_of(EMPTY, 3)
    assert not a.occupied(0) and a.occupied(-1)
    a = abacus_of(parse_partition("5,3,3"), 3)
    assert sorted(x for x in range(-3, 7) if a.occupied(x)) == [0, 1, 4]
    dump = a.to_string()
    assert "●" in dump and "·" in dump


def test_enumerate_block_counts():
    assert len(enumerate_block(BlockId(5, EMPTY, 2))) == 20
    assert len(enumerate_block(BlockId(3, Partition((1,)), 3))) == 22
    assert enumerate_block(BlockId(4, parse_partition("2"), 0)) == [parse_partition("2")]
    with pytest.raises(ValueError):
        BlockId(3, Partition((3,)), 1)  # (3) is not a 3-core


def test_enumerate_block_is_bijective():
    for b in [BlockId(3, EMPTY, 3), BlockId(4, parse_partition("2"), 2)]:
        members = enumerate_block(b)
        assert len(set(members)) == len(members)
        quots = set()
        for lam in members:
            assert block_of(lam, b.e) == b
            quots.add(quotient_of(lam, b.e))
        assert len(quots) == len(members)


def test_crystal_operators():
    assert crystal_E(abacus_of(EMPTY, 3), 0) is None
    out = crystal_E(abacus_of(Partition((1,)), 2), 0)
    assert partition_of(out) == EMPTY
    # repeated application strictly decreases the size by one
    lam = parse_partition("4,3,1")
    a = abacus_of(lam, 3)
    for i in range(3):
        nxt = crystal_E(a, i)
        if nxt is not None:
            assert partition_of(nxt).size == partition_of(a).size - 1
    # E and F are mutually inverse along strings
    for n in range(0, 10):
        for lam in all_partitions(n):
            a = abacus_of(lam, 3)
            for i in range(3):
                up = crystal_F(a, i)
                if up is not None:
                    assert partition_of(crystal_E(up, i)) == lam
                down = crystal_E(a, i)
                if down is not None:
                    assert partition_of(crystal_F(down, i)) == lam


def test_weyl_action():
    assert partition_of(weyl_s(abacus_of(parse_partition("5,3,3"), 3), 1)) == parse_partition("4,3,3")
    rng = random.Random(11)
    for n in range(0, 12):
        for lam in all_partitions(n)[:6]:
            for e in (2, 3, 4):
                a = abacus_of(lam, e)
                for i in range(e):
                    b = weyl_s(a, i)
                    assert partition_of(weyl_s(b, i)) == lam  # involution
                    assert weight_of(partition_of(b), e) == weight_of(lam, e)
                    assert core_of(partition_of(b), e) == partition_of(
                        weyl_s(abacus_of(core_of(lam, e), e), i)
                    )


def test_weyl_braid_relations():
    rng = random.Random(5)
    for e in (3, 4, 5):
        pool = [p for n in range(10) for p in all_partitions(n)]
        for lam in rng.sample(pool, 12):
            a = abacus_of(lam, e)
            for i in range(e):
                for j in range(e):
                    if i == j:
                        continue
                    adjacent = (i - j) % e in (1, e - 1) and e > 2
                    si_sj = weyl_s(weyl_s(a, i), j)
                    sj_si = weyl_s(weyl_s(a, j), i)
                    if not adjacent or e == 2:
                        if (i - j) % e not in (1, e - 1):
                            assert si_sj == sj_si
                    else:
                        lhs = weyl_s(si_sj, i)
                        rhs = weyl_s(sj_si, j)
                        assert lhs == rhs


def test_add_full_runner():
    lam = parse_partition("5,5,4,2,2,2,1,1")
    lamp = add_full_runner(lam, 4)
    assert z_label(lamp, 5) == z_label(lam, 4)
    assert weight_of(lamp, 5) == weight_of(lam, 4)
    assert add_full_runner(EMPTY, 3) == EMPTY
    rng = random.Random(1)
    pool = [p for n in range(0, 15) for p in all_partitions(n)]
    for lam in rng.sample(pool, 50):
        for e in (2, 3):
            lamp = add_full_runner(lam, e)
            assert weight_of(lamp, e + 1) == weight_of(lam, e)
            assert z_label(lamp, e + 1) == z_label(lam, e)
            assert is_hook_quotient(lamp, e + 1) == is_hook_quotient(lam, e)


def test_conjugate_quotient_compatibility():
    for n in range(0, 15):
        for lam in all_partitions(n):
            for e in (2, 3):
                q = quotient_of(lam, e)
                qc = quotient_of(conjugate(lam), e)
                for a in range(e):
                    assert qc[a] == conjugate(q[e - 1 - a])


def test_rouquier_predicate():
    b = block_of(parse_partition("5"), 2)
    assert is_rouquier(b) and rouquier_charge(b) == 1
    assert is_rouquier(BlockId(4, core_from_levels((0, 1, 2, 3), 4), 2))
    assert not is_rouquier(block_of(parse_partition("17,7,2^4,1^5"), 10))


def test_scopes_chain():
    rb = BlockId(3, core_from_levels((0, 1, 2), 3), 2)
    assert scopes_chain(rb) == []
    for b in [BlockId(3, EMPTY, 1), BlockId(3, EMPTY, 2), BlockId(5, parse_partition("3,1"), 2),
              block_of(parse_partition("17,7,2^4,1^5"), 10)]:
        blocks, chain = scopes_chain_blocks(b)
        assert blocks[-1] == b
        assert is_rouquier(blocks[0])
        assert len(blocks) == len(chain) + 1
        # replay forward: each step must have k removable beads on runner a
        from focktiles.abacus import core_reflection_counts
        for i, (a, k) in enumerate(chain):
            lv = core_levels(blocks[i].core, b.e)
            k_rem, _ = core_reflection_counts(lv, b.e, a)
            assert k_rem == k >= 1
            stepped = partition_of(weyl_s(abacus_of(blocks[i].core, b.e), a))
            assert stepped == blocks[i + 1].core
    with pytest.raises(ValueError):
        scopes_chain(BlockId(3, EMPTY, 0))
