import math
import random

import pytest

from focktiles.partitions import EMPTY, Partition, all_partitions, parse_partition
from focktiles.abacus import BlockId, abacus_of, enumerate_block, partition_of, weyl_s
from focktiles.labels import (
    BlockContext,
    HatVec,
    hat_z,
    is_hook_quotient,
    is_m_increasing,
    modified_basis,
    movements,
    succ_geq,
    succ_maximal,
    vec_add,
    z_inverse,
    z_label,
)


def test_z_examples():
    assert z_label(parse_partition("5,5,4,2,2,2,1,1"), 4) == (1, 1, 2, 2, 1)
    assert z_label(parse_partition("16,8,1^13"), 10) == (0, 7, 8)
    assert z_label(parse_partition("6,5,4,2,2,2,1"), 4) == (1, 1, 2, 2, 2)
    assert z_label(EMPTY, 3) == ()


def test_movement_invariants():
    for n in range(0, 16):
        for lam in all_partitions(n):
            for e in (2, 3, 4):
                mvs = movements(lam, e)
                a = abacus_of(lam, e)
                assert len(mvs) == sum(a.weight_of(x) for x in a.window)
                keys = [(mv.q, mv.b) for mv in mvs]
                assert keys == sorted(keys)
                for mv in mvs:
                    assert (mv.b - mv.q) % e == 0
                    assert 0 <= (mv.b - mv.q) // e < a.weight_of(mv.b)
                z = z_label(lam, e)
                if z:
                    assert z[-1] != e  # the last movement starts at its bead
                assert all(0 <= t <= e for t in z)


def test_m_increasing():
    assert is_m_increasing((0, 7, 8), 1)
    assert not is_m_increasing((0, 7, 8), 2)
    assert is_m_increasing((1, 5, 9), 4)
    assert is_m_increasing((), 5)


def test_hook_quotient():
    assert is_hook_quotient(parse_partition("7,3,3,2,2,1"), 4)
    assert not is_hook_quotient(parse_partition("7,4,4,1,1,1"), 4)
    # every 1-increasing partition is hook-quotient
    for n in range(0, 16):
        for lam in all_partitions(n):
            for e in (2, 3):
                if is_m_increasing(z_label(lam, e), 1):
                    assert is_hook_quotient(lam, e)


def test_modified_basis_examples():
    mb = modified_basis(parse_partition("16,8,1^13"), 10)
    assert mb.plain == ((1, -1, 0), (0, 1, 0), (0, -1, 1))
    mb = modified_basis(parse_partition("7,3,3,2,2,1"), 4)
    assert mb.plain == ((1, 0, -1, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, -1, 1))
    with pytest.raises(ValueError):
        modified_basis(parse_partition("7,4,4,1,1,1"), 4)
    # Rouquier 1-increasing: all basis vectors unmodified
    from focktiles.abacus import core_from_levels

    b = BlockId(5, core_from_levels((0, 1, 2, 3, 4), 5), 2)
    hits = 0
    for lam in enumerate_block(b):
        z = z_label(lam, 5)
        if is_m_increasing(z, 1) and is_hook_quotient(lam, 5):
            w = len(z)
            assert modified_basis(lam, 5).plain == tuple(
                tuple(1 if j == i else 0 for j in range(w)) for i in range(w)
            )
            hits += 1
    assert hits > 0


def test_modified_basis_is_basis_and_bounded():
    # vertices of the anchored parallelotope have coordinates in [-2, 1]
    for n in range(0, 14):
        for lam in all_partitions(n):
            for e in (2, 3):
                if not is_hook_quotient(lam, e):
                    continue
                mb = modified_basis(lam, e).plain
                w = len(mb)
                for mask in range(1 << w):
                    v = (0,) * w
                    for i in range(w):
                        if mask >> i & 1:
                            v = vec_add(v, mb[i])
                    assert all(-2 <= t <= 1 for t in v)


def test_succ_order():
    lam = parse_partition("7,3,3,2,2,1")
    e = 4
    w = len(movements(lam, e))
    for i in range(1, w + 1):
        assert succ_geq(lam, e, i, i)
    # movements on distinct runners are incomparable
    mvs = movements(lam, e)
    for i in range(1, w + 1):
        for j in range(1, w + 1):
            if mvs[i - 1].q % e != mvs[j - 1].q % e:
                assert not succ_geq(lam, e, i, j)
                assert not succ_geq(lam, e, j, i)
    with pytest.raises(IndexError):
        succ_geq(lam, e, 0, 1)
    assert set(succ_maximal(lam, e, [1, 2, 3, 4])) == {1, 2, 4}


def test_hat_z():
    lam = parse_partition("16,8,1^13")
    mu = parse_partition("17,7,2^4,1^5")
    assert (hat_z(mu, 10) - hat_z(lam, 10)).norm() == 2
    rng = random.Random(2)
    pool = [p for n in range(0, 16) for p in all_partitions(n)]
    for lam in rng.sample(pool, 100):
        for e in (2, 3):
            h = hat_z(lam, e)
            assert h.project() == z_label(lam, e)
    # JSON round trip
    h = hat_z(mu, 10)
    assert HatVec.from_json(h.to_json()) == h


def test_z_inverse():
    b = BlockId(4, parse_partition("2"), 5)
    assert z_inverse(b, (1, 1, 2, 2, 2)) == parse_partition("6,5,4,2,2,2,1")
    with pytest.raises(ValueError):
        z_inverse(b, (1, 0, 2, 2, 2))
    with pytest.raises(ValueError):
        z_inverse(b, (1, 1))
    # Rouquier block: label (0^w0,...,(e-1)^w_{e-1}) inverts to column quotients
    from focktiles.abacus import core_from_levels, rouquier_charge
    from focktiles.canonical import shifted_quotient

    rb = BlockId(4, core_from_levels((0, 2, 4, 6), 4), 3)
    c = rouquier_charge(rb)
    lam = z_inverse(rb, (0, 2, 3))
    q = shifted_quotient(lam, 4, c)
    assert [x.parts for x in q] == [(1,), (), (1,), (1,)]
    lam2 = z_inverse(rb, (1, 1, 3))
    q2 = shifted_quotient(lam2, 4, c)
    assert [x.parts for x in q2] == [(), (1, 1), (), (1,)]


def test_goodlabels_bijection():
    for b in [BlockId(4, parse_partition("2"), 2), BlockId(3, EMPTY, 3), BlockId(5, EMPTY, 2)]:
        ctx = BlockContext(b)
        inv = ctx.z_inv()
        assert len(inv) == math.comb(b.e + b.weight - 1, b.weight)
        for z in inv:
            assert all(0 <= t <= b.e - 1 for t in z)


def test_z_constant_on_weyl_orbits():
    rng = random.Random(9)
    b = BlockId(4, parse_partition("2"), 2)
    ctx = BlockContext(b)
    for lam, z in ctx.z_map().items():
        if not is_m_increasing(z, 0):
            continue
        a = abacus_of(lam, b.e)
        for _ in range(3):
            word = [rng.randrange(b.e) for _ in range(rng.randrange(1, 8))]
            cur = a
            for i in word:
                cur = weyl_s(cur, i)
            assert z_label(partition_of(cur), b.e) == z


def test_nearly_triangular_family_e2():
    def fam(m, s, t, j):
        parts = [x for x in range(m, 0, -1) if x not in (s, t)] + [1] * (2 * j)
        return Partition(parts)

    from focktiles.abacus import weight_of

    for m in range(2, 8):
        for s in range(1, m + 1):
            for t in range(1, s):
                for j in range(0, 3):
                    lam = fam(m, s, t, j)
                    w = weight_of(lam, 2)
                    assert z_label(lam, 2) == tuple([0] * j + [1] * (w - j))


def test_principal_block_nu_w():
    for e in (4, 5, 6):
        for wv in range(1, 7):
            n = 1
            while n * (n + 1) // 2 < wv:
                n += 1
            if e < n:
                continue
            r = n * (n + 1) // 2 - wv
            parts = [k * e - r for k in range(n, r, -1)]
            parts += [k * e + n - r for k in range(r - 1, -1, -1)]
            nu = Partition(sorted((p for p in parts if p > 0), reverse=True))
            assert z_label(nu, e) == (e - 1,) * wv


def _has_disallowed_pattern(lam, e, a):
    ab = abacus_of(lam, e)
    starts = {mv.q for mv in movements(lam, e)}
    for q in range(ab.base, ab.max_occupied() + e + 1):
        if q % e == a % e and ab.occupied(q) and not ab.occupied(q - e) and (q - 1) in starts:
            return True
    return False


def test_z_unchanged_without_disallowed_pattern():
    from focktiles.partitions import all_partitions

    for n in range(0, 14):
        for lam in all_partitions(n):
            for e in (2, 3):
                for a in range(e):
                    lt = partition_of(weyl_s(abacus_of(lam, e), a))
                    if not _has_disallowed_pattern(lam, e, a):
                        assert z_label(lt, e) == z_label(lam, e)
    # and the paper's counterexample where the pattern is present
    lam = Partition((5, 3, 3))
    assert _has_disallowed_pattern(lam, 3, 1)
    assert z_label(lam, 3) != z_label(partition_of(weyl_s(abacus_of(lam, 3), 1)), 3)


def test_bead_movement_bijection_shifts():
    from focktiles.partitions import all_partitions

    for n in range(0, 13):
        for lam in all_partitions(n):
            for e in (2, 3):
                for a in range(e):
                    lt = partition_of(weyl_s(abacus_of(lam, e), a))
                    A0 = movements(lam, e)
                    A1 = movements(lt, e)
                    assert len(A0) == len(A1)
                    off0 = sorted(mv.q for mv in A0 if mv.q % e not in (a % e, (a - 1) % e))
                    off1 = sorted(mv.q for mv in A1 if mv.q % e not in (a % e, (a - 1) % e))
                    assert off0 == off1
                    for (q0, _), (q1, _) in zip(
                        sorted((mv.q, mv.b) for mv in A0), sorted((mv.q, mv.b) for mv in A1)
                    ):
                        if q0 % e == a % e:
                            assert q1 in (q0, q0 - 1)
                        elif q0 % e == (a - 1) % e:
                            assert q1 in (q0, q0 + 1)
                        else:
                            assert q1 == q0
