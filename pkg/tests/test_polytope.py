import json

import pytest

from focktiles.partitions import EMPTY, parse_partition
from focktiles.abacus import BlockId, block_of
from focktiles.labels import BlockContext, is_m_increasing, z_label
from focktiles.laurent import LaurentPoly
from focktiles.polytope import (
    build_tiling,
    check_common_faces,
    check_cube_injectivity,
    check_discrete_union,
    d_closed,
    d_closed_detail,
    export_tiling,
    ext_adjacency,
    hypercube_of,
    parallelotope_of,
    pi_membership,
)
from focktiles.canonical import rouquier_d


q = LaurentPoly.monomial
P = parse_partition


def test_pi_membership_examples():
    lam = P("16,8,1^13")
    assert pi_membership(lam, (1, 5, 9), 10) == frozenset({1, 3})
    assert pi_membership(lam, z_label(lam, 10), 10) == frozenset()
    assert pi_membership(P("3,2"), (2, 0), 2) == frozenset({1})
    assert pi_membership(lam, (9, 9, 9), 10) is None
    with pytest.raises(ValueError):
        pi_membership(P("7,4,4,1,1,1"), (1, 1, 2, 3), 4)


def test_parallelotope_vertices():
    pi = parallelotope_of(P("3,2"), 2)
    assert set(pi.vertices()) == {(1, 1), (1, 2), (2, 0), (2, 1)}
    cube = hypercube_of(P("3,2"), 2)
    assert len(set(cube.vertices())) == 4
    projected = {v.project() for v in cube.vertices()}
    assert projected == set(pi.vertices())


def test_d_closed_examples():
    lam, mu = P("16,8,1^13"), P("17,7,2^4,1^5")
    assert d_closed(lam, mu, 10) == q(2)
    assert d_closed(lam, lam, 10) == LaurentPoly.one()
    assert d_closed(P("4,1"), mu, 10) == LaurentPoly.zero()  # different block
    # non-hook-quotient lambda contributes zero
    assert d_closed(P("7,4,4,1,1,1"), P("10,4,2,1,1"), 4) == LaurentPoly.zero()


def test_d_closed_outside_hypotheses():
    # mu = (5) at e = 2 is not 0-increasing: the raw formula value is q^2
    # even though the true decomposition number vanishes; the detail report
    # carries the hypothesis flag and both route values.
    lam, mu = P("3,2"), P("5")
    detail = d_closed_detail(lam, mu, 2)
    assert not detail["mu_4_increasing"]
    assert detail["gamma"] == frozenset({1, 2})
    assert detail["pi_value"] == q(2)
    assert rouquier_d(lam, mu, block_of(mu, 2)) == LaurentPoly.zero()


def test_tiling_figures():
    t2 = build_tiling(BlockId(17, P("5,3,1"), 2))
    assert len(t2.generic_cells()) == (17 - 10) * (17 - 11) // 2
    t3 = build_tiling(BlockId(25, P("15,1^14"), 3))
    g3 = t3.generic_cells()
    assert len(g3) == 20
    assert len(t3.generator_classes()) == 7
    t0 = build_tiling(BlockId(5, P("3,1"), 0))
    assert t0.cells != [] and len(t0.cells) == 1
    assert t0.cells[0][1].vertices() == [()]


def test_tiling_laws_small():
    for b in [BlockId(6, EMPTY, 2), BlockId(5, P("1"), 2), BlockId(9, EMPTY, 3)]:
        t = build_tiling(b)
        assert check_discrete_union(t)
        assert check_cube_injectivity(t)
        assert check_common_faces(t)


def test_ext_adjacency():
    b = BlockId(11, EMPTY, 2)
    ctx = BlockContext(b)
    pairs = ext_adjacency(b, ctx)
    assert pairs
    pairset = {frozenset((x, y)) for x, y in pairs}
    # pairs (lam, lam_H) with both 4-increasing are adjacent
    from focktiles.partitions import hooks_e
    from focktiles.beadops import lambda_of_hook
    from focktiles.labels import is_hook_quotient

    from focktiles.beadops import MoveError

    found = 0
    for lam in ctx.members():
        if not is_hook_quotient(lam, b.e):
            continue
        if not is_m_increasing(ctx.z_map()[lam], 4):
            continue
        for h in hooks_e(lam, b.e):
            try:
                out = lambda_of_hook(lam, h, b.e)
            except MoveError:
                continue
            if is_m_increasing(z_label(out, b.e), 4):
                assert frozenset((lam, out)) in pairset
                found += 1
    assert found > 0
    # the e=10 pair sits at distance two, hence is not adjacent
    b10 = block_of(P("16,8,1^13"), 10)
    pairs10 = ext_adjacency(b10)
    assert frozenset((P("16,8,1^13"), P("17,7,2^4,1^5"))) not in {
        frozenset(p) for p in pairs10
    }
    assert ext_adjacency(BlockId(5, P("3,1"), 0)) == []


def test_export_tiling():
    t = build_tiling(BlockId(6, EMPTY, 2))
    blob = export_tiling(t, "json")
    assert blob == export_tiling(t, "json")  # deterministic
    doc = json.loads(blob.decode())
    assert doc["e"] == 6 and doc["weight"] == 2
    assert len(doc["cells"]) == len(t.cells)
    cell = doc["cells"][0]
    assert set(cell) == {"owner", "anchor", "generators", "hat_anchor"}
    svg = export_tiling(t, "svg").decode()
    assert svg.startswith("<svg")  # no generic cells at e=6, so no polygons
    big = build_tiling(BlockId(17, P("5,3,1"), 2))
    svg21 = export_tiling(big, "svg").decode()
    assert svg21.count("<polygon") == 21
    t3 = build_tiling(BlockId(5, EMPTY, 3))
    with pytest.raises(ValueError):
        export_tiling(t3, "svg")
    with pytest.raises(ValueError):
        export_tiling(t, "png")
    empty = build_tiling(BlockId(4, P("2"), 0))
    json.loads(export_tiling(empty, "json").decode())


def test_parallelotopes_versus_cubes():
    # for 4-increasing mu in Pi(lam): zhat(mu) = zhat(lam) + lifted eps_Gamma
    # and the box distance equals |Gamma|
    from focktiles.labels import hat_z, is_hook_quotient, modified_basis

    for b in [BlockId(9, EMPTY, 2), BlockId(10, P("1"), 2), BlockId(12, EMPTY, 3)]:
        ctx = BlockContext(b)
        e = b.e
        four = [mu for mu in ctx.members() if is_m_increasing(ctx.z_map()[mu], 4)]
        for lam in ctx.members():
            if not is_hook_quotient(lam, e):
                continue
            mb = modified_basis(lam, e)
            hl = hat_z(lam, e)
            for mu in four:
                gamma = pi_membership(lam, ctx.z_map()[mu], e)
                if gamma is None:
                    continue
                lift = hl
                for i in sorted(gamma):
                    lift = lift + mb.lifted[i - 1]
                hm = hat_z(mu, e)
                assert hm == lift
                assert (hm - hl).norm() == len(gamma)


def test_shift_by_three():
    # if z(mu) lies in Pi(lam) and one of them is m-increasing, the other is
    # (m-3)-increasing
    from focktiles.labels import is_hook_quotient

    b = BlockId(9, EMPTY, 2)
    ctx = BlockContext(b)
    for lam in ctx.members():
        if not is_hook_quotient(lam, b.e):
            continue
        zl = ctx.z_map()[lam]
        for mu in ctx.members():
            zm = ctx.z_map()[mu]
            if pi_membership(lam, zm, b.e) is None:
                continue
            for m in range(0, 8):
                if is_m_increasing(zm, m):
                    assert is_m_increasing(zl, m - 3)
                if is_m_increasing(zl, m):
                    assert is_m_increasing(zm, m - 3)
