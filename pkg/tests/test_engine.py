from fractions import Fraction

import pytest

from toothpicks import closedform as cf
from toothpicks import engine
from toothpicks.engine import (
    MID,
    Y_ARMS,
    bounding_box,
    corner_boundary_snapshot,
    grow,
    new_structure,
)
from toothpicks.verify import load_fixture


def occupancy_from_segments(structure):
    """Brute-force endpoint/midpoint occupancy, recomputed from scratch."""
    occ = {}

    def end(p):
        occ[p] = occ.get(p, 0) + 1

    def mid(p):
        occ[p] = occ.get(p, 0) + MID

    for s in structure.iter_segments():
        if s.orient == "s":
            end((s.x, s.y))
            end((s.x + 1, s.y))
        elif s.orient in ("h", "v"):
            mid((s.x, s.y))
            for e in (
                (s.x, s.y - 1), (s.x, s.y + 1)
            ) if s.orient == "v" else ((s.x - 1, s.y), (s.x + 1, s.y)):
                end(e)
    return occ


def brute_exposed(structure):
    if structure.variant == "t":
        occ = {}
        for (p, u), stage in (
            (t, st) for st, tees in enumerate(structure.tees) for t in tees
        ):
            occ[p] = occ.get(p, 0) + MID
            v = (-u[1], u[0])
            for d in (u, v, (-v[0], -v[1])):
                e = (p[0] + 2 * d[0], p[1] + 2 * d[1])
                occ[e] = occ.get(e, 0) + 1
        return {p for p, v in occ.items() if v == 1}
    if structure.variant == "y":
        occ = {}
        for centers in structure.centers:
            for c in centers:
                occ[c] = occ.get(c, 0) + MID
                for a in Y_ARMS:
                    e = (c[0] + a[0], c[1] + a[1])
                    occ[e] = occ.get(e, 0) + 1
        return {p for p, v in occ.items() if v == 1}
    return {p for p, v in occupancy_from_segments(structure).items() if v == 1}


def test_counts_match_published_terms():
    assert grow("toothpick", 49).counts == list(load_fixture("A139251").terms)
    assert grow("toothpick", 49, fast=False).counts == list(load_fixture("A139251").terms)
    assert grow("corner", 39, fast=False).counts == list(load_fixture("A152980").terms)
    assert grow("leftist", 15, fast=False).counts == list(load_fixture("A151565").terms)


def test_totals_spot_values():
    assert grow("toothpick", 10).total() == 55
    assert grow("toothpick", 53).total() == 1379
    assert grow("toothpick", 0).total() == 0
    assert grow("corner", 7, fast=False).total() == 28


def test_added_per_stage_views():
    s = grow("corner", 14, fast=False)
    assert s.added_per_stage().value(14) == 22
    sl = grow("leftist", 15, fast=False)
    assert sl.added_per_stage().value(15) == 8
    assert sl.total() == 46


def test_fast_and_dict_engines_are_bit_identical():
    a = grow("toothpick", 64)
    b = grow("toothpick", 64, fast=False)
    assert a.counts == b.counts
    assert a.dump() == b.dump()
    assert a.exposed_points() == b.exposed_points()


@pytest.mark.parametrize("variant,fast", [
    ("toothpick", True), ("toothpick", False), ("corner", False), ("leftist", False),
])
def test_exposure_matches_brute_force(variant, fast):
    s = new_structure(variant, fast=fast)
    for _ in range(64):
        s.grow(1)
    assert s.exposed_points() == brute_exposed(s)


def test_exposure_brute_force_t_and_y():
    for variant in ("t", "y"):
        s = grow(variant, 32)
        assert s.exposed_points() == brute_exposed(s)


def test_orientation_parity():
    for variant, odd in (("toothpick", "v"), ("corner", "v"), ("leftist", "h")):
        s = grow(variant, 33, fast=False)
        for seg in s.iter_segments():
            if seg.orient == "s":
                continue
            want = odd if seg.stage % 2 == 1 else ("h" if odd == "v" else "v")
            assert seg.orient == want, (variant, seg)


def test_post_power_of_two_shape():
    # after 2**k stages: bounding box of doubled radius 2**(k-1), the four
    # protruding corner tips exposed, nothing else
    for k in range(2, 9):
        s = grow("toothpick", 1 << k)
        half = 1 << (k - 1)
        assert bounding_box(s) == (-half, -half, half, half)
        assert s.exposed_points() == {
            (sx * half, sy * half) for sx in (-1, 1) for sy in (-1, 1)
        }


def test_corner_boundary_snapshots():
    for k in range(2, 9):
        s = grow("corner", (1 << k) - 1, fast=False)
        rep = corner_boundary_snapshot(s)
        assert rep.k == k
        assert rep.height == Fraction(1 << (k - 1)) - Fraction(1, 2)
        assert rep.width == (1 << (k - 1)) - 1
        assert rep.top_exposed_ends == 1 << (k - 1)
        assert rep.has_protruding_half
        assert rep.interior_exposed_ends == 0


def test_corner_snapshot_rejects_other_stages():
    with pytest.raises(ValueError):
        corner_boundary_snapshot(grow("corner", 6, fast=False))
    with pytest.raises(ValueError):
        corner_boundary_snapshot(grow("toothpick", 7, fast=False))


def test_t_toothpick_counts():
    seq = engine.simulate_t_toothpick(3)
    assert seq.value(0) == 0
    assert seq.value(1) == 1
    assert seq.value(2) == 3
    assert seq.value(3) == 5
    long = engine.simulate_t_toothpick(512)
    assert list(long.terms) == [cf.ttp_tau(n) for n in range(513)]


def test_y_toothpick_counts():
    seq = engine.simulate_y_toothpick(8)
    assert seq.value(0) == 0
    assert seq.value(1) == 1
    assert list(seq.terms) == list(load_fixture("y_toothpick_added").terms)[:9]


def test_y_arms_never_reverse():
    # the same-orientation rule is overlap-free because no arm direction
    # is the negation of another
    negs = {(-a, -b) for a, b in Y_ARMS}
    assert negs.isdisjoint(set(Y_ARMS))


def test_quadrant_relation_geometric():
    # T(n) = 4 * Q(n) + 3 for n >= 3, with Q counted inside one quadrant
    s = new_structure("toothpick")
    s.grow(256)
    per_stage = [0] * (s.stage + 1)
    for n in range(s.stage + 1):
        _, qx, qy = s.stage_midpoints(n)
        per_stage[n] = int(((qx > 0) & (qy > 0)).sum())
    total_all = 0
    total_q = 0
    for n in range(s.stage + 1):
        total_all += s.counts[n]
        total_q += per_stage[n]
        if n >= 3:
            assert total_all == 4 * total_q + 3, n


def test_dump_round_trip_fields():
    s = grow("corner", 5, fast=False)
    lines = s.dump().splitlines()
    assert lines == sorted(lines, key=lambda ln: (int(ln.split()[0]), ln.split()[1],
                                                  int(ln.split()[2]), int(ln.split()[3])))
    assert sum(1 for ln in lines if ln.split()[1] == "s") == 1
    assert len(lines) == 1 + s.total()


def test_unknown_variant_rejected():
    with pytest.raises(ValueError):
        new_structure("hexagon")
    with pytest.raises(ValueError):
        new_structure("corner", fast=True)
