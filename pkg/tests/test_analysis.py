from fractions import Fraction

import pytest

from toothpicks import analysis
from toothpicks import recurrences as rec
from toothpicks.engine import grow, new_structure
from toothpicks.gridca import MOORE8, TOOTHPICK_DIGRAPH, CellGrid, uw_von_neumann


def test_detect_rectangles_examples():
    assert analysis.detect_rectangles(grow("toothpick", 7, fast=False)).count == 18
    assert analysis.detect_rectangles(grow("toothpick", 3, fast=False)).count == 2
    assert analysis.detect_rectangles(grow("toothpick", 2, fast=False)).count == 0


def test_detect_rectangles_extents():
    rep = analysis.detect_rectangles(grow("toothpick", 3, fast=False))
    assert rep.rectangles == ((-1, -1, 0, 1), (0, -1, 1, 1))


def test_rectangles_match_recurrence_per_stage():
    R = rec.rect_R_prefix(96)
    s = new_structure("toothpick", fast=False)
    for n in range(1, 97):
        s.grow(1)
        assert analysis.detect_rectangles(s).count == R[n], n
    assert analysis.rectangle_counts_by_stage(s) == R[:97]


def test_corner_rectangles_count_against_quadrant_walls():
    rho = rec.rect_rho_prefix(96)
    sums = [sum(rho[: i + 1]) for i in range(97)]
    s = new_structure("corner", fast=False)
    for n in range(1, 97):
        s.grow(1)
        assert analysis.detect_rectangles(s).count == sums[n], n
    assert analysis.rectangle_counts_by_stage(s) == sums


def test_euler_and_walk_agree_far_out():
    s = grow("toothpick", 512)
    assert analysis.rectangle_counts_by_stage(s) == rec.rect_R_prefix(512)


def test_non_rectangular_face_is_an_error():
    # an L-shaped closed region (6 corners) must trip the falsification channel
    edges = [
        (0, 0, 0), (1, 0, 0),  # bottom
        (2, 0, 1), (2, 1, 1),  # right
        (2, 2, 2),             # top of the tall part
        (1, 2, 3),             # down the inner notch
        (1, 1, 2),             # across the notch
        (0, 1, 3),             # down the left side
    ]
    bounded, _ = analysis.extract_faces(edges, raw_edges=True)
    assert len(bounded) == 1 and bounded[0][0] == 6


def test_ratio_bound():
    rep = analysis.ratio_bound_check(1 << 12)
    assert rep.equality_indices == tuple((1 << k) - 1 for k in range(1, 13))
    # the two stated boundary cases, exhibited exactly
    assert Fraction(rec.toothpick_T(15), 15 * 15) == Fraction(2, 3) + Fraction(1, 45)
    assert Fraction(rec.toothpick_T(16), 16 * 16) < Fraction(2, 3) + Fraction(1, 48)
    assert Fraction(rec.toothpick_T(1), 1) == Fraction(2, 3) + Fraction(1, 3)


def test_limsup_witness():
    # T(2**k - 1) = (2**k - 1)(2**(k+1) - 1)/3 makes the bound exact
    for k in range(1, 21):
        n = (1 << k) - 1
        assert 3 * rec.toothpick_T(n) == n * ((1 << (k + 1)) - 1)


def test_local_minima():
    assert analysis.local_minima(100) == [1, 2, 5, 12, 21, 44, 89]
    assert analysis.local_minima(3000)[-2:] == [1459, 2921]
    assert analysis.local_minima(1) == [1]
    assert analysis.local_minima(0) == []


def test_sample_limit_function_small():
    ls = analysis.sample_limit_function(2)
    assert [s.value for s in ls.samples] == [
        Fraction(11, 16),
        Fraction(15, 25),
        Fraction(23, 36),
        Fraction(35, 49),
    ]
    assert ls.left_value == Fraction(11, 16)


def test_sample_limit_function_block_start_value():
    # at i = 0 the ratio is exactly 2/3 + 4**(-k)/3
    for k in (3, 6, 10):
        ls = analysis.sample_limit_function(k)
        assert ls.left_value == Fraction(2, 3) + Fraction(1, 3 * 4**k)


def test_tree_checks():
    assert analysis.tree_check(CellGrid(uw_von_neumann(2)).grow(16))
    assert analysis.tree_check(CellGrid(TOOTHPICK_DIGRAPH).grow(32))
    assert analysis.tree_check(grow("toothpick", 64))
    # no tree claim for the eight-neighbor rule; informational only
    assert analysis.tree_check(CellGrid(MOORE8).grow(8)) is False


def test_quadrant_Q():
    assert analysis.quadrant_Q(3) == 1
    assert analysis.quadrant_Q(9) == 11
    assert analysis.quadrant_Q(0) == 0
    s = grow("toothpick", 128, fast=False)
    assert analysis.quadrant_count_geometric(s) == analysis.quadrant_Q(128)


def test_detect_rectangles_rejects_other_variants():
    with pytest.raises(ValueError):
        analysis.detect_rectangles(grow("t", 3))
