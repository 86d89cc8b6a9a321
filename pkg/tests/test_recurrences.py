import pytest

from toothpicks import recurrences as rec
from toothpicks.verify import load_fixture


def fix(name):
    return list(load_fixture(name).terms)


def test_toothpick_t_against_published_terms():
    assert rec.toothpick_t_prefix(49) == fix("A139251")
    assert rec.toothpick_t(14) == 28
    assert rec.toothpick_t(16) == 16
    assert rec.toothpick_t(11) == 2 * rec.toothpick_t(3) + rec.toothpick_t(4) == 12


def test_toothpick_T_against_published_terms():
    assert rec.toothpick_T_prefix(49) == fix("A139250")
    assert rec.toothpick_T(8) == 43
    assert rec.toothpick_T(32) == 683
    assert rec.toothpick_T(0) == 0
    assert rec.toothpick_T(53) == 1379
    assert rec.toothpick_T(64) == 2731


def test_corner_against_published_terms():
    assert rec.corner_c_prefix(39) == fix("A152980")
    assert rec.corner_C_prefix(39) == fix("A153006")
    assert rec.corner_c(14) == 22
    assert rec.corner_c(8) == 5
    assert rec.corner_c(0) == 0


def test_rectangle_recurrences():
    assert rec.rect_rho_prefix(15) == fix("A168131")
    assert rec.rect_r_prefix(15) == fix("A160125")
    assert rec.rect_R_prefix(15) == fix("A160124")
    assert rec.rect_rho(14) == 18
    assert rec.rect_r(15) == 4 * rec.rect_rho(7) + 2 == 30
    assert rec.rect_R(15) == 94


def test_eight_neighbor_recurrences():
    assert rec.eight_v1_prefix(29) == fix("A151747")
    assert rec.eight_v2_prefix(29) == fix("A151728")
    assert rec.eight_v_prefix(29) == fix("A151726")
    assert rec.eight_V_prefix(29) == fix("A151725")
    assert rec.eight_v1(16) == 53
    assert rec.eight_v2(9) == 7
    assert rec.eight_v(8) == 44


def test_f_sequence():
    assert rec.f_sequence_prefix(10) == fix("A147646")
    assert rec.f_sequence(7) == 20
    assert rec.f_sequence(4) == 16
    # rows of the shifted triangle converge to F: t(2**k + i + 1) = F(i)
    assert rec.toothpick_t(14) == rec.f_sequence(5) == 28


def test_uw_recurrence():
    assert rec.uw_u_prefix(49) == fix("A147582")
    assert rec.uw_U_prefix(49) == fix("A147562")
    assert rec.uw_u_recurrence(16) == 108
    assert rec.uw_u_recurrence(2) == 4
    assert rec.uw_u_recurrence(9) == 4


def test_generic_theorem4():
    spec = rec.RecurrenceSpec(1, 1, 1, 2)
    assert rec.generic_theorem4(spec, 14) == 22  # the corner parameters
    assert rec.generic_theorem4_prefix(spec, 39) == fix("A152980")
    assert rec.generic_theorem4(rec.RecurrenceSpec(1, 1, 0, 0), 2) == 1
    assert rec.generic_theorem4(rec.RecurrenceSpec(5, 2, -1, 3), 1) == 5
    with pytest.raises(ValueError):
        rec.RecurrenceSpec(1, 1, 1, 2, start_k=2)


def test_bootstrap_rows_share_prefixes():
    # t(2**k + i) = t(2**(k+1) + i) for 1 <= i <= 2**k - 1, k <= 14
    t = rec.toothpick_t_prefix(1 << 15)
    for k in range(1, 14):
        base, nxt = 1 << k, 1 << (k + 1)
        assert t[base + 1 : base + base] == t[nxt + 1 : nxt + base]


def test_block_sums():
    # sum of t over [2**k, 2**(k+1)) is 2**k * (2**(k+1) - 1)
    t = rec.toothpick_t_prefix(1 << 15)
    for k in range(0, 14):
        base = 1 << k
        assert sum(t[base : 2 * base]) == base * (2 * base - 1)


def test_interleaving_identities():
    n_max = 1 << 16
    t = rec.toothpick_t_prefix(n_max + 1)
    c = rec.corner_c_prefix(n_max)
    T = rec.toothpick_T_prefix(n_max + 1)
    C = rec.corner_C_prefix(n_max)
    Q = [0, 0, 0] + [(T[n] - 3) // 4 for n in range(3, n_max + 2)]
    for n in range(3, n_max + 2):
        assert (T[n] - 3) % 4 == 0
    for n in range(1, n_max + 1):
        assert 4 * c[n] == 2 * t[n] + t[n + 1]  # c = t/2 + t'/4
    for n in range(2, n_max):
        assert C[n] == 2 * Q[n] + Q[n + 1] + 2
    for n in range(3, n_max + 1):
        assert t[n] % 4 == 0
        assert Q[n] - Q[n - 1] == t[n] // 4  # q = t/4
