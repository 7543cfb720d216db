import random
from fractions import Fraction

import pytest

from quatheta.rootdata import (
    HalfInt,
    Weight,
    build_root_system,
    dominant_representative,
    half,
    highest_root,
    highest_root_coefficients,
    is_dominant,
    quaternionic_structure,
    weyl_orbit,
)


class TestHalfInt:
    def test_constructor_takes_doubled_value(self):
        assert HalfInt(8) == 4
        assert HalfInt(1) == Fraction(1, 2)
        assert HalfInt(-3) == Fraction(-3, 2)

    def test_of_takes_actual_value(self):
        assert HalfInt.of(4) == 4
        assert HalfInt.of(Fraction(3, 2)).twice == 3
        assert half(3) == 3
        with pytest.raises(ValueError):
            HalfInt.of(Fraction(1, 3))

    def test_parse(self):
        assert HalfInt.parse("3/2").twice == 3
        assert HalfInt.parse("-5/2").twice == -5
        assert HalfInt.parse("4") == 4
        with pytest.raises(ValueError):
            HalfInt.parse("1/3")

    def test_str(self):
        assert str(half(3)) == "3"
        assert str(HalfInt(3)) == "3/2"
        assert str(HalfInt(-1)) == "-1/2"

    def test_arithmetic(self):
        a = HalfInt(3)
        b = HalfInt(1)
        assert (a + b) == 2
        assert (a - b) == 1
        assert -a == HalfInt(-3)
        assert abs(HalfInt(-3)) == a
        assert 2 * a == 3
        assert a * 2 == 3

    def test_no_halfint_product(self):
        with pytest.raises(TypeError):
            HalfInt(3) * HalfInt(3)

    def test_comparisons_and_hash(self):
        assert HalfInt(1) < 1 < HalfInt(3)
        assert hash(half(2)) == hash(2)
        assert hash(HalfInt(3)) == hash(Fraction(3, 2))
        assert len({half(2), 2, Fraction(2)}) == 1

    def test_is_integer(self):
        assert half(2).is_integer()
        assert not HalfInt(3).is_integer()


class TestWeight:
    def test_coercion_and_twice(self):
        w = Weight((2, Fraction(3, 2), -1), "B3")
        assert w.twice() == (4, 3, -2)
        assert Weight.from_twice((4, 3, -2), "B3") == w

    def test_json_round_trip(self):
        w = Weight((2, HalfInt(3), -1), "B3")
        data = w.to_json()
        assert data == [2, "3/2", -1]
        assert Weight.from_json(data, "B3") == w

    def test_equality_is_system_aware(self):
        assert Weight((1, 0, 0), "B3") == Weight((1, 0, 0), "B3")
        assert Weight((1, 0, 0), "B3") != Weight((1, 0, 0), "C3")


# ambient dim, rank, number of positive roots, Weyl order, doubled rho
ROOT_SYSTEM_TABLE = {
    "A1": (2, 1, 1, 2, (1, -1)),
    "A2": (3, 2, 3, 6, (2, 0, -2)),
    "A5": (6, 5, 15, 720, (5, 3, 1, -1, -3, -5)),
    "B3": (3, 3, 9, 48, (5, 3, 1)),
    "B4": (4, 4, 16, 384, (7, 5, 3, 1)),
    "C1": (1, 1, 1, 2, (2,)),
    "C3": (3, 3, 9, 48, (6, 4, 2)),
    "D4": (4, 4, 12, 192, (6, 4, 2, 0)),
    "D6": (6, 6, 30, 23040, (10, 8, 6, 4, 2, 0)),
    "E6": (8, 6, 36, 51840, (0, 2, 4, 6, 8, -8, -8, 8)),
    "E7": (8, 7, 63, 2903040, (0, 2, 4, 6, 8, 10, -17, 17)),
    "E8": (8, 8, 120, 696729600, (0, 2, 4, 6, 8, 10, 12, 46)),
    "F4": (4, 4, 24, 1152, (11, 5, 3, 1)),
    "G2": (3, 2, 6, 12, (4, 2, -6)),
}


@pytest.mark.parametrize("label", sorted(ROOT_SYSTEM_TABLE))
def test_root_system_shape(label):
    dim, rank, npos, worder, rho2 = ROOT_SYSTEM_TABLE[label]
    rs = build_root_system(label)
    assert rs.dim == dim
    assert rs.rank == rank
    assert len(rs.simple_roots) == rank
    assert len(rs.positive_roots) == npos
    assert rs.weyl_order == worder
    assert rs.rho.twice() == rho2


@pytest.mark.parametrize("label", sorted(ROOT_SYSTEM_TABLE))
def test_rho_is_half_sum_of_positive_roots(label):
    rs = build_root_system(label)
    total = [0] * rs.dim
    for r in rs.positive_roots:
        for i, c in enumerate(r.twice()):
            total[i] += c
    assert tuple(c // 2 for c in total) == rs.rho.twice()
    assert all(c % 2 == 0 for c in total)


@pytest.mark.parametrize("label,coeffs", [
    ("E6", (1, 2, 2, 3, 2, 1)),
    ("E7", (2, 2, 3, 4, 3, 2, 1)),
    ("E8", (2, 3, 4, 6, 5, 4, 3, 2)),
    ("F4", (2, 3, 4, 2)),
    ("G2", (3, 2)),
])
def test_highest_root_coefficients(label, coeffs):
    assert highest_root_coefficients(label) == coeffs


@pytest.mark.parametrize("label", sorted(ROOT_SYSTEM_TABLE))
def test_highest_root_reconstruction(label):
    rs = build_root_system(label)
    coeffs = highest_root_coefficients(label)
    total = [0] * rs.dim
    for c, a in zip(coeffs, rs.simple_roots):
        for i, x in enumerate(a.twice()):
            total[i] += c * x
    assert tuple(total) == highest_root(label).twice()
    assert highest_root(label) in [r for r in rs.positive_roots]


def test_highest_root_values():
    assert highest_root("B3").twice() == (2, 2, 0)
    assert highest_root("E7").twice() == (0, 0, 0, 0, 0, 0, -2, 2)


def test_dominant_representative_golden():
    w = Weight((-1, 3, 2), "B3")
    assert dominant_representative(w).coords == (3, 2, 1)


@pytest.mark.parametrize("label", ["B3", "C3", "D4", "G2", "F4"])
def test_dominant_representative_properties(label):
    rs = build_root_system(label)
    rng = random.Random(7)
    rho2 = rs.rho.twice()
    simple2 = [a.twice() for a in rs.simple_roots]
    for _ in range(10):
        t = list(rho2)
        for a2 in simple2:
            c = rng.randrange(-3, 4)
            for i, x in enumerate(a2):
                t[i] += c * x
        w = Weight.from_twice(tuple(t), label)
        d = dominant_representative(w)
        assert is_dominant(d)
        assert dominant_representative(d) == d
        assert w in weyl_orbit(d)


def test_weyl_orbit_sizes():
    assert len(weyl_orbit(Weight((1, 0, 0), "B3"))) == 6
    assert len(weyl_orbit(Weight((0, 0, 0), "B3"))) == 1
    assert len(weyl_orbit(Weight((1, 0, -1), "G2"))) == 6


def test_is_dominant():
    assert is_dominant(Weight((2, 1, 0), "B3"))
    assert not is_dominant(Weight((1, 2, 0), "B3"))


QUAT_TABLE = {
    # label: (system, m_label, m_factors, vm_dim)
    "Spin(4,3)": ("B3", "SU(2)xSpin(3)", ("C1", "C1"), 6),
    "Spin(4,4)": ("D4", "SU(2)^3", ("C1", "C1", "C1"), 8),
    "E6_4": ("E6", "SU(6)", ("A5",), 20),
    "E7_4": ("E7", "Spin(12)", ("D6",), 32),
    "E8_4": ("E8", "E7", ("E7",), 56),
    "F4_4": ("F4", "Sp(3)", ("C3",), 14),
    "G2_2": ("G2", "SU(2)", ("C1",), 4),
}


@pytest.mark.parametrize("g_label", sorted(QUAT_TABLE))
def test_quaternionic_structure_rows(g_label):
    system, m_label, m_factors, vm_dim = QUAT_TABLE[g_label]
    qs = quaternionic_structure(g_label)
    assert qs.g_label == g_label
    assert qs.system == system
    assert qs.m_label == m_label
    assert qs.m_factors == m_factors
    assert qs.vm_dim == vm_dim
    assert qs.k_label.startswith("SU_0(2)")
    hr = highest_root(system).twice()
    assert qs.alpha0.twice() == tuple(-c for c in hr)


def test_quaternionic_structure_unknown_label():
    with pytest.raises(ValueError):
        quaternionic_structure("Spin(5,5)")
