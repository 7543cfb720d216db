import pytest

from quatheta.quaternionic import QuatModule
from quatheta.rootdata import HalfInt
from quatheta.thetamaps import (
    ThetaLift,
    infchar_crosscheck,
    seesaw_truncation_check,
    theta_e6_torus,
    theta_e6_u2,
    theta_e7,
    theta_e8_spin8,
    theta_e8_spin9,
    theta_f4,
)


def h(p):
    return HalfInt(p)


def _single(lift):
    (mod, mult), = lift.lifts
    return mod, mult


class TestE6Torus:
    def test_generic(self):
        mod, mult = _single(theta_e6_torus(2, -1, -1))
        assert mult == 1
        assert mod == QuatModule("Spin(4,4)", ((0,), (1,), (1,)), 6, "sigma")

    def test_sign_invariance_under_negation(self):
        # at least two negative entries: lift of -t
        assert theta_e6_torus(1, 1, -2).to_json() == \
               theta_e6_torus(-1, -1, 2).to_json()

    def test_rotation_by_negative_index(self):
        mod, _ = _single(theta_e6_torus(-2, 1, 1))
        assert mod.s == 6
        assert mod.kind == "sigma"

    def test_origin_splits(self):
        lift = theta_e6_torus(0, 0, 0)
        mods = [(m.s, sign) for (m, _), sign in
                zip(lift.lifts, ("+", "-"))]
        plus = theta_e6_torus(0, 0, 0, sign="+")
        minus = theta_e6_torus(0, 0, 0, sign="-")
        pm, _ = _single(plus)
        mm, _ = _single(minus)
        assert pm == QuatModule("Spin(4,4)", ((0,), (0,), (0,)), 4, "sigma")
        assert mm == QuatModule("Spin(4,4)", ((0,), (0,), (0,)), 6, "sigma")
        assert plus.sign == "+" and minus.sign == "-"
        assert len(lift.lifts) == 2

    def test_rejects_nonzero_sum(self):
        with pytest.raises(ValueError):
            theta_e6_torus(1, 0, 0)


class TestE6U2:
    def test_readme_example(self):
        assert theta_e6_u2(2, 1).to_json() == {
            "sigma": {"G": "Spin(4,3)", "s": 7, "wm": [[0], [1]]},
        }

    def test_negative_b_regime(self):
        mod, _ = _single(theta_e6_u2(3, -1))
        assert mod == QuatModule("Spin(4,3)", ((1,), (2,)), 7, "sigma")

    def test_wall_pair_is_upper_bound(self):
        lift = theta_e6_u2(1, -1)
        assert lift.upper_bound
        assert lift.to_json() == {
            "lifts": [
                {"sigma": {"G": "Spin(4,3)", "s": 5, "wm": [[1], [0]]},
                 "sign": "+"},
                {"sigma": {"G": "Spin(4,3)", "s": 6, "wm": [[0], [0]]},
                 "sign": "-"},
            ],
            "upper_bound": True,
        }

    def test_zero_case(self):
        lift = theta_e6_u2(0, 0, sign="-")
        assert lift.zero
        assert lift.to_json() == {"zero": True, "sign": "-"}

    def test_negated_parameters_agree(self):
        assert theta_e6_u2(-1, -3).to_json() == theta_e6_u2(3, 1).to_json()

    def test_rejects_unordered(self):
        with pytest.raises(ValueError):
            theta_e6_u2(1, 2)


class TestE7:
    def test_low_regime(self):
        mod, _ = _single(theta_e7(2, 1, 1))
        assert mod == QuatModule("Spin(4,3)", ((1,), (1,)), 8, "sigma")

    def test_middle_regime(self):
        mod, _ = _single(theta_e7(2, 1, 3))
        assert mod == QuatModule("Spin(4,3)", ((0,), (1,)), 9, "sigma")
        mod2, _ = _single(theta_e7(2, 2, 2))
        assert mod2 == QuatModule("Spin(4,3)", ((1,), (0,)), 9, "sigma")

    def test_middle_regime_parity_error(self):
        with pytest.raises(ValueError):
            theta_e7(1, 1, 1)

    def test_vanishing_regime(self):
        assert theta_e7(1, 1, 3).zero
        assert theta_e7(1, 1, 3).to_json() == {"zero": True}


class TestE8:
    def test_spin8_generic(self):
        mod, mult = _single(theta_e8_spin8(2, 1, 1, 0))
        assert mult == 1
        assert mod == QuatModule("Spin(4,4)", ((1,), (1,), (1,)), 13, "A")

    def test_spin8_multiplicity(self):
        mod, mult = _single(theta_e8_spin8(3, 2, 1, 0))
        assert mult == 2
        assert mod == QuatModule("Spin(4,4)", ((1,), (1,), (1,)), 15, "A")

    def test_spin9_generic(self):
        lift = theta_e8_spin9(2, 1, 1, 1)
        mod, mult = _single(lift)
        assert mult == 1
        assert mod == QuatModule("Spin(4,3)", ((1,), (2,)), 13, "A")
        assert lift.stated_inf_char is not None
        assert lift.stated_inf_char.twice() == (11, 7, 3)

    def test_spin9_is_independent_of_third_coordinate(self):
        a = theta_e8_spin9(3, 2, 2, 1)
        b = theta_e8_spin9(3, 2, 1, 1)
        assert a.to_json()["A"] == b.to_json()["A"]

    def test_spin9_half_integral(self):
        lift = theta_e8_spin9(h(3), h(1), h(1), h(1))
        mod, _ = _single(lift)
        assert mod.wm == ((1,), (1,))
        assert mod.s == 12


class TestF4:
    def test_zero_splits(self):
        lift = theta_f4(0)
        assert len(lift.lifts) == 2
        pm, _ = _single(theta_f4(0, sign="+"))
        mm, _ = _single(theta_f4(0, sign="-"))
        assert pm == QuatModule("Spin(4,3)", ((0,), (0,)), 3, "sigma")
        assert mm == QuatModule("Spin(4,3)", ((0,), (0,)), 5, "sigma")

    def test_even(self):
        mod, _ = _single(theta_f4(4))
        assert mod == QuatModule("Spin(4,3)", ((2,), (0,)), 5, "sigma")

    def test_odd(self):
        mod, _ = _single(theta_f4(5))
        assert mod == QuatModule("Spin(4,3)", ((2,), (1,)), 6, "sigma")

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            theta_f4(-1)


class TestThetaLiftJson:
    def test_zero_shape(self):
        assert ThetaLift(()).to_json() == {"zero": True}

    def test_round_trip_all_shapes(self):
        lifts = [
            ThetaLift(()),
            theta_e6_u2(0, 0, sign="-"),
            theta_e6_torus(2, -1, -1),
            theta_e6_torus(0, 0, 0),
            theta_e6_u2(1, -1),
            theta_e7(2, 1, 1),
            theta_e8_spin8(3, 2, 1, 0),
            theta_e8_spin9(2, 1, 1, 1),
            theta_f4(0),
            theta_f4(7),
        ]
        for lift in lifts:
            data = lift.to_json()
            back = ThetaLift.from_json(data)
            assert back.to_json() == data

    def test_modules_and_inf_chars(self):
        lift = theta_e6_torus(0, 0, 0)
        mods = lift.modules()
        assert len(mods) == 2
        chars = lift.inf_chars()
        assert len(chars) == 2
        assert all(w.system == "D4" for w in chars)


class TestInfcharCrosscheck:
    @pytest.mark.parametrize("which,params", [
        ("tmain", (2, 1)),
        ("tmain", (3, -1)),
        ("e7", (2, 1, 1)),
        ("e7", (2, 1, 3)),
        ("e8_spin9", (2, 1, 1, 1)),
        ("e8_spin8", (2, 1, 1, 0)),
        ("f4", (3,)),
        ("f4", (4,)),
        ("t161", (2, 1)),
    ])
    def test_consistency(self, which, params):
        assert infchar_crosscheck(which, params)

    def test_unknown_table(self):
        with pytest.raises(ValueError):
            infchar_crosscheck("nope", (1,))


class TestSeesaw:
    @pytest.mark.parametrize("bd", [(0, 0), (1, 0), (1, 1)])
    def test_integral(self, bd):
        b, d = bd
        assert seesaw_truncation_check(b, d, 8)

    def test_half_integral(self):
        assert seesaw_truncation_check(h(1), h(1), 8)
