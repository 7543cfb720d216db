import json

import pytest

from quatheta.aqmodules import AqData
from quatheta.cli import emit_svg, main
from quatheta.quaternionic import KTypeLedger, QuatModule, ktypes
from quatheta.rootdata import Weight
from quatheta.thetamaps import ThetaLift, theta_e6_u2


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_success_is_zero(self, capsys):
        code, out, _ = run(capsys, "theta", "--ambient", "E6", "--u2", "2,1")
        assert code == 0

    def test_domain_error_is_one(self, capsys):
        code, out, err = run(capsys, "theta", "--ambient", "E6",
                             "--torus", "1,0,0")
        assert code == 1
        assert out == ""
        assert err.startswith("error:")

    def test_verification_failure_is_two(self, capsys, monkeypatch):
        import quatheta.cli as cli_mod
        monkeypatch.setattr(
            cli_mod, "run_suite", lambda *a, **k: (["FAIL x: y"], False)
        )
        code, out, _ = run(capsys, "verify", "--suite", "rootdata")
        assert code == 2
        assert "FAIL" in out

    def test_usage_error_is_64(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["theta", "--bogus"])
        assert exc.value.code == 64
        err = capsys.readouterr().err
        assert "usage" in err

    def test_missing_subcommand_is_64(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 64


class TestReadmeExamples:
    def test_theta_e6_u2(self, capsys):
        code, out, _ = run(capsys, "theta", "--ambient", "E6", "--u2", "2,1")
        assert code == 0
        assert out == \
            '{"sigma": {"G": "Spin(4,3)", "s": 7, "wm": [[0], [1]]}}\n'

    def test_branch_f4_spin9_text(self, capsys):
        code, out, _ = run(capsys, "branch", "--rule", "f4-spin9",
                           "--ab", "1,0")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 3
        dims = [int(line.rsplit(" ", 1)[1]) for line in lines]
        assert sum(dims) == 26
        assert sorted(dims) == [1, 9, 16]

    def test_verify_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "rootdata")
        assert code == 0
        assert all(line.startswith("PASS") for line in out.splitlines())


class TestJsonContracts:
    def test_sorted_keys(self, capsys):
        _, out, _ = run(capsys, "infchar", "--g", "Spin(4,3)",
                        "--wm", "0;1", "--s", "6")
        data = json.loads(out)
        assert list(data) == sorted(data)

    def test_theta_round_trip(self, capsys):
        for args in (
            ("theta", "--ambient", "E6", "--u2", "2,1"),
            ("theta", "--ambient", "E6", "--torus", "0,0,0"),
            ("theta", "--ambient", "E6", "--u2", "1,-1"),
            ("theta", "--ambient", "E7", "--type", "1,1,3"),
            ("theta", "--ambient", "E8", "--spin9", "2,1,1,1"),
            ("theta", "--ambient", "F4", "--su2", "0"),
        ):
            code, out, _ = run(capsys, *args)
            assert code == 0
            data = json.loads(out)
            back = ThetaLift.from_json(data)
            assert json.dumps(back.to_json(), sort_keys=True) == out.strip()

    def test_ktypes_round_trip(self, capsys):
        code, out, _ = run(capsys, "ktypes", "--g", "Spin(4,3)",
                           "--wm", "0;1", "--s", "6", "--kmax", "2")
        assert code == 0
        data = json.loads(out)
        led = KTypeLedger.from_json(data)
        assert json.dumps(led.to_json(), sort_keys=True) == out.strip()

    def test_infchar_round_trip(self, capsys):
        _, out, _ = run(capsys, "infchar", "--g", "Spin(4,3)",
                        "--wm", "0;1", "--s", "6")
        data = json.loads(out)
        w = Weight.from_json(data["inf_char"], data["system"])
        assert w.twice() == (3, 2, 1)
        mod = QuatModule.from_json(data["module"])
        assert mod == QuatModule("Spin(4,3)", ((0,), (1,)), 6, "A")

    def test_aq_round_trip(self, capsys):
        code, out, _ = run(capsys, "aq", "--group", "g2", "--case", "I",
                           "--lambda=2,1,-3")
        assert code == 0
        data = json.loads(out)
        back = AqData.from_json(data["data"])
        assert json.dumps(back.to_json(), sort_keys=True) == \
            json.dumps(data["data"], sort_keys=True)


class TestDeterminism:
    def test_theta_byte_identical(self, capsys):
        _, a, _ = run(capsys, "theta", "--ambient", "E8",
                      "--spin8", "3,2,1,0")
        _, b, _ = run(capsys, "theta", "--ambient", "E8",
                      "--spin8", "3,2,1,0")
        assert a == b

    def test_verify_byte_identical(self, capsys):
        _, a, _ = run(capsys, "verify", "--suite", "quaternionic")
        _, b, _ = run(capsys, "verify", "--suite", "quaternionic")
        assert a == b

    def test_plot_byte_identical(self, capsys):
        args = ("plot", "--figure", "cones", "--group", "g2",
                "--lambda=2,1,-3")
        _, a, _ = run(capsys, *args)
        _, b, _ = run(capsys, *args)
        assert a == b


class TestBranchCommand:
    def test_sp_text(self, capsys):
        code, out, _ = run(capsys, "branch", "--rule", "sp", "--lam", "2,1")
        assert code == 0
        assert out.splitlines() == [
            "(0) : (1) x1",
            "(1) : (0) x1, (2) x1",
            "(2) : (1) x1",
        ]

    def test_sp_json(self, capsys):
        code, out, _ = run(capsys, "branch", "--rule", "sp", "--lam", "2,1",
                           "--json")
        data = json.loads(out)
        assert data["rule"] == "sp"
        assert data["components"][1] == {"mu": [1], "su2": {"0": 1, "2": 1}}

    def test_spin_odd_json(self, capsys):
        code, out, _ = run(capsys, "branch", "--rule", "spin-odd",
                           "--lam", "1,1", "--json")
        data = json.loads(out)
        assert data["components"] == [
            {"mu": [0], "spin2": [[0, 1]]},
            {"mu": [1], "spin2": [[-1, 1], [0, 1], [1, 1]]},
        ]

    def test_half_integral_lam(self, capsys):
        code, out, _ = run(capsys, "branch", "--rule", "spin-odd",
                           "--lam", "3/2,1/2")
        assert code == 0
        assert "(1/2)" in out

    def test_e7_family(self, capsys):
        code, out, _ = run(capsys, "branch", "--rule", "e7-su2spin12",
                           "--k", "1")
        assert code == 0
        assert out.splitlines() == [
            "su2 (0)  spin12 (1/2,1/2,1/2,1/2,1/2,1/2)",
            "su2 (1)  spin12 (1,0,0,0,0,0)",
        ]

    def test_missing_parameter_is_domain_error(self, capsys):
        code, _, err = run(capsys, "branch", "--rule", "f4-spin9")
        assert code == 1
        assert "needs" in err


class TestPlotCommand:
    def test_cone_figure_geometry(self, capsys):
        code, out, _ = run(capsys, "plot", "--figure", "cones",
                           "--group", "g2", "--lambda=2,1,-3")
        assert code == 0
        assert out.startswith(
            '<svg xmlns="http://www.w3.org/2000/svg" '
            'width="620" height="620"'
        )
        # apexes at (10,4), (1,7), (13,1) in lattice coordinates
        assert '<circle cx="430.00" cy="310.00" r="5" fill="#c0392b"/>' in out
        assert '<circle cx="70.00" cy="100.00" r="5" fill="#27ae60"/>' in out
        assert '<circle cx="550.00" cy="520.00" r="5" fill="#2980b9"/>' in out
        # lambda markers as open circles
        assert ('<circle cx="190.00" cy="450.00" r="5" fill="none" '
                'stroke="#c0392b" stroke-width="2"/>') in out
        assert out.count('r="2"') == 135  # 15 x 9 lattice dots

    def test_vertical_scale_is_seven_fourths(self, capsys):
        _, out, _ = run(capsys, "plot", "--figure", "cones",
                        "--group", "g2", "--lambda=2,1,-3")
        # one lattice step: x pitch 40 px, y pitch 70 px
        assert '<circle cx="70.00" cy="590.00" r="2"' in out
        assert '<circle cx="30.00" cy="520.00" r="2"' in out

    def test_lattice_only_when_lambda_omitted(self, capsys):
        code, out, _ = run(capsys, "plot", "--figure", "cones",
                           "--group", "g2")
        assert code == 0
        assert out.count('r="2"') == 135
        assert 'r="5"' not in out
        assert "<line" not in out

    def test_pu21_region_clips_lattice(self, capsys):
        _, out, _ = run(capsys, "plot", "--figure", "cones",
                        "--group", "pu21", "--lambda=1,1,-2")
        assert out.count("<line") == 7  # one cone degenerates to a ray

    def test_ledger_figure(self, capsys):
        code, out, _ = run(capsys, "plot", "--figure", "ledger",
                           "--g", "Spin(4,3)", "--wm", "0;1", "--s", "6",
                           "--kmax", "3")
        assert code == 0
        assert out.count("<rect") == 1 + 4  # background + one bar per level
        assert ">10<" in out and ">896<" in out  # level dims annotate bars

    def test_emit_svg_rejects_unknown_figure(self):
        with pytest.raises(ValueError):
            emit_svg({"figure": "pie"})


class TestKtypesCommand:
    def test_cap_flag_propagates(self, capsys):
        code, _, err = run(capsys, "ktypes", "--g", "E8_4", "--wm",
                           "0,0,0,0,0,0,0,0", "--s", "10", "--kmax", "3",
                           "--cap", "100")
        assert code == 1
        assert "error:" in err

    def test_sigma_flag(self, capsys):
        _, out, _ = run(capsys, "ktypes", "--g", "Spin(4,3)", "--wm", "0;0",
                        "--s", "4", "--kmax", "0", "--sigma")
        assert json.loads(out)["module"]["quotient"] is True
