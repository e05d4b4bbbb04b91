import json

import pytest

from ballfix.cli import Failure, Report, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def json_body(out):
    obj = json.loads(out)
    obj.pop("elapsedMillis")
    return obj


class TestExitCodes:
    def test_passing_suite(self, capsys):
        code, captured = run(capsys, "check", "no-fixed-point", "--op", "double-shift",
                             "--trials", "50", "--seed", "7")
        assert code == 0
        assert "failures: 0" in captured.out

    def test_empty_run(self, capsys):
        code, captured = run(capsys, "check", "helly", "--trials", "0", "--seed", "1")
        assert code == 0
        assert "trials: 0" in captured.out

    def test_parse_error_is_usage_error(self, capsys):
        code, captured = run(capsys, "demo", "sign", "--g", "tail=bogus")
        assert code == 2
        assert "bogus" in captured.err

    def test_bad_flag_exits_two(self):
        with pytest.raises(SystemExit) as err:
            main(["check", "nonexpansive", "--op", "not-an-op", "--trials", "1", "--seed", "0"])
        assert err.value.code == 2

    def test_missing_subcommand_exits_two(self):
        with pytest.raises(SystemExit) as err:
            main(["check"])
        assert err.value.code == 2

    def test_violation_reports_exit_one(self, capsys):
        report = Report("synthetic", 1, 0, [Failure(["tail=0; []"], "w", "0", "1")])
        from ballfix.cli import _emit
        import sys
        assert _emit(report, "json", sys.stdout) == 1
        body = json.loads(capsys.readouterr().out)
        assert body["failures"] == [
            {"inputs": ["tail=0; []"], "witness": "w", "expected": "0", "actual": "1"}]


class TestReports:
    def test_json_schema_key_order(self, capsys):
        code, captured = run(capsys, "check", "ordinal-laws", "--trials", "25", "--seed", "3",
                             "--format", "json")
        assert code == 0
        body = json.loads(captured.out)
        assert list(body.keys()) == ["suite", "trials", "seed", "failures", "elapsedMillis"]
        assert body["suite"] == "ordinal-laws"
        assert body["trials"] == 25
        assert body["seed"] == 3
        assert body["failures"] == []

    @pytest.mark.parametrize("argv", [
        ("check", "nonexpansive", "--op", "double-shift"),
        ("check", "nonexpansive", "--op", "gap"),
        ("check", "nonexpansive", "--op", "ppoint"),
        ("check", "nonexpansive", "--op", "clamp-shift"),
        ("check", "no-fixed-point", "--op", "single-shift0"),
        ("check", "no-fixed-point", "--op", "clamp-shift"),
        ("check", "helly",),
        ("check", "retraction",),
        ("check", "ordinal-laws", "--wide"),
    ])
    def test_every_suite_is_deterministic(self, capsys, argv):
        args = list(argv) + ["--trials", "30", "--seed", "11", "--format", "json"]
        code1, captured1 = run(capsys, *args)
        code2, captured2 = run(capsys, *args)
        assert code1 == code2 == 0
        assert json_body(captured1.out) == json_body(captured2.out)

    def test_seed_env_variable(self, capsys, monkeypatch):
        monkeypatch.setenv("BALLFIX_SEED", "123")
        code, captured = run(capsys, "check", "ordinal-laws", "--trials", "5", "--format", "json")
        assert code == 0
        assert json.loads(captured.out)["seed"] == 123

    def test_fixed_gap_parameter(self, capsys):
        code, captured = run(capsys, "check", "nonexpansive", "--op", "gap",
                             "--g", "tail=1/3; [5:-1/2]", "--trials", "20", "--seed", "2")
        assert code == 0
        assert "failures: 0" in captured.out


class TestDemos:
    def test_shift_orbit(self, capsys):
        code, captured = run(capsys, "demo", "shift", "--input", "tail=0;[]", "--steps", "2")
        assert code == 0
        assert "T^1 f = tail=0; [0:1, 1:-1]" in captured.out
        assert "T^2 f = tail=0; [0:1, 1:-1, 2:1, 3:-1]" in captured.out

    def test_sign_identity(self, capsys):
        code, captured = run(capsys, "demo", "sign", "--g", "tail=1/3; [5:-1/2]")
        assert code == 0
        assert "sign(g) = tail=1; [5:-1]" in captured.out
        assert "holds" in captured.out

    def test_obstruction(self, capsys):
        code, captured = run(capsys, "demo", "obstruction", "--n", "5")
        assert code == 0
        assert "forced sign: -1" in captured.out
        assert "forced sign: +1" in captured.out
        assert "obstruction: forced values have no limit" in captured.out
