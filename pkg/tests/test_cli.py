import json

import pytest
from helpers import canned_invocations

from rcdim.cli import ConfigError, load_config_file, main, parse_places
from rcdim.inequality import InequalityReport
from rcdim.selmer import PlaceKind


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def canned(tmp_path):
    return canned_invocations(tmp_path)


def test_canned_exit_codes(capsys, canned):
    for argv, expected in canned:
        code, _, _ = run(capsys, *argv)
        assert code == expected, argv


@pytest.mark.parametrize(
    "argv, line",
    [
        (["witt", "2", "3"], "d_2(3) = 2 [oracle: 2 ✓]"),
        (["witt", "10", "1"], "d_10(1) = 10 [oracle: 10 ✓]"),
        (["witt", "3", "4"], "d_3(4) = 18 [oracle: 18 ✓]"),
        (["search", "modular", "--T", "3"], "minimal n = 7"),
        (["search", "modular", "--T", "2", "--admissible", "even"], "minimal n = 6"),
    ],
)
def test_text_output(capsys, argv, line):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.splitlines()[0] == line


def test_profile_examples(capsys):
    _, out, _ = run(capsys, "profile", "--gprime", "1", "--m", "4", "--json")
    d = json.loads(out)
    assert d["hodge_tate"] == "{0:1, 1:1, 2:1, 3:1, 4:1}" and d["total"] == 5
    _, out, _ = run(capsys, "profile", "--gprime", "2", "--m", "1", "--json")
    assert json.loads(out)["hodge_tate"] == "{0:2, 1:2}"
    _, out, _ = run(capsys, "profile", "--gprime", "1", "--m", "1", "--a", "1", "--json")
    assert json.loads(out)["frobenius"] == "{0:1, 2:1}"


def test_check_json_roundtrip(capsys):
    code, out, _ = run(capsys, "check", "genus2", "--genus", "2", "--m", "1", "--k", "2", "--bk", "--json")
    assert code == 0
    rep = InequalityReport.from_json(out)
    assert (rep.lhs_total, rep.rhs) == (194, 204)
    assert json.dumps(rep.to_dict(), sort_keys=True, indent=2) + "\n" == out


def test_modular_check_report(capsys):
    code, out, _ = run(capsys, "check", "modular", "--n", "5", "--T", "2")
    assert code == 1
    assert "lhs = 11 >= rhs = 11: FAILS" in out


def test_missing_bk_explains(capsys):
    code, _, err = run(capsys, "selmer-bound", "--genus", "2", "--m", "1", "--k", "2")
    assert code == 2 and "Bloch-Kato" in err


def test_determinism(capsys, canned):
    for argv, _ in canned:
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second, argv


def test_config_file_and_flag_override(capsys, tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("genus = 2\nm = 1\nk = 0\nbk = yes\n")
    code, out, _ = run(capsys, "check", "genus2", "--config", str(cfg), "--json")
    assert json.loads(out)["params"]["k"] == 0
    code, out, _ = run(capsys, "check", "genus2", "--config", str(cfg), "--k", "2", "--json")
    assert code == 0 and json.loads(out)["params"]["k"] == 2


def test_config_errors(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n")
    with pytest.raises(ConfigError, match="unknown config key"):
        load_config_file(str(bad))
    bad.write_text("genus = two\n")
    with pytest.raises(ConfigError, match="integer"):
        load_config_file(str(bad))
    with pytest.raises(ConfigError):
        load_config_file(str(tmp_path / "missing.cfg"))


def test_parse_places():
    places = parse_places("p:p, l:good, q:bad:1")
    assert [pl.kind for pl in places] == [PlaceKind.P_ADIC, PlaceKind.GOOD, PlaceKind.BAD]
    assert places[2].a == 1
    for text in ("p", "p:weird", "l:good:1", "q:bad:x"):
        with pytest.raises(ConfigError):
            parse_places(text)


def test_exact_hodge_mode_from_file(capsys, tmp_path):
    hp = tmp_path / "h1.json"
    hp.write_text(json.dumps({"ht": "{0:(2,0), 2:(2,0)}"}))
    code, out, _ = run(capsys, "generator", "--genus", "2", "--m", "1", "--hodge-profile", str(hp), "--json")
    d = json.loads(out)
    assert code == 0 and d["total"] == 8 and d["modes"] == ["hodge: exact (rigorous given the supplied H^1 profile)"]
    code, _, err = run(capsys, "generator", "--genus", "2", "--m", "1", "--hodge-mode", "exact")
    assert code == 2 and "--hodge-profile" in err


def test_malformed_inputs_never_crash(capsys):
    for argv in (
        ["graded-witt", "{0:(3,0)}", "2"],
        ["graded-witt", "{0:1", "2"],
        ["profile", "--m", "0"],
        ["check", "modular", "--n", "0", "--T", "2"],
        ["check", "modular", "--n", "6"],
        ["check", "genus2", "--genus", "1", "--m", "1", "--k", "0", "--bk"],
        ["check", "genus2", "--genus", "2", "--m", "1", "--k", "0", "--bk", "--places", "l:good"],
        ["search", "modular", "--T", "2", "--admissible", "x"],
        ["nonsense"],
        [],
    ):
        code, _, _ = run(capsys, *argv)
        assert code == 2, argv


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle")
    assert code == 0 and out.count("PASS") == 3


def test_json_roundtrip_randomized_configs(capsys):
    import random

    rng = random.Random(3)
    for _ in range(15):
        argv = [
            "check", "genus2", "--bk", "--json",
            "--genus", str(rng.randint(2, 4)),
            "--gprime", str(rng.randint(1, 2)),
            "--m", str(rng.choice((1, 3, 5))),
            "--k", str(rng.choice((0, 2, 4))),
            "--minus-mode", rng.choice(("paper-bound", "exact-trace")),
            "--f0-mode", rng.choice(("paper-rule", "graded-witt")),
        ]
        code, out, _ = run(capsys, *argv)
        payload = json.loads(out)
        assert code == (0 if payload["holds"] else 1)
        assert InequalityReport.from_json(out).to_dict() == payload
