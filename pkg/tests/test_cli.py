import json

import pytest

from kprop.cli import main
from kprop.divisions import division_from_json, sharing_matrix
from kprop.fixtures import all_fixtures
from kprop.scenario import ScenarioError, load_scenario, parse_scenario, scenario_to_json


@pytest.fixture(scope="module")
def fx(tmp_path_factory):
    out = tmp_path_factory.mktemp("fixtures")
    assert main(["fixtures", "--out", str(out)]) == 0
    return out


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def test_fixture_files_round_trip(fx):
    for name, scenario in all_fixtures().items():
        loaded = load_scenario(fx / f"{name}.json")
        assert scenario_to_json(loaded) == scenario_to_json(scenario)


def test_check_reports(fx, capsys):
    code, out = run(capsys, "check", "--scenario", fx / "example_matrix.json", "--json")
    assert code == 0
    report = json.loads(out.out)["report"]
    assert report["k_profile"]["2"]["k_proportional"]["holds"] is False
    assert report["k_profile"]["3"]["k_proportional"]["holds"] is True


def test_check_needs_a_division_choice(fx, capsys):
    code, out = run(capsys, "check", "--scenario", fx / "cake5.json")
    assert code == 2 and "--name" in out.err


@pytest.mark.parametrize("algorithm,scenario", [
    ("last-diminisher", "cake5"), ("even-paz", "cake5"), ("even-paz", "pie5"),
    ("equitable", "pie5"), ("last-diminisher", "six_player"),
])
def test_solve_then_check(fx, tmp_path, capsys, algorithm, scenario):
    emitted = tmp_path / "division.json"
    code, out = run(capsys, "solve", "--algorithm", algorithm, "--scenario", fx / f"{scenario}.json",
                    "--emit-division", emitted, "--json")
    assert code == 0
    solved = json.loads(out.out)
    code, out = run(capsys, "check", "--scenario", fx / f"{scenario}.json", "--division", emitted, "--json")
    assert code == 0
    assert json.loads(out.out)["sharing_matrix"] == solved["sharing_matrix"]


def test_cut_choose_on_two_players(tmp_path, capsys):
    path = tmp_path / "two.json"
    path.write_text(json.dumps({"geometry": "cake", "players": [
        {"name": "a", "density": [{"start": "0", "end": "1", "value": "1"}]},
        {"name": "b", "density": [{"start": "0", "end": "1/2", "value": "2"}]}]}))
    code, out = run(capsys, "solve", "--algorithm", "cut-choose", "--scenario", path)
    assert code == 0 and "envy-free              yes" in out.out


def test_solve_is_deterministic(fx, capsys):
    outputs = []
    for _ in range(2):
        code, out = run(capsys, "solve", "--algorithm", "equitable", "--scenario", fx / "pie5.json", "--json")
        outputs.append(out.out)
    assert outputs[0] == outputs[1]


def test_strong_kprop_exit_codes(fx, tmp_path, capsys):
    code, out = run(capsys, "strong-kprop", "--scenario", fx / "six_player.json", "--k", 2)
    assert code == 1 and "does not exist" in out.out
    emitted = tmp_path / "strong.json"
    code, out = run(capsys, "strong-kprop", "--scenario", fx / "six_player.json", "--k", 3,
                    "--emit-division", emitted, "--json")
    assert code == 0 and json.loads(out.out)["verified"] is True
    s = load_scenario(fx / "six_player.json")
    d = division_from_json(json.loads(emitted.read_text()))
    assert str(sharing_matrix(d, s.measures)[0][0]) == json.loads(out.out)["sharing_matrix"][0][0]
    code, out = run(capsys, "strong-kprop", "--scenario", fx / "six_player.json", "--k", 9)
    assert code == 2


def test_impossibility_json_is_deterministic(tmp_path, capsys):
    docs = []
    for _ in range(2):
        code, out = run(capsys, "impossibility", "pie", "--grid", 12, "--refine", 1, "--json")
        assert code == 0
        doc = json.loads(out.out)
        doc.pop("wall_time")
        docs.append(doc)
    assert docs[0] == docs[1]


def test_impossibility_threads_match_serial(capsys):
    docs = []
    for threads in (1, 2):
        code, out = run(capsys, "impossibility", "pie", "--grid", 12, "--refine", 1, "--threads", threads, "--json")
        doc = json.loads(out.out)
        doc.pop("wall_time")
        docs.append(doc)
    assert docs[0] == docs[1]


def test_cake_impossibility(capsys):
    code, out = run(capsys, "impossibility", "cake", "--n", 4, "--grid", 24)
    assert code == 0 and "certified    True" in out.out


def test_bad_rational_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"players": [{"density": [{"start": "0", "end": "1/0", "value": "1"}]}]}))
    code, out = run(capsys, "check", "--scenario", path)
    assert code == 2 and "players[0].density[0].end" in out.err


def test_bad_json_reports_position(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"players": [\n  oops]}')
    code, out = run(capsys, "check", "--scenario", path)
    assert code == 2 and ":2:3" in out.err


def test_normalization_deficit_reported():
    with pytest.raises(ScenarioError, match="deficit 1/4"):
        parse_scenario({"players": [{"name": "x", "density": [{"start": "0", "end": "3/4", "value": "1"}]}]})


def test_overlapping_division_rejected():
    obj = {"players": [{"density": [{"start": "0", "end": "1", "value": "1"}]}] * 2,
           "divisions": {"bad": {"type": "general", "shares": [
               [{"start": "0", "end": "2/3"}], [{"start": "1/2", "end": "1"}]]}}}
    with pytest.raises(ScenarioError, match="overlap"):
        parse_scenario(obj)
