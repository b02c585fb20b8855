import json

import pytest

from signedtools.cli.main import (
    EXIT_COUNTEREXAMPLE,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    main_cli,
    setup_argument_parser,
)

RUNNING_EXAMPLE = "n 6\n0 1 +\n0 3 +\n0 4 +\n1 2 +\n2 3 +\n4 5 +\n"
C4_ONE_MINUS = "n 4\n0 1 -\n0 3 +\n1 2 +\n2 3 +\n"


@pytest.fixture
def graph_file(tmp_path):
    def write(text, name="graph.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_parser_requires_a_subcommand():
    assert main_cli([]) == EXIT_INPUT_ERROR


def test_parser_defaults():
    args = setup_argument_parser().parse_args(["verify", "--max-order", "3"])
    assert args.jobs == 1
    assert not args.mod_switching
    assert args.dump_dir is None


def test_rank(graph_file, capsys):
    assert main_cli(["rank", graph_file(C4_ONE_MINUS)]) == EXIT_OK
    assert capsys.readouterr().out == "r 4\nnullity 0\n"


def test_rank_json(graph_file, capsys):
    assert main_cli(["rank", graph_file(RUNNING_EXAMPLE), "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"n": 6, "r": 4, "nullity": 2}


def test_analyze_json(graph_file, capsys):
    assert main_cli(["analyze", graph_file(RUNNING_EXAMPLE), "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["lower_optimal_direct"] is True
    assert data["lower_optimal_structural"] is True
    assert data["mu"] == 3
    assert "checks" not in data


def test_analyze_with_lemmas(graph_file, capsys):
    assert main_cli(["analyze", graph_file(RUNNING_EXAMPLE), "--json", "--lemmas"]) == EXIT_OK
    checks = json.loads(capsys.readouterr().out)["checks"]
    assert {c["status"] for c in checks} <= {"pass", "skipped"}
    assert any(c["check_id"] == "extremal.contraction_identity" for c in checks)


def test_analyze_plain_and_rich(graph_file, capsys):
    path = graph_file(C4_ONE_MINUS)
    assert main_cli(["analyze", path, "--plain"]) == EXIT_OK
    assert "lower-optimal (direct)" in capsys.readouterr().out
    assert main_cli(["analyze", path]) == EXIT_OK
    assert "Structural conditions" in capsys.readouterr().out


def test_analyze_lemmas_on_theta_graph(graph_file, capsys):
    k4_minus_edge = "n 4\n0 1 +\n0 2 +\n0 3 -\n1 2 +\n1 3 +\n"
    assert main_cli(["analyze", graph_file(k4_minus_edge), "--json", "--lemmas"]) == EXIT_OK
    checks = json.loads(capsys.readouterr().out)["checks"]
    assert {c["status"] for c in checks} <= {"pass", "skipped"}


def test_non_utf8_file_is_an_input_error(tmp_path, capsys):
    path = tmp_path / "latin1.txt"
    path.write_bytes(b"n 2\n0 1 \xff\n")
    assert main_cli(["rank", str(path)]) == EXIT_INPUT_ERROR
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize(
    "text",
    ["n 3\n0 3 +\n", "0 1 +\n", "n 2\n0 1 ?\n"],
    ids=["out-of-range", "no-header", "bad-sign"],
)
def test_analyze_rejects_malformed_input(graph_file, text):
    assert main_cli(["analyze", graph_file(text)]) == EXIT_INPUT_ERROR


def test_missing_file(tmp_path):
    assert main_cli(["rank", str(tmp_path / "absent.txt")]) == EXIT_INPUT_ERROR


def test_verify_json(capsys):
    argv = ["verify", "--max-order", "4", "--connected-only", "--mod-switching", "--json"]
    assert main_cli(argv) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["lower_optimal_count"] == {"1": 1, "2": 1, "3": 3, "4": 19}
    assert data["bound_violations"] == 0
    assert data["equivalence_mismatches"] == 0


def test_verify_output_does_not_depend_on_jobs(capsys):
    argv = ["verify", "--max-order", "4", "--mod-switching", "--json"]
    assert main_cli(argv + ["--jobs", "1"]) == EXIT_OK
    single = capsys.readouterr().out
    assert main_cli(argv + ["--jobs", "3"]) == EXIT_OK
    assert capsys.readouterr().out == single


def test_verify_plain(capsys):
    assert main_cli(["verify", "--max-order", "3", "--plain", "--corollary"]) == EXIT_OK
    assert "Upper attained" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--max-order", "11"],
        ["verify", "--max-order", "0"],
        ["verify", "--max-order", "3", "--jobs", "0"],
    ],
)
def test_verify_rejects_arguments(argv):
    assert main_cli(argv) == EXIT_INPUT_ERROR


def test_generate_writes_corpus(tmp_path, capsys):
    out = tmp_path / "corpus"
    argv = ["generate", "--cycles", "4", "6", "--steps", "2", "--count", "3", "--out", str(out)]
    assert main_cli(argv + ["--seed", "9"]) == EXIT_OK
    printed = capsys.readouterr().out.splitlines()
    assert len(printed) == 3

    manifest = json.loads((out / "recipe.json").read_text())
    assert manifest["count"] == 3
    assert manifest["recipe"]["cycle_specs"] == [4, 6]
    assert [entry["seed"] for entry in manifest["graphs"]] == [9, 10, 11]
    assert all(entry["n"] == 14 for entry in manifest["graphs"])
    for entry in manifest["graphs"]:
        assert (out / entry["file"]).read_text().startswith("n 14\n")


def test_generate_from_recipe_file(tmp_path, capsys):
    recipe = tmp_path / "recipe.json"
    recipe.write_text(json.dumps({"cycle_specs": [8], "expansion_steps": 1, "seed": 4}))
    out = tmp_path / "out"
    assert main_cli(["generate", "--recipe", str(recipe), "--out", str(out)]) == EXIT_OK
    manifest = json.loads((out / "recipe.json").read_text())
    assert manifest["graphs"] == [{"file": "graph_0000.txt", "seed": 4, "n": 10}]


@pytest.mark.parametrize(
    "extra",
    [
        ["--cycles", "5"],
        ["--cycles", "4", "--count", "-1"],
        ["--cycles", "4", "--attach-probability", "2"],
    ],
)
def test_generate_rejects_invalid_recipes(tmp_path, extra):
    argv = ["generate", "--out", str(tmp_path / "out")] + extra
    assert main_cli(argv) == EXIT_INPUT_ERROR


def test_generate_rejects_bad_recipe_file(tmp_path):
    recipe = tmp_path / "recipe.json"
    recipe.write_text("[4, 6]")
    argv = ["generate", "--recipe", str(recipe), "--out", str(tmp_path / "out")]
    assert main_cli(argv) == EXIT_INPUT_ERROR


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT_ERROR) == (0, 1, 2)
