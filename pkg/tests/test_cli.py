import json

import pytest

from stablegroth.cli import main
from stablegroth.verify import EXAMPLE_QUIVER_EXPANSION


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_golden(capsys):
    code, out, _ = run(capsys, "expand", "--perm", "3,1,5,2,4")
    assert code == 0
    assert out.strip() == ('[{"shape":[2,2],"coeff":1},{"shape":[3,1],"coeff":1},'
                           '{"shape":[3,2],"coeff":-1}]')


def test_expand_word_and_text(capsys):
    _, out, _ = run(capsys, "expand", "--word", "2,1,4,3", "--format", "text")
    assert out.splitlines() == ["+1 G[2,2]", "+1 G[3,1]", "-1 G[3,2]"]
    _, out, _ = run(capsys, "expand", "--word", "2,1,4,3", "--tableaux")
    assert json.loads(out) == [[[1, 2], [3, 4]], [[1, 2, 4], [3]], [[1, 2, 4], [3, 4]]]


def test_insert_with_trace(capsys):
    code, out, _ = run(capsys, "insert", "--x", "1", "--tableau", "[[1,2,3],[3,4,5]]", "--trace")
    data = json.loads(out)
    assert code == 0
    assert data["tableau"] == [[1, 2, 3, 5], [3, 4, 5]]
    assert data["corner"] == [1, 4] and data["alpha"] == 1
    assert [s["action"] for s in data["trace"]] == ["keep", "keep", "keep", "adjoin"]


def test_reverse_insert(capsys):
    _, out, _ = run(capsys, "insert", "--reverse", "--tableau", "[[1,2,3,5],[3,4,5]]",
                    "--corner", "1,4", "--alpha", "1")
    assert json.loads(out) == {"tableau": [[1, 2, 3], [3, 4, 5]], "letter": 1}


def test_insert_compatible_pair(capsys):
    _, out, _ = run(capsys, "insert", "--a", "4,1,4,4,3", "--i", "1,1,2,4,4")
    assert json.loads(out) == {"T": [[1, 4], [3]], "U": [[[1], [1, 4]], [[2, 4]]]}


def test_products(capsys):
    _, out, _ = run(capsys, "product", "[[1]]", "[[1,5],[4]]", "[[2]]")
    assert json.loads(out) == [[1, 2, 5], [4, 5]]
    _, out, _ = run(capsys, "product", "--decreasing", "[[5,3],[4]]",
                    "[[6,3,1],[4,2],[3],[2]]", "--format", "text")
    assert out.splitlines() == ["6 4 3 1", "5 3 2", "4", "2"]


def test_monomials(capsys):
    _, out, _ = run(capsys, "monomials", "--perm", "2,1", "--vars", "2", "--max-degree", "2",
                    "--format", "text")
    assert out.strip() == "x1 + x2 - x1*x2"
    _, out, _ = run(capsys, "monomials", "--shape", "1", "--vars", "2", "--max-degree", "2",
                    "--format", "text")
    assert out.strip() == "x1 + x2 - x1*x2"
    _, out, _ = run(capsys, "monomials", "--perm", "3,2,1", "--method", "recursion", "--n", "3",
                    "--format", "text")
    assert out.strip() == "x1^2*x2"


def test_lr_and_universal(capsys):
    _, out, _ = run(capsys, "lr", "--outer", "2,1", "--inner", "1", "--max-degree", "4")
    assert json.loads(out) == [{"shape": [1, 1], "coeff": 1}, {"shape": [2], "coeff": 1},
                               {"shape": [2, 1], "coeff": -1}]
    _, out, _ = run(capsys, "universal", "--perm", "2,1", "--n", "2", "--max-degree", "1")
    assert len(json.loads(out)) == 3


def test_quiver_from_file(capsys, tmp_path):
    path = tmp_path / "ranks.json"
    path.write_text('{"n":3,"rows":[[1,1,1,0],[4,2,1],[3,2],[3]]}')
    code, out, _ = run(capsys, "quiver", "--ranks", str(path), "--output", "coefficients")
    assert code == 0
    terms = {tuple(tuple(s) for s in t["shapes"]): t["coeff"] for t in json.loads(out)}
    assert terms == EXAMPLE_QUIVER_EXPANSION
    _, out, _ = run(capsys, "quiver", "--example", "--output", "zelevinsky")
    assert json.loads(out) == [2, 6, 9, 1, 10, 11, 3, 4, 7, 8, 5]
    _, out, _ = run(capsys, "quiver", "--example", "--output", "codim")
    assert out.strip() == "5"
    _, out, _ = run(capsys, "quiver", "--example", "--output", "quivstab")
    assert json.loads(out)["ok"] is True


def test_output_is_stable_across_worker_counts(capsys, monkeypatch):
    outputs = []
    for workers in ("1", "2"):
        monkeypatch.setenv("STABLEGROTH_WORKERS", workers)
        outputs.append(run(capsys, "quiver", "--example", "--output", "sequences")[1])
    assert outputs[0] == outputs[1]
    assert len(json.loads(outputs[0])) == 21


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "roundtrip", "--size", "50")
    report = json.loads(out)
    assert code == 0 and report["ok"]
    assert {c["name"] for c in report["checks"]} >= {"insert_then_reverse", "pieri_property"}


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "expand", "--perm", "1,1")
    assert code == 1 and "not a permutation" in err
    code, _, err = run(capsys, "quiver", "--ranks", "/nonexistent/ranks.json")
    assert code == 1


@pytest.mark.parametrize("argv", [["bogus"], ["expand", "--bogus"], [],
                                  ["expand", "--perm", "2,1", "--word", "1"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2
