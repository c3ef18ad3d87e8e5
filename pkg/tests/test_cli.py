import json
import subprocess
import sys

import pytest

from qualbelief.cli import main

FRAME = {"elements": ["theta1", "theta2"]}


def measure(values):
    subsets = [[], ["theta1"], ["theta2"], ["theta1", "theta2"]]
    return {"frame": FRAME, "values": [{"subset": s, "value": v} for s, v in zip(subsets, values)]}


EXAMPLE = {"frame": FRAME, "ranking": [[[]], [["theta1"]], [["theta2"]], [["theta1", "theta2"]]]}
TRIVIAL = {"frame": FRAME, "ranking": [[[], ["theta1"], ["theta2"], ["theta1", "theta2"]]]}
AT_BOTTOM = {"frame": FRAME, "ranking": [[["theta1", "theta2"]], [[]], [["theta1"]], [["theta2"]]]}


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_measure_text(capsys, write):
    code, out, _ = run(capsys, "check-measure", write("f.json", measure(["0", "3/5", "7/10", "1"])))
    assert code == 0
    assert "strongest class: none" in out
    assert "B3' FAIL" in out
    assert "-3/10" in out and "negative" in out


def test_check_measure_json_cross_check(capsys, write):
    path = write("bel.json", measure(["0", "1/5", "1/2", "1"]))
    code, out, _ = run(capsys, "check-measure", path, "--json", "--cross-check")
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["strongest_class"] == "monotonic_belief"
    assert payload["cross_check"]["agrees"] is True
    assert payload["report"]["inferred_empty_mass"]["value"] == "0"


def test_global_flags_before_subcommand(capsys, write):
    path = write("bel.json", measure(["0", "1/5", "1/2", "1"]))
    code, out, _ = run(capsys, "--json", "check-measure", path)
    assert code == 0 and json.loads(out)["report"]["strongest_class"] == "monotonic_belief"


def test_mass_input(capsys, write):
    obj = {"frame": FRAME, "kind": "mass", "masses": [{"subset": [], "value": "1/2"}, {"subset": ["theta1"], "value": "1/2"}]}
    code, out, _ = run(capsys, "check-measure", write("m.json", obj), "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["derived_from_mass"] == "open"
    assert payload["report"]["strongest_class"] == "generalized_belief"


def test_check_relation(capsys, write):
    code, out, _ = run(capsys, "check-relation", write("r.json", EXAMPLE), "--json", "--cross-check")
    payload = json.loads(out)
    assert code == 0
    assert payload["report"]["structure_class"] == "qualitative_probability"
    assert payload["scott"]["representable"] is True
    assert payload["cross_check"]["agrees"] is True


def test_check_relation_failure_is_still_exit_zero(capsys, write):
    code, out, _ = run(capsys, "check-relation", write("r.json", AT_BOTTOM), "--cross-check")
    assert code == 0
    assert "Q4' FAIL" in out
    assert "probability representation: no" in out


def test_construct_targets(capsys, write):
    path = write("r.json", EXAMPLE)
    for target, provenance in [
        ("belief", "theorem3"),
        ("monotonic", "theorem4"),
        ("generalized", "theorem5-case-ii"),
        ("probability", "scott"),
    ]:
        code, out, _ = run(capsys, "construct", path, "--target", target)
        assert code == 0
        assert json.loads(out)["provenance"] == provenance


def test_construct_generalized_trivial(capsys, write):
    code, out, _ = run(capsys, "construct", write("t.json", TRIVIAL), "--target", "generalized")
    payload = json.loads(out)
    assert code == 0
    assert payload["provenance"] == "theorem5-case-i"
    assert payload["masses"][0] == {"subset": [], "value": "1", "approx": "1.000000"}


def test_construct_precondition_failure(capsys, write):
    code, _, err = run(capsys, "construct", write("t.json", TRIVIAL), "--target", "belief")
    assert code == 3
    assert "Q3" in err


def test_construct_not_representable(capsys, write):
    code, out, err = run(capsys, "construct", write("t.json", AT_BOTTOM), "--target", "probability", "-v")
    assert code == 4
    assert out == ""
    assert "maximize" in err and "not representable" in err


@pytest.mark.parametrize(
    "content",
    ["not json", json.dumps({"frame": FRAME}), json.dumps(measure(["0", "1", "1"]))],
)
def test_input_errors(capsys, write, content):
    code, _, err = run(capsys, "check-measure", write("bad.json", content))
    assert code == 2 and err.startswith("error")


def test_missing_file(capsys):
    code, _, _ = run(capsys, "check-measure", "/nonexistent/file.json")
    assert code == 2


def test_contradictory_statements(capsys, write):
    obj = {"frame": FRAME, "strict": [[["theta1"], []], [[], ["theta1"]]]}
    code, _, _ = run(capsys, "check-relation", write("c.json", obj))
    assert code == 2


def test_frame_size_cap(capsys, write):
    frame = {"elements": [f"e{i}" for i in range(6)]}
    obj = {"frame": frame, "ranking": [[[f"e{i}" for i in range(6) if a >> i & 1] for a in range(64)]]}
    path = write("big.json", obj)
    code, _, err = run(capsys, "check-relation", path)
    assert code == 2 and "size" in err
    with pytest.warns(RuntimeWarning):
        code, out, _ = run(capsys, "check-relation", path, "--max-frame-size", "6")
    assert code == 0 and "generalized_belief_structure" in out


def test_construct_then_induce_closes_the_loop(capsys, write):
    code, out, _ = run(capsys, "construct", write("r.json", EXAMPLE), "--target", "belief")
    assert code == 0
    code, out, _ = run(capsys, "induce", write("bel.json", out))
    payload = json.loads(out)
    assert code == 0
    assert payload["ranking"] == EXAMPLE["ranking"]
    assert payload["report"]["structure_class"] == "qualitative_probability"


def test_module_entry_point(tmp_path):
    path = tmp_path / "r.json"
    path.write_text(json.dumps(EXAMPLE))
    done = subprocess.run(
        [sys.executable, "-m", "qualbelief", "construct", str(path), "--target", "probability"],
        capture_output=True,
        text=True,
    )
    assert done.returncode == 0
    assert json.loads(done.stdout)["provenance"] == "scott"
