import runpy
from pathlib import Path

import pytest

from qualbelief.cli import main

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("script", sorted(DEMOS.glob("*.py")), ids=lambda p: p.name)
def test_demo_runs(script, capsys):
    runpy.run_path(str(script), run_name="__main__")
    assert capsys.readouterr().out


@pytest.mark.parametrize("path", sorted((DEMOS / "data").glob("*.json")), ids=lambda p: p.name)
def test_data_files_load(path, capsys):
    command = "check-relation" if any(k in path.read_text() for k in ('"ranking"', '"strict"')) else "check-measure"
    assert main([command, str(path), "--cross-check"]) == 0
