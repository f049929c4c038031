import json
import subprocess
import sys
from pathlib import Path

import pytest

from fractalhall.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_plain(capsys):
    assert run(capsys, "classify", "1/3", "--format", "plain") == (0, "h = 5/3\n", "")
    assert run(capsys, "classify", "4")[1] == "h = 2\n"


def test_classify_csv_json(capsys):
    assert run(capsys, "classify", "7", "--format", "csv")[1] == "nu,h\n7/1,1/1\n"
    assert json.loads(run(capsys, "classify", "53/6", "--format", "json")[1]) == {"nu": "53/6", "h": "7/6"}


def test_table_golden(capsys):
    code, out, _ = run(capsys, "table", "--order", "6", "--rows", "18", "--format", "csv")
    assert code == 0
    assert out == (GOLDEN / "table_order6_rows18.csv").read_text()


def test_table_json(capsys):
    data = json.loads(run(capsys, "table", "--order", "6", "--rows", "2", "--format", "json")[1])
    assert data["columns"][0] == "2/1" and data["columns"][-1] == "1/1"
    assert data["rows"][1]["interval"] == "1<nu<2"
    assert data["rows"][1]["cells"][1] == "11/6"


def test_farey_formats(capsys):
    assert run(capsys, "farey", "3", "--format", "csv")[1] == "0/1\n1/3\n1/2\n2/3\n1/1\n"
    assert json.loads(run(capsys, "farey", "2", "--format", "json")[1]) == ["0/1", "1/2", "1/1"]
    code, out, _ = run(capsys, "farey", "6", "--verify")
    assert code == 0 and "P1 holds on 12 pairs" in out


def test_dual_and_class(capsys):
    assert run(capsys, "dual", "2/7")[1] == "dual = 5/7\n"
    assert run(capsys, "dual", "5/3", "--label")[1] == "dual = 4/3\n"
    assert run(capsys, "dual", "1/3", "--format", "csv")[1] == "nu,dual_nu,h,dual_h\n1/3,2/3,5/3,4/3\n"
    assert run(capsys, "class", "3/2", "--count", "3")[1] == "h = 3/2: 1/2, 3/2, 5/2\n"
    assert run(capsys, "class", "1", "--count", "3", "--format", "csv")[1] == "1/1\n3/1\n5/1\n"


def test_theorem(capsys):
    code, out, _ = run(capsys, "theorem", "--order", "6", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "f,h,second,result"
    assert lines[1] == "1/6,11/6,11/6,pass"
    assert len(lines) == 12


def test_occupation_json(capsys):
    code, out, _ = run(capsys, "occupation", "--h", "3/2", "--xi", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["Y"] == pytest.approx(2.6180339887, abs=1e-10)
    assert data["n"] == pytest.approx(0.8944271910, abs=1e-10)
    assert data["h"] == 1.5 and data["xi"] == 1.0


def test_occupation_grid_csv(capsys):
    code, out, _ = run(capsys, "occupation", "--h", "1", "--grid", "1:100:3", "--log", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "h,xi,Y,n,residual"
    assert len(lines) == 4
    assert lines[2].split(",")[1] == "10"


def test_occupation_energy(capsys):
    out = run(capsys, "occupation", "--h", "1", "--epsilon", "0", "--mu", "0", "--format", "csv")[1]
    assert out.splitlines()[1].startswith("1,1,3,0.5,")


def test_precision_flag(capsys):
    out = run(capsys, "occupation", "--h", "3/2", "--xi", "1", "--precision", "4")[1]
    assert "Y = 2.618" in out and "n = 0.8944" in out


def test_entropy(capsys):
    assert run(capsys, "entropy", "--h", "1", "--n", "0.5", "--format", "csv")[1] == "h,n,S\n1,0.5,0.69314718056\n"
    code, out, _ = run(capsys, "entropy", "--h", "3/2", "--xi", "1", "--format", "json")
    assert code == 0 and json.loads(out)["n"] == pytest.approx(0.894427191)


def test_curve(capsys):
    code, out, _ = run(capsys, "curve", "--generator", "koch", "--level", "1", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "x,y" and len(lines) == 6
    code, out, _ = run(capsys, "curve", "--level", "8", "--estimate", "--format", "json")
    assert json.loads(out)["h"] == pytest.approx(1.26186, rel=1e-4)
    code, out, _ = run(capsys, "curve", "--generator", "line", "--estimate", "--resolutions", "0.3,0.1,0.03,0.01")
    assert out.startswith("h = 1 ")


def test_domain_error_exit_1(capsys):
    code, out, err = run(capsys, "occupation", "--h", "2", "--xi", "0.5")
    assert code == 1 and out == ""
    assert err.startswith("fractalhall: error:") and err.count("\n") == 1
    assert run(capsys, "entropy", "--h", "1", "--n", "2")[0] == 1
    assert run(capsys, "class", "5/2")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "1/0"],
        ["classify", "x"],
        ["table", "--bogus"],
        ["occupation", "--h", "1.5"],
        ["farey", "0"],
        ["nosuchcommand"],
        ["entropy", "--h", "1", "--n", "0.5", "--xi", "2"],
    ],
)
def test_usage_error_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_deterministic(capsys):
    a = run(capsys, "occupation", "--h", "1.37", "--grid", "0.1:10:7", "--format", "csv")
    b = run(capsys, "occupation", "--h", "1.37", "--grid", "0.1:10:7", "--format", "csv")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fractalhall", "classify", "1/3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "h = 5/3\n"
    proc = subprocess.run(
        [sys.executable, "-m", "fractalhall", "occupation", "--h", "2", "--xi", "1"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 1
