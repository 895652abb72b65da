import io
import subprocess
import sys
from pathlib import Path

import pytest

from smoothquiver import cli
from smoothquiver.qpoly import PolyQ

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"
TWO_CYCLE = str(GOLDEN / "two_cycle.quiver")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = cli.run(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


@pytest.fixture
def qfile(tmp_path):
    def make(text, name="q.quiver"):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)

    return make


LOOP_ARROW = "vertex i\nvertex j\narrow i i\narrow i j\nd 1 0\nn 0 1\n"
KRONECKER = "vertex i\nvertex j\narrow i j\narrow i j\nd 1 1\nn 1 0\ntheta 1 0\n"


def test_betti_all_methods_on_table_quiver():
    status, out, _ = run("betti", "--method", "all", TWO_CYCLE)
    assert status == 0
    assert "poincare: q^8 + 2*q^7 + 5*q^6 + 6*q^5 + 7*q^4 + 4*q^3 + 2*q^2" in out
    assert "recursion, summation, series, multipartitions, cells" in out
    status, out, _ = run("betti", "--method", "all", "--machine", TWO_CYCLE)
    assert out == "dim=8\npoincare=8:1 7:2 6:5 5:6 4:7 3:4 2:2\n"
    status, out, _ = run("betti", "--quiet", TWO_CYCLE)
    assert out == "8\nq^8 + 2*q^7 + 5*q^6 + 6*q^5 + 7*q^4 + 4*q^3 + 2*q^2\n"


def test_betti_with_cap_lists_the_slope_class(qfile):
    status, out, _ = run("betti", "--machine", "--cap", "2,2", "--method", "all", qfile(KRONECKER))
    assert status == 0
    assert out == "P(1,1)=1:1 0:1\nP(2,2)=2:1 1:1 0:1\n"


def test_nonempty_on_the_empty_example(qfile):
    status, out, _ = run("nonempty", qfile(LOOP_ARROW))
    assert (status, out) == (0, "result: empty\n")
    assert run("nonempty", TWO_CYCLE)[1] == "result: nonempty\n"
    status, out, _ = run("nonempty", qfile("vertex a\nvertex b\nd 1 1\ntheta 1 0\n"))
    assert "empty" in out and "nonempty" not in out


def test_cells_matches_golden_file():
    status, out, _ = run("cells", "--machine", TWO_CYCLE)
    assert status == 0
    assert out == (GOLDEN / "two_cycle_cells.txt").read_text(encoding="utf-8")
    status, out, _ = run("cells", TWO_CYCLE)
    assert out.startswith("27 cells\n  1  ((α,αβ,αβα),∅,∅,∅)  -  (0,0 | 0,0)  dim=8\n")


def test_output_is_deterministic_across_processes():
    cmd = [sys.executable, "-m", "smoothquiver", "cells", "--machine", TWO_CYCLE]
    runs = {subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)}
    assert len(runs) == 1


def test_pd_euler_hilb_frame(qfile):
    status, out, _ = run("pd", qfile(KRONECKER))
    assert status == 0 and "P_d: (q + 1)/(q - 1)" in out and "stable_poincare: q + 1" in out
    assert run("pd", "--machine", qfile(KRONECKER))[1].splitlines()[0] == "P_d=1:1 0:1;1:1 0:-1"
    status, out, _ = run("euler", "--machine", "--e", "0,1", qfile(KRONECKER))
    assert out == "euler_d_e=-1\neuler_e_d=1\ndim=1\n"
    status, out, _ = run("hilb", "--machine", "--list", TWO_CYCLE)
    lines = out.splitlines()
    assert lines[:2] == ["nonempty=true", "multipartitions=27"]
    assert lines[2] == "lambda=(0,0 | 0,0)" and lines[-1] == "poincare=8:1 7:2 6:5 5:6 4:7 3:4 2:2"
    status, out, _ = run("frame", TWO_CYCLE)
    assert status == 0 and "vertex inf" in out and out.count("arrow inf") == 4 and "d 2 2 1" in out


def test_local_quiver_command():
    path = str(Path(__file__).parents[1] / "demos" / "data" / "subspace4.quiver")
    status, out, _ = run("local-quiver", "--part", "1,1,1,0,0:1", "--part", "1,0,0,1,1:1", path)
    assert status == 0
    assert out.count("arrow 1 2") == 1 and out.count("arrow 2 1") == 1
    assert "d 1 1" in out and "n 1 1" in out
    status, _, err = run("local-quiver", "--part", "1,0,0,0,0:1", "--part", "1,1,1,1,1:1", path)
    assert status == 4 and "negative arrow count" in err
    assert run("local-quiver", "--part", "2,1,1,1,1:1", "--part", "0,0,0,0,0:1", path)[0] == 4
    assert run("local-quiver", "--part", "1,1,1,1,1:2", path)[0] == 4


def test_parse_errors_exit_2_with_position(qfile):
    status, _, err = run("betti", qfile("vertex a\narrow a c\n", "bad.quiver"))
    assert status == 2 and "bad.quiver:2:9:" in err
    assert run("betti", "/does/not/exist.quiver")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("betti", qfile("vertex a\nd 1\n"))[0] == 2  # missing n


def test_infeasible_inputs_exit_4(qfile):
    assert run("cells", qfile(KRONECKER))[0] == 4
    assert run("hilb", qfile(KRONECKER))[0] == 4
    assert run("betti", "--method", "cells", qfile(KRONECKER))[0] == 4
    assert run("betti", qfile("vertex a\nd 1\nn 0\n"))[0] == 4


def test_engine_disagreement_exits_3(monkeypatch):
    monkeypatch.setattr(cli.betti, "smooth_model_poincare_series", lambda *a, **k: PolyQ((1,)))
    status, out, err = run("betti", "--method", "all", TWO_CYCLE)
    assert status == 3
    assert "series: 1" in out and "recursion: q^8" in out
    assert "disagree" in err


def test_selftest_command():
    status, out, _ = run("selftest", "--count", "15", "--seed", "3", "--machine")
    assert status == 0 and out == "instances=15\nfailures=0\n"


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "smoothquiver", "betti", "--quiet", TWO_CYCLE],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[0] == "8"
