"""The vknots command-line interface: output records and exit codes."""

import subprocess
import sys

import pytest

from .conftest import KISHINO, TREFOIL, VIRTUAL_TREFOIL

KISHINO_CERT = f"""\
start: {KISHINO}
saddle c1=0 p=3 c2=0 q=7
r2- a=3 b=4
r2- a=1 b=2
death c=1
end: ()
"""


def run(*args, **kw):
    return subprocess.run(
        [sys.executable, "-m", "vknots.cli", *args],
        capture_output=True,
        text=True,
        **kw,
    )


class TestBasics:
    def test_parse(self):
        r = run("parse", " O1+ U1+ ")
        assert r.returncode == 0
        assert r.stdout.strip() == "O1+U1+"

    def test_parse_error_exit_3(self):
        r = run("parse", "O1+")
        assert r.returncode == 3
        assert "error" in r.stderr

    def test_usage_error_exit_3(self):
        r = run("no-such-command")
        assert r.returncode == 3

    def test_info_two_records(self):
        r = run("info", TREFOIL)
        lines = r.stdout.splitlines()
        assert lines[0] == "crossings=3 components=1 writhe=3 genus=0"
        assert lines[1] == "crossings=3 faces=5 euler=2 genus=0"

    def test_info_virtual_trefoil(self):
        r = run("info", VIRTUAL_TREFOIL)
        assert "genus=1" in r.stdout.splitlines()[0]

    def test_canon_is_stable(self):
        a = run("canon", "O1+U2+U1+O2+").stdout
        b = run("canon", "U3-O5-O3-U5-".replace("-", "+")).stdout
        assert a == b

    def test_ops(self):
        assert run("reverse", "O1+U1+").returncode == 0
        assert run("mirror", "--mode", "switch", "O1+U1+").stdout.strip() == "U1-O1-"
        assert run("closure", "L:O1+U1+").stdout.strip() == "O1+U1+"
        assert run("cut", "--arc", "0", "O1+U1+").stdout.strip().startswith("L:")
        assert run("inverse", "L:O1+U1+").returncode == 0
        r = run("sum", "L:O1+U1+", "L:O2-U2-")
        assert r.returncode == 0
        assert r.stdout.strip().startswith("L:")


class TestCertificates:
    def test_apply_prints_each_stage(self, tmp_path):
        p = tmp_path / "c.cert"
        p.write_text(KISHINO_CERT)
        r = run("apply", str(p))
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert len(lines) == 5  # the start diagram plus one line per move
        assert lines[0] == KISHINO

    def test_validate_ok(self, tmp_path):
        p = tmp_path / "c.cert"
        p.write_text(KISHINO_CERT)
        r = run("validate", "--claim", "concordance", str(p))
        assert r.returncode == 0
        assert r.stdout.strip() == "valid=yes verdict=concordance s=1 b=0 d=1"

    def test_validate_wrong_claim_exit_2(self, tmp_path):
        p = tmp_path / "c.cert"
        p.write_text(KISHINO_CERT)
        r = run("validate", "--claim", "slice-disk", str(p))
        assert r.returncode == 2
        assert "valid=no" in r.stdout

    def test_missing_file_exit_3(self):
        r = run("validate", "--claim", "concordance", "/no/such/file")
        assert r.returncode == 3


class TestSearch:
    def test_search_slice_found(self, tmp_path):
        out = tmp_path / "found.cert"
        r = run(
            "search-slice", "O1+U1+", "--max-crossings", "4",
            "--max-nodes", "2000", "--out", str(out),
        )
        assert r.returncode == 0
        assert r.stdout.startswith("status=found ")
        v = run("validate", "--claim", "concordance", str(out))
        assert v.returncode == 0

    def test_search_slice_exhausted_exit_1(self):
        r = run(
            "search-slice", VIRTUAL_TREFOIL, "--max-crossings", "4",
            "--max-saddles", "0", "--max-deaths", "0", "--max-nodes", "10000",
            "--max-depth", "8", "--max-components", "2",
        )
        assert r.returncode == 1
        assert r.stdout.startswith("status=exhausted ")

    def test_search_equiv(self):
        r = run(
            "search-equiv", "O1+U1+", "()", "--max-crossings", "4",
            "--max-nodes", "2000",
        )
        assert r.returncode == 0
        assert "status=found" in r.stdout

    def test_reduce(self):
        r = run("reduce", "O1+U1+O2-U2-", "--max-nodes", "2000")
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert lines[0] == "()"
        assert lines[1] == "crossings=0 genus_bound=0"


class TestDemo:
    def test_demo_kishino(self):
        r = run("demo", "kishino")
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert lines[0] == f"kishino={KISHINO}"
        assert lines[-1] == "valid=yes verdict=concordance s=1 b=0 d=1"

    def test_demo_kishino_slice_disk(self):
        r = run("demo", "kishino", "--claim", "slice-disk")
        assert r.returncode == 0
        assert r.stdout.splitlines()[-1] == "valid=yes verdict=slice-disk s=1 b=0 d=2"

    def test_console_script_installed(self):
        r = subprocess.run(
            ["vknots", "parse", "O1+U1+"], capture_output=True, text=True
        )
        assert r.returncode == 0
        assert r.stdout.strip() == "O1+U1+"
