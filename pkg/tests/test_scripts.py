import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


def run(*args):
    return subprocess.run([sys.executable, *args], capture_output=True, text=True, timeout=300)


def test_sweep_script():
    proc = run(str(SCRIPTS / "sweep.py"), "--types", "A1", "B2", "--max-len", "5")
    assert proc.returncode == 0, proc.stderr
    assert "FAIL" not in proc.stdout and proc.stdout.count("PASS") == 13


def test_figure_script(tmp_path):
    tex = tmp_path / "fig.tex"
    proc = run(str(SCRIPTS / "b2_figure.py"), "--latex", str(tex))
    assert proc.returncode == 0, proc.stderr
    assert "01021: 6 Weyl factors, balance equal = True" in proc.stdout
    assert tex.read_text().count("rectangle") == 6
