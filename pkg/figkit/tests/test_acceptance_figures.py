"""Acceptance (secondary component): regenerate every panel family from the
laboratory's acceptance CSVs, deterministically, with the -1/2 and -3/2
guide lines in place.

Uses the CSVs produced by the primary acceptance suite (results/acceptance)
when available; otherwise falls back to small runs through the `mdl` CLI,
which is the declared interface between the packages.
"""

import os
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from figkit import FigureSpec, PanelSpec, render

RESULTS = Path(os.environ.get(
    "MDLAB_ACCEPT_OUT",
    Path(__file__).resolve().parents[2] / "results" / "acceptance",
))


def _mdl(*args):
    exe = shutil.which("mdl")
    cmd = [exe] if exe else [sys.executable, "-m", "mdlab.labcli.cli"]
    res = subprocess.run([*cmd, *args], capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
    return res.stdout


@pytest.fixture(scope="module")
def acceptance_csvs(tmp_path_factory):
    """Paths to (deep trace, d5 trace, walk histogram); generated if absent."""
    deep = RESULTS / "trace_deep_d2k2.csv"
    d5 = RESULTS / "trace_d5k2_seed0.csv"
    hist = RESULTS / "first_return.hist.csv"
    if deep.exists() and d5.exists() and hist.exists():
        return str(deep), str(d5), str(hist)
    work = tmp_path_factory.mktemp("csvs")
    deep = work / "trace_deep_d2k2.csv"
    cfg = work / "deep.json"
    cfg.write_text(
        '{"kind": "drive-trace", "d": 2, "k": 2, "n_max": 40, "seed": 0, '
        f'"output": "{deep}"}}'
    )
    _mdl("run", str(cfg))
    d5 = work / "trace_d5k2_seed0.csv"
    cfg2 = work / "d5.json"
    cfg2.write_text(
        '{"kind": "drive-trace", "d": 5, "k": 2, "n_max": 14, "seed": 0, '
        f'"kernel": "limb", "output": "{d5}"}}'
    )
    _mdl("run", str(cfg2))
    walk = work / "walk.csv"
    _mdl("walk", "--walkers", "20000", "--cap", "2000", "--seed", "7",
         "--output", str(walk))
    hist = work / "walk.hist.csv"
    return str(deep), str(d5), str(hist)


def test_all_panel_families_render_deterministically(acceptance_csvs, tmp_path):
    deep, d5, hist = acceptance_csvs
    spec_dict = dict(
        panels=[
            PanelSpec(kind="drive-trace", csv_paths=[d5, deep],
                      guide_exponent=-0.5, title="trace distance vs T",
                      labels=["d=5, k=2", "d=2, k=2"]),
            PanelSpec(kind="xi-overlay", csv_paths=[deep], title="qubit trace"),
            PanelSpec(kind="survival", csv_paths=[hist], title="first-return"),
            PanelSpec(kind="step-length", title="step length"),
        ],
    )
    blobs = []
    for name in ("panels_a.svg", "panels_b.svg"):
        out = str(tmp_path / name)
        render(FigureSpec(output=out, **spec_dict))
        blobs.append(Path(out).read_bytes())
    assert blobs[0] == blobs[1], "identical inputs must give byte-identical images"
    body = blobs[0].decode()
    assert "T^{-0.5}" in body, "reference guide at exponent -1/2 missing"
    assert "n^{-3/2}" in body, "reference guide at exponent -3/2 missing"
    png = str(tmp_path / "panels.png")
    render(FigureSpec(output=png, **spec_dict))
    assert os.path.getsize(png) > 10_000
    print("\nACCEPTANCE 10 (figure regeneration): PASS - four panel families, "
          "byte-identical reruns, guides at -1/2 and -3/2 present")
