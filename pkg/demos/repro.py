"""
End-to-end reproduction through the command line
================================================

Runs the main pipeline twice with the same seeds and checks that every
output file is byte-identical.  Usage: python3 demos/repro.py [workdir]
"""

# %%
import filecmp
import sys
import tempfile
from pathlib import Path

from graphlab.cli import main


def pipeline(d: Path):
    steps = [
        ["gen", "er", "--nodes", "1000", "--prob", "0.01", "--seed", "1", "--out", d / "er.edges"],
        ["sample", "edges", "--in", d / "er.edges", "--q", "0.5", "--seed", "2",
         "--out", d / "er_q.edges"],
        ["sample", "nodes-uniform", "--in", d / "er.edges", "--keep", "500", "--seed", "3",
         "--out", d / "er_m.edges"],
        ["analyze", "degrees", "--in", d / "er_q.edges", "--ccdf", "--out", d / "er_q.csv"],
        ["gen", "pa", "--nodes", "1000", "--m", "2", "--seed", "4", "--track-nodes", "1,20",
         "--out", d / "pa.edges"],
        ["analyze", "powerlaw", "--in", d / "pa.edges", "--kmin", "5", "--out", d / "tau.json"],
        ["pa", "theory", "--m", "2", "--expected", "--variance", "--node", "1", "--n", "1000",
         "--out", d / "theory.json"],
        ["walk", "mc", "--in", d / "p5.edges", "--x", "1", "--y", "5", "--walks", "100000",
         "--seed", "5", "--out", d / "mc.json"],
        ["verify", "tetali", "--in", d / "p5.edges", "--out", d / "tetali.json"],
    ]
    (d / "p5.edges").write_text("5\n1 2\n2 3\n3 4\n4 5\n")
    for argv in steps:
        code = main([str(a) for a in argv])
        print(f"exit {code}: graphlab {' '.join(map(str, argv[:2]))}")
        assert code == 0


# %%
root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
runs = [root / "run1", root / "run2"]
for d in runs:
    d.mkdir(parents=True, exist_ok=True)
    pipeline(d)

# %%
files = sorted(p.name for p in runs[0].iterdir())
same = [f for f in files if filecmp.cmp(runs[0] / f, runs[1] / f, shallow=False)]
print(f"{len(same)}/{len(files)} files identical across runs")
print((runs[0] / "tau.json").read_text())
assert len(same) == len(files)
