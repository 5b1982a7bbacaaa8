#!/usr/bin/env python3
"""The full file pipeline, driven through the CLI entry point.

generate -> analyze -> rank -> hist, all into a scratch directory, then a
peek at what landed on disk.  Every artifact is reproducible: rerunning
with the same flags rewrites the same bytes.
"""

import json
import tempfile
from pathlib import Path

from noderank.cli import main

workdir = Path(tempfile.mkdtemp(prefix="noderank_demo_"))
edges = workdir / "network.txt"

steps = [
    ["generate", "--model", "ba", "--nodes", "1500", "--edges", "3750",
     "--seed", "42", "--out", str(edges)],
    ["analyze", "--input", str(edges), "--alpha", "0.5", "--out", str(workdir / "report")],
    ["rank", "--input", str(edges), "--method", "fused", "--top", "5",
     "--out", str(workdir / "top5.tsv")],
    ["hist", "--input", str(edges), "--metric", "degree", "--bins", "30",
     "--log", "--out", str(workdir / "degree.svg")],
]
for argv in steps:
    print("$ noderank " + " ".join(argv))
    code = main(argv)
    assert code == 0, f"exit {code}"

report = json.loads((workdir / "report" / "report.json").read_text())
print("\nreport.json summary block:")
for key, value in report["summary"].items():
    print(f"  {key:22} {value}")

print("\ntop5.tsv:")
print((workdir / "top5.tsv").read_text())

print("files written:")
for path in sorted(workdir.rglob("*")):
    if path.is_file():
        print(f"  {path.relative_to(workdir)}  ({path.stat().st_size} bytes)")
print(f"\nscratch directory: {workdir}")
