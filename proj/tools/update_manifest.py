#!/usr/bin/env python3
"""Rewrite data/MANIFEST.csv with SHA-256 digests of every bundled data file."""
import hashlib
import pathlib
import sys

data = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data")
lines = ["# version: 1", "# SHA-256 of each bundled file; checked on every load.", "file,sha256"]
for path in sorted(data.glob("*.csv")):
    if path.name == "MANIFEST.csv":
        continue
    lines.append(f"{path.name},{hashlib.sha256(path.read_bytes()).hexdigest()}")
(data / "MANIFEST.csv").write_text("\n".join(lines) + "\n")
