#!/usr/bin/env python3
"""End-to-end checks for the command line tool: exit codes and byte-stable
output for fixed inputs."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BINARY = Path(sys.argv[1])
DATA = Path(sys.argv[2])

failures = []


def run(*args, env=None):
    return subprocess.run([str(BINARY), *args], capture_output=True, text=True, env=env)


def expect(name, condition, context=""):
    status = "ok" if condition else "FAIL"
    print(f"{status:4} {name} {context}")
    if not condition:
        failures.append(name)


# polytope: json, text, svg
r = run("polytope", str(DATA / "sl3_w0_k12.json"))
expect("polytope-json-exit", r.returncode == 0, r.stderr)
doc = json.loads(r.stdout)
expect("polytope-json-hull", doc["hull"] == [[0, 23], [23, 0]])

r = run("polytope", str(DATA / "sl3_v_k12.json"))
expect("polytope-point-hull", json.loads(r.stdout)["hull"] == [[11, 9]])

r = run("polytope", str(DATA / "sl3_w0_k12.json"), "--format", "svg")
expect("polytope-svg", r.returncode == 0 and r.stdout.startswith("<svg"))

r = run("polytope", str(DATA / "malformed.json"))
expect("polytope-malformed-exit2", r.returncode == 2, r.stderr.strip())

# destab with an explicit curve file
r = run("destab", str(DATA / "sl2_v_n3.json"), str(DATA / "sl2_w_n3.json"),
        "--curve", str(DATA / "sl2_curve_reducible.json"))
expect("destab-exit1", r.returncode == 1)
doc = json.loads(r.stdout)
expect("destab-orders", doc["ord_v"] == -2 and doc["ord_w"] == -1)
expect("destab-kind", doc["kind"] == "destabilized")

# hm on a single unstable vector
r = run("hm", str(DATA / "sl3_v_k12.json"))
expect("hm-exit1", r.returncode == 1)
expect("hm-witness", json.loads(r.stdout)["witness"] == [11, 9])

# check-pair exhibits the semistability gap: sampled pass AND destabilized
r = run("check-pair", str(DATA / "sl2_v_n3.json"), str(DATA / "sl2_w_n3.json"),
        "--samples", "120", "--seed", "5")
expect("check-pair-exit1", r.returncode == 1)
doc = json.loads(r.stdout)
expect("check-pair-sampled-pass",
       doc["sampled"]["kind"] == "numerically-semistable-sample-pass")
expect("check-pair-destabilized", doc["destabilized"] is True)

# group mismatch is a usage error
r = run("check-pair", str(DATA / "sl2_v_n3.json"), str(DATA / "sl3_w0_k12.json"))
expect("check-pair-group-mismatch-exit2", r.returncode == 2)

# repro runs: pass, byte-stable, exit codes
r1 = run("repro", "sl2-reducible", "--n", "3", "--samples", "150", "--seed", "11")
r2 = run("repro", "sl2-reducible", "--n", "3", "--samples", "150", "--seed", "11")
expect("repro-exit0", r1.returncode == 0)
expect("repro-byte-stable", r1.stdout == r2.stdout)
expect("repro-overall", json.loads(r1.stdout)["overall"] == "pass")

r = run("repro", "sl3", "--k", "2")
expect("repro-small-k-guard-exit2", r.returncode == 2, r.stderr.strip())

r = run("repro", "nonsense")
expect("repro-unknown-exit2", r.returncode == 2)

# PAIRSTAB_SEED overrides the default seed only
import os
env = dict(os.environ, PAIRSTAB_SEED="77")
r_env = run("repro", "sl2-reducible", "--n", "3", "--samples", "60", env=env)
r_default = run("repro", "sl2-reducible", "--n", "3", "--samples", "60")
r_explicit = run("repro", "sl2-reducible", "--n", "3", "--samples", "60", "--seed", "77")
expect("env-seed-overrides-default",
       json.loads(r_env.stdout)["params"]["seed"] == "77")
expect("env-seed-matches-explicit", r_env.stdout == r_explicit.stdout)
expect("default-seed-unaffected", json.loads(r_default.stdout)["params"]["seed"] == "1")

# --out writes the same bytes as stdout
with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "report.json"
    r_file = run("repro", "sl2-reducible", "--n", "3", "--samples", "60", "--out", str(out))
    expect("out-file-exit", r_file.returncode == 0)
    expect("out-file-bytes", out.read_text() == r_default.stdout)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
