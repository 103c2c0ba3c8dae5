"""Runs the pairdepth binary on fixed requests and checks exit codes, JSON
schemas and byte-identical reruns.

usage: cli_contract.py PAIRDEPTH SCHEMA_DIR
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

CASES = [
    # (arguments, expected exit code, schema name)
    (["-e", "Q[x,y]; depth I=(x,y) J=(x) M=(1)/(0)"], 0, "depth"),
    (["-e", "Q[x,y]; cm I=(x^2) J=(x) M=(1)/(0)"], 0, "cm"),
    (["-e", "Q[x,y]; cm I=(x) J=(1) M=(1)/(0)"], 0, "cm"),
    (["-e", "F2[x,y,z]; grade a=(x,y,z) M=(1)/(x*y)"], 0, "grade"),
    (["-e", "Q[x,y]; depthp I=(x,y) J=(x) M=(1)/(0)"], 0, "depthp"),
    (["-e", "Q[x,y]; wset I=(x,y) J=(x) M=(1)/(0)"], 0, "wset"),
    (["-e", "Q[x,y]; torsion I=(x^2) J=(x) M=(1)/(0)"], 0, "torsion"),
    (["-e", "Q[x,y]; ext a=(x,y) M=(1)/(x*y)"], 0, "ext"),
    (["-e", "Q[x,y]; ext a=(x,y) M=(1)/(x*y) i=1"], 0, "ext"),
    (["-e", "Q[x,y]; ass M=(1)/(x^2,x*y)"], 0, "ass"),
    (["-e", "Q[x,y]; dim M=(1)/(x*y)"], 0, "dim"),
    (["-e", "Q[x,y]; decomp a=(x^2,x*y)"], 0, "decomp"),
    (["-e", "Q[x,y]; regseq M=(1)/(x*y) seq=[x] k=1"], 0, "regseq"),
    (["-e", "Q[x,y]; regseq M=(1)/(x*y) a=(x,y) construct=1"], 0, "regseq"),
    (["-e", "Q[x,y]; decomp a=(0)"], 1, "error"),
    (["-e", "Q[x,y]; depth I=(x,z) J=(x) M=(1)/(0)"], 2, "error"),
    (["-e", "Q[x,y]; grade a=(x) M=(x)/(y)"], 2, "error"),
    (["verify", "--census", "n=2,exp=2", "--laws", "radical-j,zero-j-reduction"], 0, "verify"),
    (["verify", "--census", "n=2,exp=2", "--laws", "dimension-bound"], 3, "verify"),
]


def run(binary, args):
    return subprocess.run([binary, "--json", *args] if args[0] != "verify" else [binary, *args, "--json"],
                          capture_output=True, text=True, timeout=300)


def main():
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    failures = []
    for args, code, schema in CASES:
        first = run(binary, args)
        second = run(binary, args)
        label = " ".join(args)
        if first.returncode != code:
            failures.append(f"{label}: exit {first.returncode}, expected {code}")
            continue
        if first.stdout != second.stdout:
            failures.append(f"{label}: output differs between runs")
        try:
            doc = json.loads(first.stdout)
            jsonschema.validate(doc, schemas[schema])
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures.append(f"{label}: {e}")

    # Several requests from a file: one document per line, exit code is the maximum.
    with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
        f.write("# comment\nQ[x,y]; dim M=(1)/(x*y)\n\nQ[x,y]; decomp a=(0)\n")
    batch = subprocess.run([binary, "--json", f.name], capture_output=True, text=True)
    lines = batch.stdout.strip().splitlines()
    if batch.returncode != 1 or len(lines) != 2:
        failures.append(f"batch file: exit {batch.returncode}, {len(lines)} documents")

    with tempfile.TemporaryDirectory() as tmp:
        out = pathlib.Path(tmp) / "report.json"
        r = subprocess.run([binary, "verify", "--census", "n=2,exp=1", "--laws", "radical-j", "--seed", "7",
                            "--out", str(out), "--json"], capture_output=True, text=True)
        if r.returncode != 0 or json.loads(out.read_text())["census"]["seed"] != 7:
            failures.append("verify --out/--seed not honoured")

    plain = subprocess.run([binary, "-e", "Q[x,y]; dim M=(1)/(x*y)"], capture_output=True, text=True)
    if plain.stdout != "dim  1\n":
        failures.append(f"plain output: {plain.stdout!r}")

    for line in failures:
        print("FAIL", line)
    print(f"{len(CASES)} cases, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
