#!/usr/bin/env python3
"""Runs every CLI command over the corpus and validates the JSON against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

binary, corpus, schema_dir = map(pathlib.Path, sys.argv[1:4])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())


def validator(name):
    return Draft202012Validator(schemas[name + ".schema.json"], registry=registry)


cache = tempfile.mkdtemp(prefix="coxl2-schema-")
failures = 0
checked = 0


def run(args, schema, expect=(0, 2)):
    global failures, checked
    manifest = pathlib.Path(cache) / "last-manifest.json"
    proc = subprocess.run([str(binary), *args, "--cache-dir", cache, "--manifest", str(manifest)],
                          capture_output=True, text=True)
    if proc.returncode not in expect:
        print(f"FAIL exit {proc.returncode}: {' '.join(args)}\n{proc.stderr}")
        failures += 1
        return
    for doc, name in ((json.loads(proc.stdout), schema), (json.loads(manifest.read_text()), "manifest")):
        errors = sorted(validator(name).iter_errors(doc), key=str)
        checked += 1
        if errors:
            failures += 1
            print(f"FAIL {name}: {' '.join(args)}: {errors[0].message} at {list(errors[0].path)}")


files = sorted(corpus.glob("*.cox"))
small = [f for f in files if f.name in {"i2_3.cox", "d_inf.cox", "triangle_333.cox", "k4_3.cox"}]
for f in files:
    s = str(f)
    run(["validate", s], "validate")
    run(["classify", s], "classify")
    run(["nerve", s], "nerve")
    run(["growth", s], "growth")
    run(["coeffs", s, "--max-length", "6"], "coeffs")
    for q in ("1/2", "1", "2", "ge1", "le1"):
        run(["betti", s, "--q", q], "betti")
        run(["region", s, "--q", q], "region")
    run(["euler", s, "--q", "1/3"], "euler")
    run(["boundary", s], "boundary")
    run(["e1", s, "--q", "ge1"], "e1")
for f in small:
    run(["cone", str(f), "--q", "1/2", "--qc", "2"], "cone")
    run(["cells", str(f), "--max-length", "2", "--q", "3/2"], "cells")
run(["corpus", str(corpus)], "corpus")
run(["verify", str(small[0]), "--max-length", "6"], "verify", expect=(0,))

proc = subprocess.run([str(binary), "betti", "/nonexistent.cox", "--q", "1"], capture_output=True, text=True)
errors = list(validator("error").iter_errors(json.loads(proc.stderr)))
checked += 1
if proc.returncode != 4 or errors:
    failures += 1
    print("FAIL error document", proc.returncode, proc.stderr)

print(f"{checked} documents checked, {failures} failures")
sys.exit(1 if failures else 0)
