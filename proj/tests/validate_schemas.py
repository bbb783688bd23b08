"""Validates eqcoh JSON output, shipped inputs and golden files against schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

binary, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
registry = Registry().with_resources((s["$id"], Resource.from_contents(s)) for s in schemas.values())
by_tag = {s["properties"]["schema"]["const"]: name for name, s in schemas.items() if "schema" in s.get("properties", {})}

failures = 0


def check(doc, name, what):
    global failures
    jsonschema.Draft202012Validator.check_schema(schemas[name])
    errors = list(jsonschema.Draft202012Validator(schemas[name], registry=registry).iter_errors(doc))
    if errors:
        failures += 1
        print(f"FAIL {what}: {errors[0].message}")
    else:
        print(f"ok   {what} ({name})")


def run(args, expect=0):
    r = subprocess.run([binary, *args], capture_output=True, text=True)
    if r.returncode != expect:
        raise SystemExit(f"{args}: exit {r.returncode}, expected {expect}\n{r.stderr}")
    return json.loads(r.stdout if expect == 0 else r.stderr)


commands = [
    ["weyl", "--type", "G2"],
    ["flag", "--type", "A3", "--parabolic", "2", "--theory", "MU"],
    ["flag", "--type", "B2", "--theory", "K"],
    ["model", "--input", str(root / "data" / "p1_model.json"), "--theory", "MU", "--mu-truncation", "2"],
    ["poset", "--input", str(root / "data" / "p2_poset.json")],
    ["gr", "--type", "G2", "--alpha", "1,0", "--level", "2"],
    ["gr-limit", "--type", "A2", "--alpha", "1,0", "--levels", "3", "--theory", "K"],
    ["euler", "--weights", "1,0,2;0,-1,1", "--theory", "MU"],
]
for args in commands:
    doc = run(args + ["--output", "json"])
    check(doc, by_tag[doc["schema"]], " ".join(args[:3]))
for doc in run(["euler", "--seed", "3", "--count", "10", "--theory", "K", "--output", "json"]):
    check(doc, "euler", "euler --seed")
check(run(["weyl", "--type", "E8"], expect=2), "error", "usage error")
check(run(["euler", "--weights", "0,0"], expect=1), "error", "computation error")
check(run(["flag", "--type", "A2", "--emit-model"]), "model", "flag --emit-model")
check(json.loads((root / "data" / "p1_model.json").read_text()), "model", "data/p1_model.json")
check(json.loads((root / "data" / "p2_poset.json").read_text()), "poset", "data/p2_poset.json")
for golden in sorted((root / "tests" / "golden").glob("*.json")):
    doc = json.loads(golden.read_text())
    for d in doc if isinstance(doc, list) else [doc]:
        check(d, by_tag[d["schema"]], f"golden {golden.name}")

# Mutated documents must be rejected.
def reject(doc, name, what):
    global failures
    if jsonschema.Draft202012Validator(schemas[name], registry=registry).is_valid(doc):
        failures += 1
        print(f"FAIL accepted {what}")
    else:
        print(f"ok   rejects {what}")


gr = run(["gr", "--type", "A1", "--alpha", "1", "--level", "1", "--output", "json"])
reject({k: v for k, v in gr.items() if k != "count"}, "gr", "gr report without count")
flag = run(["flag", "--type", "A1", "--theory", "MU", "--output", "json"])
flag["generators"][0]["class"]["theory"] = "KO"
reject(flag, "flag", "unknown theory in a nested ring element")
flag = run(["flag", "--type", "A1", "--output", "json"])
flag["generators"][0]["shift"] = 3
reject(flag, "flag", "odd shift")
reject({"dimension": 1, "points": [{"label": "a", "weights": [[1.5]]}]}, "model", "fractional weight")

# The embedded copies are the shipped files.
embedded = run(["--schema"])
if embedded != schemas:
    failures += 1
    print("FAIL embedded schemas differ from schemas/")

sys.exit(1 if failures else 0)
