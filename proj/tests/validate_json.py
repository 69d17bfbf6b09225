"""Validate groth CLI JSON output against the schemas in docs/schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())

cases = [
    ("poly.schema.json", ["compute", "--what", "grothendieck", "--perm", "1432", "--json"]),
    ("poly.schema.json", ["compute", "--what", "factorial", "--shape", "2,1", "--n", "2", "--json"]),
    ("poly.schema.json", ["compute", "--what", "grothendieck", "--perm", "12", "--json"]),
    ("states.schema.json", ["states", "--model", "bumpless", "--perm", "132", "--render", "json"]),
    ("states.schema.json", ["states", "--model", "five-vertex", "--shape", "2,1", "--n", "2", "--marked", "--render", "json"]),
    ("states.schema.json", ["states", "--model", "atom", "--shape", "1", "--perm", "21", "--variant", "poly", "--render", "json"]),
    ("verify.schema.json", ["verify", "--suite", "lgv", "--max-n", "3", "--json"]),
    ("lgv.schema.json", ["lgv", "--perm", "1432", "--json"]),
    ("lgv.schema.json", ["lgv", "--full", "--n", "2", "--json"]),
    ("solve-r.schema.json", ["solve-r", "--model", "bumpless", "--json"]),
    ("export.schema.json", ["export", "--model", "semidual", "--n", "2"]),
]

failed = 0
for schema, args in cases:
    out = subprocess.run([exe, *args], capture_output=True, text=True, check=True).stdout
    try:
        jsonschema.Draft202012Validator(schemas[schema], registry=registry).validate(json.loads(out))
    except jsonschema.ValidationError as e:
        failed += 1
        print(f"{' '.join(args)}: {e.message}")
sys.exit(1 if failed else 0)
