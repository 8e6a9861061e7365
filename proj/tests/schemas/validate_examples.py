"""Validate shipped example jobs and the reports they produce against the JSON schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    schemas = pathlib.Path(sys.argv[1])
    cli = sys.argv[2]
    job_schema = json.loads((schemas / "job.schema.json").read_text())
    report_schema = json.loads((schemas / "report.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(job_schema)
    jsonschema.Draft202012Validator.check_schema(report_schema)

    failures = 0
    examples = sorted((schemas / "examples").glob("*.json"))
    for path in examples:
        try:
            jsonschema.validate(json.loads(path.read_text()), job_schema)
            out = subprocess.run([cli, "--job", str(path), "--format", "json"],
                                 check=True, capture_output=True, text=True).stdout
            jsonschema.validate(json.loads(out), report_schema)
        except (jsonschema.ValidationError, subprocess.CalledProcessError) as err:
            failures += 1
            print(f"FAIL {path.name}: {err}")
        else:
            print(f"ok   {path.name}")

    bad = {"schema": "relcone-job/1", "command": "homology", "input": {"space": "circle", "extra": 1}}
    if jsonschema.Draft202012Validator(job_schema).is_valid(bad):
        failures += 1
        print("FAIL job schema accepts an unknown input field")
    proc = subprocess.run([cli, "--job", "-", "--format", "json"], input=json.dumps(bad),
                          capture_output=True, text=True)
    jsonschema.validate(json.loads(proc.stdout), report_schema)
    if proc.returncode != 2:
        failures += 1
        print(f"FAIL invalid job exited with {proc.returncode}")

    print(f"{len(examples)} examples, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
