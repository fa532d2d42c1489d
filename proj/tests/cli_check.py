#!/usr/bin/env python3
"""End-to-end checks of the orbistruct CLI binary against the shipped schema."""

import json
import subprocess
import sys

import jsonschema


def run(binary, args, expect_code=0):
    proc = subprocess.run([binary] + args, capture_output=True, text=True, timeout=300)
    if proc.returncode != expect_code:
        raise SystemExit(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect_code}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as handle:
        schema = json.load(handle)

    # analysis document validates and reports the expected labels
    proc = run(binary, ["--format", "json", "analyze",
                        "--gamma", "A5", "--b", "A4", "--delta", "A3"])
    document = json.loads(proc.stdout)
    jsonschema.validate(document, schema)
    analysis = document["analysis"]
    assert analysis["p_in_o"]["isotropy"]["label"] == "A4", analysis
    assert analysis["q_in_o"]["isotropy"]["label"] == "Z2", analysis
    assert analysis["qp_in_p"]["isotropy"]["label"] == "1", analysis
    assert analysis["canonical_compatible"] is False
    assert analysis["p_in_o"]["saturation"]["saturated"] is False
    assert analysis["p_in_o"]["saturation"]["witness"]["gamma"].startswith("(")

    # the non-canonical lambda recovers the P-inherited structure
    proc = run(binary, ["--format", "json", "analyze",
                        "--gamma", "A5", "--b", "A4", "--delta", "A3",
                        "--lambda", "(1 2 3)"])
    document = json.loads(proc.stdout)
    jsonschema.validate(document, schema)
    assert document["analysis"]["custom_lambda"]["isotropy"]["label"] == "1"

    # sweep document validates; runs are byte-identical
    proc1 = run(binary, ["--format", "json", "sweep", "S4"])
    proc2 = run(binary, ["--format", "json", "sweep", "S4"])
    assert proc1.stdout == proc2.stdout, "sweep output must be deterministic"
    document = json.loads(proc1.stdout)
    jsonschema.validate(document, schema)
    assert document["sweep"]["total_chains"] == len(document["sweep"]["entries"])

    # filters keep the summary counts of the whole sweep
    proc = run(binary, ["--format", "json", "sweep", "A5", "--only-incompatible"])
    document = json.loads(proc.stdout)
    jsonschema.validate(document, schema)
    assert document["sweep"]["total_chains"] == 8
    assert len(document["sweep"]["entries"]) == 1

    # catalog documents validate
    proc = run(binary, ["--format", "json", "catalog", "list"])
    document = json.loads(proc.stdout)
    jsonschema.validate(document, schema)
    assert any(e["name"] == "A5" for e in document["catalog"]["entries"])

    # text mode mirrors the narrative order
    proc = run(binary, ["analyze", "--gamma", "A5", "--b", "A4", "--delta", "A3"])
    text = proc.stdout
    assert text.index("Gamma_P^O") < text.index("Gamma_Q^O") < text.index("Gamma_Q^P")

    # validation failures exit with 2 and keep stdout clean
    proc = run(binary, ["analyze", "--gamma", "A4", "--b", "A5", "--delta", "A3"],
               expect_code=2)
    assert proc.stdout == ""
    assert "error" in proc.stderr

    run(binary, ["catalog", "show", "NoSuchGroup"], expect_code=2)

    # degenerate chains warn on stderr but succeed
    proc = run(binary, ["analyze", "--gamma", "A5", "--b", "A5", "--delta", "A5"])
    assert "warning" in proc.stderr

    print("cli integration checks passed")


if __name__ == "__main__":
    main()
