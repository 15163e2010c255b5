#!/usr/bin/env python3
"""End-to-end checks for the command line binary (path given as argv[1])."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]


def run(*args, env_extra=None, expect=0):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, env=env)
    if proc.returncode != expect:
        raise SystemExit(
            f"{' '.join(args)}: exit {proc.returncode}, wanted {expect}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def load(path):
    with open(path) as fh:
        return json.load(fh)


def main():
    tmp = tempfile.mkdtemp(prefix="imsep-cli-")

    def p(name):
        return os.path.join(tmp, name)

    # gen: documented sizes, manifests, determinism, dot.
    run("gen", "--kind", "grid", "--rows", "3", "--cols", "3",
        "--out", p("grid33.json"), "--manifest", p("m.json"))
    m = load(p("m.json"))
    assert m["outputs"] == {"vertices": 9, "edges": 12}, m["outputs"]
    assert m["command"] == "gen" and m["seed"] == 0
    g = load(p("grid33.json"))
    assert g["n"] == 9 and len(g["edges"]) == 12

    run("gen", "--kind", "complete", "--n", "5", "--out", p("k5.json"),
        "--manifest", os.devnull)
    assert len(load(p("k5.json"))["edges"]) == 10

    run("gen", "--kind", "bs", "--b", "2", "--out", p("bs2.json"),
        "--manifest", os.devnull)
    assert len(load(p("bs2.json"))["edges"]) == 5

    for kind, extra in [("cycle", ["--n", "5"]), ("cycle", ["--n", "4"]),
                        ("complete", ["--n", "3"]), ("complete", ["--n", "30"]),
                        ("grid", ["--rows", "4", "--cols", "4"]),
                        ("path", ["--n", "6"]), ("btree", ["--levels", "3"]),
                        ("random", ["--n", "40", "--p", "0.5"])]:
        name = f"{kind}{'x'.join(extra[1::2])}.json"
        run("gen", "--kind", kind, *extra, "--out", p(name), "--manifest", os.devnull)

    first = run("gen", "--kind", "bs", "--b", "3", "--manifest", os.devnull).stdout
    second = run("gen", "--kind", "bs", "--b", "3", "--manifest", os.devnull).stdout
    assert first == second, "generation is not deterministic"

    dot = run("--format", "dot", "gen", "--kind", "path", "--n", "3",
              "--manifest", os.devnull).stdout
    assert "0 -- 1;" in dot and "1 -- 2;" in dot

    # Without --out/--manifest a single combined document lands on stdout.
    combined = json.loads(run("gen", "--kind", "path", "--n", "2").stdout)
    assert combined["manifest"]["outputs"]["edges"] == 1
    assert combined["result"]["n"] == 2

    # Environment variables mirror the global flags.
    env_doc = json.loads(run("gen", "--kind", "random", "--n", "6", "--p", "0.5",
                             env_extra={"IMSEP_SEED": "42"}).stdout)
    assert env_doc["manifest"]["seed"] == 42

    # separate: certified output, exit 0.
    run("separate", "--graph", p("grid33.json"), "--pattern", p("k5.json"),
        "--out", p("sep.json"), "--manifest", p("msep.json"))
    msep = load(p("msep.json"))
    assert msep["verdicts"]["separation_valid"] and msep["verdicts"]["separation_balanced"]
    assert msep["outputs"]["kind"] == "separator"

    run("separate", "--graph", p("complete30.json"), "--pattern", p("cycle4.json"),
        "--out", os.devnull, "--manifest", p("mk30.json"))
    assert load(p("mk30.json"))["outputs"]["kind"] == "separator"

    run("separate", "--graph", p("random40x0.5.json"), "--pattern", p("complete3.json"),
        "--out", os.devnull, "--manifest", p("mg40.json"))
    assert all(load(p("mg40.json"))["verdicts"].values())

    # The emitted separation replays through verify, both as the raw result
    # file and as a bare separation document.
    run("verify", "--graph", p("grid33.json"), "--separation", p("sep.json"),
        "--balanced", "--out", os.devnull, "--manifest", os.devnull)
    sep = load(p("sep.json"))["separation"]
    json.dump(sep, open(p("seponly.json"), "w"))
    run("verify", "--graph", p("grid33.json"), "--separation", p("seponly.json"),
        "--balanced", "--out", os.devnull, "--manifest", os.devnull)

    # mis: 4x4 grid has independence number 8.
    run("mis", "--graph", p("grid4x4.json"), "--brute-check",
        "--out", os.devnull, "--manifest", p("mmis.json"))
    mmis = load(p("mmis.json"))
    assert mmis["outputs"]["size"] == 8
    assert mmis["verdicts"] == {"independent": True, "matches_brute": True}

    # imtest: C4 is an induced minor of C5; its model re-verifies.
    run("imtest", "--graph", p("cycle5.json"), "--pattern", p("cycle4.json"),
        "--out", p("imt.json"), "--manifest", p("mimt.json"))
    mimt = load(p("mimt.json"))
    assert mimt["outputs"]["present"] is True and mimt["verdicts"]["model_valid"] is True
    run("verify", "--graph", p("cycle5.json"), "--model", p("imt.json"),
        "--pattern", p("cycle4.json"), "--out", os.devnull, "--manifest", os.devnull)
    model = load(p("imt.json"))["model"]
    json.dump(model, open(p("model.json"), "w"))
    run("verify", "--graph", p("cycle5.json"), "--model", p("model.json"),
        "--pattern", p("cycle4.json"), "--out", os.devnull, "--manifest", os.devnull)

    # A wrong certificate is a verification failure: exit 1.
    json.dump({"branch_sets": [[0], [1], [2], [3]]}, open(p("badmodel.json"), "w"))
    run("verify", "--graph", p("cycle5.json"), "--model", p("badmodel.json"),
        "--pattern", p("cycle4.json"), "--out", os.devnull, "--manifest", os.devnull,
        expect=1)

    # reduce: every stage certificate true, witness threads through.
    bs2 = load(p("bs2.json"))
    rels = [[u, v, 238] if (u, v) == (0, 1) else [u, v, 511] for u, v in bs2["edges"]]
    json.dump({"version": 1, "graph": bs2, "relations": rels},
              open(p("csp.json"), "w"))
    run("reduce", "--csp", p("csp.json"), "--stage", "imt", "--height", "2",
        "--budget", "2000", "--witness", "--out", p("red.json"),
        "--manifest", p("mred.json"))
    mred = load(p("mred.json"))
    assert all(mred["verdicts"].values()), mred["verdicts"]
    assert mred["outputs"]["satisfiable"] is True
    assert mred["outputs"]["midp_vertices"] == 85
    assert mred["outputs"]["anchor_count"] == 18
    assert max(mred["outputs"]["pair_certificate_widths"]) <= 169
    red = load(p("red.json"))
    assert set(red) == {"midp", "anchored", "imt", "witness"}

    # bs: partition and flow certificates verify with bounded measures.
    run("bs", "--b", "3", "--partition", "--flow", "--out", os.devnull,
        "--manifest", p("mbs.json"))
    mbs = load(p("mbs.json"))
    assert all(mbs["verdicts"].values()), mbs["verdicts"]
    assert max(mbs["outputs"]["certificate_widths"]) <= 16
    assert mbs["outputs"]["congestion"] <= 4 * 8

    # Invalid input exits 2.
    run("gen", "--kind", "grid", "--rows", "0", "--cols", "3", expect=2)
    run("gen", "--kind", "nosuch", expect=2)
    run("bs", "--b", "99", expect=2)
    run("separate", "--graph", p("missing.json"), "--pattern", p("k5.json"), expect=2)
    run("reduce", "--csp", p("grid33.json"), expect=2)
    run("verify", "--graph", p("grid33.json"), expect=2)

    print("cli smoke: all checks passed")


if __name__ == "__main__":
    main()
