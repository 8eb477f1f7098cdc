#!/usr/bin/env python3
"""End-to-end checks for listheap-bench. Usage: check_cli.py <bench> <data_dir> <case>"""

import csv
import io
import json
import subprocess
import sys

BENCH, DATA, CASE = sys.argv[1], sys.argv[2], sys.argv[3]
SAMPLE = f"{DATA}/sample16.seq"
TWO_CYCLE = f"{DATA}/two_cycle.gr"


def run(*args, ok=True):
    p = subprocess.run([BENCH, *args], capture_output=True, text=True)
    if ok and p.returncode != 0:
        sys.exit(f"{' '.join(args)} exited {p.returncode}: {p.stderr}")
    return p


def expect(cond, msg):
    if not cond:
        sys.exit("FAIL: " + msg)


def trace_ra():
    out = run("trace", "--heap", "ra", "--seq-file", SAMPLE).stdout.splitlines()
    expect(len(out) == 16, f"16 steps, got {len(out)}")
    expect(out[0] == "1: insert 3 (0 cmps) [3]", out[0])
    expect(out[-1].endswith("[1 3] [4 14 15] [2 8 9] [5 13] [6 10 12] [11] [7 16]"), out[-1])


def trace_ea():
    out = run("trace", "--heap", "ea", "--seq-file", SAMPLE).stdout.splitlines()
    expect(out[-1].endswith("[1 3 15 16] [2 4 14] [5 9 13] [6 10 12] [7 8 11]"), out[-1])


def trace_ops():
    out = run("trace", "--heap", "ra", "--n", "0", "--ops", "i:5,i:3,k:5:1,d", "--drain").stdout
    lines = out.splitlines()
    expect(any("delete_min" in l for l in lines), out)
    expect(lines[-1].endswith("[]") or "delete_min" in lines[-1], out)


def trace_empty_and_limit():
    p = run("trace", "--heap", "ea", "--n", "0")
    expect(p.stdout.strip() == "", "empty trace prints nothing")
    p = run("trace", "--heap", "ea", "--n", "100", "--limit", "10", ok=False)
    expect(p.returncode == 1 and "limit" in p.stderr, p.stderr)
    p = run("trace", "--heap", "all", "--n", "4", ok=False)
    expect(p.returncode != 0, "trace needs a single heap")


def measure():
    out = run("measure", "--seq-file", SAMPLE, "--show-partitions").stdout.splitlines()
    expect(out[0] == "n=16 runs=8 SUS=7 Enc=5", out[0])
    expect("runs: <3> <15,14,4> <9> <13,5> <12,10,6,1> <11,8> <16,2> <7>" in out, out)
    expect("encroaching set: <1,3,15,16> <2,4,14> <5,9,13> <6,10,12> <7,8,11>" in out, out)
    out = run("measure", "--n", "10", "--order", "increasing").stdout.splitlines()
    expect(out[0] == "n=10 runs=10 SUS=1 Enc=1", out[0])


def dijkstra_small():
    p = run("dijkstra", "--graph-file", TWO_CYCLE, "--print-dist", "--heap", "all")
    expect("dist [0,7]" in p.stdout, p.stdout)
    expect("distances identical across 3 heaps" in p.stdout, p.stdout)
    p = run("dijkstra", "--graph-file", TWO_CYCLE, "--source", "3", ok=False)
    expect(p.returncode == 1, "out-of-range source fails")
    p = run("dijkstra", "--graph-file", f"{DATA}/missing.gr", ok=False)
    expect(p.returncode != 0 and "missing.gr" in p.stderr, p.stderr)


def dijkstra_generated():
    p = run("dijkstra", "--gen", "20000", "80000", "--seed", "3", "--format", "csv")
    rows = {r["heap"]: r for r in csv.DictReader(io.StringIO(p.stdout))}
    expect(set(rows) == {"ra", "ea", "binary"}, p.stdout)
    expect(all(r["workload"] == "gen:20000x80000" for r in rows.values()), p.stdout)
    expect(rows["binary"]["final_k"] == "", "binary has no list count")
    p = run("dijkstra", "--gen", "20000", "80000", "--seed", "3", "--format", "json")
    recs = {r["heap"]: r for r in json.loads(p.stdout)}
    per = {h: r["delmin_cmps"] / r["delete_mins"] for h, r in recs.items()}
    expect(per["ra"] <= per["binary"], f"mean delete_min cmps {per}")


def sort_binary_single():
    p = run("sort", "--heap", "binary", "--n", "1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(p.stdout)))
    expect(len(rows) == 1 and rows[0]["total_cmps"] == "0", p.stdout)


def sort_decreasing():
    p = run("sort", "--heap", "all", "--n", "100000", "--order", "decreasing", "--format", "json")
    recs = {r["heap"]: r for r in json.loads(p.stdout)}
    expect(recs["ra"]["final_k"] == 1, recs["ra"])
    expect(recs["ea"]["final_k"] == 1, recs["ea"])
    expect(recs["binary"]["final_k"] is None, recs["binary"])
    expect(recs["binary"]["total_cmps"] > 5 * recs["ra"]["total_cmps"], recs)


def sort_tables():
    out = run("sort", "--n", "2000", "--order", "random,runs:10,sus:20").stdout
    for needle in ("Normalized wallclock", "Normalized comparisons", "runs:10", "sus:20", "1.00"):
        expect(needle in out, f"missing {needle!r} in\n{out}")
    p = run("sort", "--order", "runs:0", "--n", "10", ok=False)
    expect(p.returncode == 1, "runs:0 is infeasible")
    p = run("sort", "--order", "sideways", ok=False)
    expect(p.returncode != 0, "unknown order")


CASES = {f.__name__: f for f in (trace_ra, trace_ea, trace_ops, trace_empty_and_limit, measure, dijkstra_small,
                                 dijkstra_generated, sort_binary_single, sort_decreasing, sort_tables)}

if __name__ == "__main__":
    CASES[CASE]()
