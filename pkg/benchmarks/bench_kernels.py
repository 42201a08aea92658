"""Benchmark the compiled selector kernels against the pure-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

The fallback is selected per process via VPVTOTIENTS_PURE=1, so this script
re-invokes itself once with that variable set and compares wall times.
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
import time


CASES = [
    ("selector_tuples", "m=2, k=500", lambda K: K.selector_tuples(2, 500)),
    ("selector_tuples", "m=3, k=60", lambda K: K.selector_tuples(3, 60)),
    ("selector_count", "m=3, k=80", lambda K: K.selector_count(3, 80)),
    (
        "selector_power_sum",
        "t=2, m=3, k=50",
        lambda K: K.selector_power_sum(2, 3, 50),
    ),
    (
        "selector_cos_sum",
        "k=400, n=(3, 7)",
        lambda K: K.selector_cos_sum(400, (3, 7)),
    ),
    (
        "visible_points_box",
        "bounds=(300, 300)",
        lambda K: K.visible_points_box((300, 300)),
    ),
]


def run_cases() -> list:
    import vpvtotients._kernels as K

    rows = []
    for name, params, fn in CASES:
        fn(K)  # warm up
        reps, t0 = 0, time.perf_counter()
        while time.perf_counter() - t0 < 0.3:
            fn(K)
            reps += 1
        per_call = (time.perf_counter() - t0) / reps
        rows.append({"name": name, "params": params, "seconds": per_call})
    return {"backend": K.BACKEND, "rows": rows}


def main() -> int:
    if os.environ.get("_BENCH_CHILD"):
        print(json.dumps(run_cases()))
        return 0

    results = {}
    for pure in (False, True):
        env = dict(os.environ, _BENCH_CHILD="1")
        env.pop("VPVTOTIENTS_PURE", None)
        if pure:
            env["VPVTOTIENTS_PURE"] = "1"
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__)],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        data = json.loads(out.stdout)
        results[data["backend"]] = data["rows"]

    backends = sorted(results)
    print(f"{'case':<20} {'params':<20} " + " ".join(f"{b:>12}" for b in backends)
          + f" {'speedup':>9}")
    for i, (name, params, _) in enumerate(CASES):
        times = [results[b][i]["seconds"] for b in backends]
        ratio = max(times) / min(times)
        cells = " ".join(f"{t * 1e3:>10.3f}ms" for t in times)
        print(f"{name:<20} {params:<20} {cells} {ratio:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
