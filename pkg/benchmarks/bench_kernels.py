#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Covers the two hot paths: tableau shot sampling on the 29-qubit case and the
exhaustive decode sweep.  Results are checked for equality while timing, so
this doubles as a coarse parity check.

Usage: python benchmarks/bench_kernels.py [--shots 4096] [--repeat 3]
"""

import argparse
import time

from qgqec import aqecc, backend, experiments, sim
from qgqec.cases import CaseId


def best_of(repeat, fn):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def bench_sampling(kernels, shots):
    circuit = experiments.build_case_circuit(CaseId.C4, "aqecc", (0, 3, 11))
    ops = sim._clifford_ops(circuit)
    return lambda: kernels.sample_shots(circuit.num_qubits, ops, shots, 42)


def bench_sweep(kernels):
    code = aqecc.build_qc_code(CaseId.C4)
    codewords = code.codewords()

    def run():
        total = ok = 0
        for w in range(1, 6):
            t, c = kernels.sweep_weight(29, codewords, w)
            total += t
            ok += c
        return total, ok

    return run


def bench_distribution(kernels):
    circuits = [sim.random_clifford_circuit(8, 40, seed=1000 + i) for i in range(20)]
    ops_list = [(c.num_qubits, sim._clifford_ops(c)) for c in circuits]

    def run():
        out = []
        for n, ops in ops_list:
            eng = kernels.TableauEngine(n)
            eng.apply(ops)
            out.append(_enumerate(eng, n))
        return out

    return run


def _enumerate(root, n):
    total = {}
    stack = [(root, 0, 0, 1.0)]
    while stack:
        tab, q, bits, prob = stack.pop()
        while q < n:
            if tab.is_random(q):
                left = tab.copy()
                left.project(q, 0)
                stack.append((left, q + 1, bits, prob * 0.5))
                tab.project(q, 1)
                bits |= 1 << q
                prob *= 0.5
            else:
                bits |= tab.deterministic_outcome(q) << q
            q += 1
        total[bits] = total.get(bits, 0.0) + prob
    return total


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--shots", type=int, default=4096)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = {"pure": backend.get_backend("pure")}
    try:
        backends["compiled"] = backend.get_backend("compiled")
    except ImportError:
        print("compiled kernel not available; benchmarking pure only")

    suites = {
        f"tableau sampling (C4, 29 qubits, {args.shots} shots)": bench_sampling,
        "exhaustive sweep (C4, weights 1..5, 293190 cases)": lambda k, _s=None: bench_sweep(k),
        "tableau distribution (20 random 8-qubit circuits)": lambda k, _s=None: bench_distribution(k),
    }

    width = max(len(name) for name in suites)
    print(f"{'benchmark'.ljust(width)}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, make in suites.items():
        times = {}
        results = {}
        for bname, kernels in backends.items():
            fn = make(kernels, args.shots) if "sampling" in name else make(kernels)
            times[bname], results[bname] = best_of(args.repeat, fn)
        if len(results) == 2 and results["pure"] != results["compiled"]:
            raise SystemExit(f"MISMATCH in {name}: backends disagree")
        pure_t = times["pure"]
        comp_t = times.get("compiled")
        speed = f"{pure_t / comp_t:7.1f}x" if comp_t else "     n/a"
        comp_text = f"{comp_t * 1e3:8.2f}ms" if comp_t else "       -"
        print(f"{name.ljust(width)}  {pure_t * 1e3:8.2f}ms  {comp_text}  {speed}")


if __name__ == "__main__":
    main()
