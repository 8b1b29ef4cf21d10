"""Throughput comparison: compiled Gibbs kernel vs the pure-Python twin.

Usage: python benchmarks/bench_kernels.py [--docs 400] [--iters 100]
Both backends run the same sweeps from the same seed; the fitted counts are
asserted bit-identical before timings are reported.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from crosseval._kernels import gibbs_py
from crosseval.rng import DeterministicRng

try:
    from crosseval._kernels import _gibbs as compiled
except ImportError:
    compiled = None


def build_corpus(n_docs: int, doc_len: int, vocab: int, seed: int = 3):
    rng = DeterministicRng(seed)
    words = []
    doc_ids = []
    for d in range(n_docs):
        for _ in range(doc_len):
            words.append(min(int(rng.next_double() * vocab), vocab - 1))
            doc_ids.append(d)
    return (
        np.asarray(words, dtype=np.int32),
        np.asarray(doc_ids, dtype=np.int32),
        rng.state,
    )


def run(sweep, words, doc_ids, n_topics, n_iters, init_state):
    n_docs = int(doc_ids.max()) + 1
    vocab = int(words.max()) + 1
    z = np.zeros(len(words), dtype=np.int32)
    n_dk = np.zeros((n_docs, n_topics), dtype=np.int32)
    n_kw = np.zeros((n_topics, vocab), dtype=np.int32)
    n_k = np.zeros(n_topics, dtype=np.int32)
    rng = DeterministicRng(0)
    rng.state = init_state
    for i in range(len(words)):
        k = min(int(rng.next_double() * n_topics), n_topics - 1)
        z[i] = k
        n_dk[doc_ids[i], k] += 1
        n_kw[k, words[i]] += 1
        n_k[k] += 1
    prior = np.full(n_topics, 0.5, dtype=np.float64)
    state = rng.state
    start = time.perf_counter()
    for _ in range(n_iters):
        state = sweep(words, doc_ids, z, n_dk, n_kw, n_k, prior, 0.01, state)
    elapsed = time.perf_counter() - start
    return elapsed, n_kw


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--docs", type=int, default=400)
    parser.add_argument("--doc-len", type=int, default=40)
    parser.add_argument("--vocab", type=int, default=200)
    parser.add_argument("--topics", type=int, default=20)
    parser.add_argument("--iters", type=int, default=50)
    args = parser.parse_args()

    words, doc_ids, state = build_corpus(args.docs, args.doc_len, args.vocab)
    tokens = len(words)
    updates = tokens * args.iters

    print(f"corpus: {args.docs} docs x {args.doc_len} tokens, "
          f"V={args.vocab}, K={args.topics}, {args.iters} sweeps "
          f"({updates:,} token updates)")

    py_time, py_counts = run(gibbs_py.gibbs_sweep, words, doc_ids,
                             args.topics, args.iters, state)
    print(f"python   : {py_time:8.3f}s  ({updates / py_time / 1e6:6.2f} M updates/s)")

    if compiled is None:
        print("compiled : unavailable (extension not built)")
        return
    c_time, c_counts = run(compiled.gibbs_sweep, words, doc_ids,
                           args.topics, args.iters, state)
    assert np.array_equal(py_counts, c_counts), "backends diverged"
    print(f"compiled : {c_time:8.3f}s  ({updates / c_time / 1e6:6.2f} M updates/s)")
    print(f"speedup  : {py_time / c_time:8.1f}x  (results bit-identical)")


if __name__ == "__main__":
    main()
