"""Backend equivalence: the compiled Gibbs kernel and the pure-Python twin
must produce bit-identical sweeps from the same RNG state."""

import numpy as np
import pytest

from crosseval._kernels import BACKEND, gibbs_py
from crosseval.rng import DeterministicRng

try:
    from crosseval._kernels import _gibbs as compiled
except ImportError:
    compiled = None


def build_state(seed=7, n_docs=6, n_topics=4, vocab=15, n_tokens=120):
    rng = DeterministicRng(seed)
    words = np.array(
        [min(int(rng.next_double() * vocab), vocab - 1) for _ in range(n_tokens)],
        dtype=np.int32,
    )
    doc_ids = np.array(
        sorted(min(int(rng.next_double() * n_docs), n_docs - 1) for _ in range(n_tokens)),
        dtype=np.int32,
    )
    z = np.zeros(n_tokens, dtype=np.int32)
    n_dk = np.zeros((n_docs, n_topics), dtype=np.int32)
    n_kw = np.zeros((n_topics, vocab), dtype=np.int32)
    n_k = np.zeros(n_topics, dtype=np.int32)
    for i in range(n_tokens):
        k = min(int(rng.next_double() * n_topics), n_topics - 1)
        z[i] = k
        n_dk[doc_ids[i], k] += 1
        n_kw[k, words[i]] += 1
        n_k[k] += 1
    prior = np.full(n_topics, 0.7, dtype=np.float64)
    return words, doc_ids, z, n_dk, n_kw, n_k, prior, rng.state


def run_sweeps(sweep, n_iter=30, seed=7):
    words, doc_ids, z, n_dk, n_kw, n_k, prior, state = build_state(seed)
    for _ in range(n_iter):
        state = sweep(words, doc_ids, z, n_dk, n_kw, n_k, prior, 0.01, state)
    return z, n_dk, n_kw, n_k, state


@pytest.mark.skipif(compiled is None, reason="compiled kernel unavailable")
def test_gibbs_sweep_bit_identical():
    z_c, n_dk_c, n_kw_c, n_k_c, state_c = run_sweeps(compiled.gibbs_sweep)
    z_p, n_dk_p, n_kw_p, n_k_p, state_p = run_sweeps(gibbs_py.gibbs_sweep)
    assert np.array_equal(z_c, z_p)
    assert np.array_equal(n_dk_c, n_dk_p)
    assert np.array_equal(n_kw_c, n_kw_p)
    assert np.array_equal(n_k_c, n_k_p)
    assert state_c == state_p


@pytest.mark.skipif(compiled is None, reason="compiled kernel unavailable")
def test_infer_sweep_bit_identical():
    words, _, _, _, n_kw, n_k, prior, state = build_state(seed=21)
    doc = words[:40].copy()

    def run(impl):
        rng = DeterministicRng(5)
        z = np.zeros(len(doc), dtype=np.int32)
        n_local = np.zeros(len(prior), dtype=np.int32)
        for i in range(len(doc)):
            k = min(int(rng.next_double() * len(prior)), len(prior) - 1)
            z[i] = k
            n_local[k] += 1
        s = rng.state
        for _ in range(20):
            s = impl(doc, z, n_local, n_kw, n_k, prior, 0.01, s)
        return z, n_local, s

    z_c, local_c, s_c = run(compiled.infer_sweep)
    z_p, local_p, s_p = run(gibbs_py.infer_sweep)
    assert np.array_equal(z_c, z_p)
    assert np.array_equal(local_c, local_p)
    assert s_c == s_p


def test_counts_stay_consistent_after_sweeps():
    z, n_dk, n_kw, n_k, _ = run_sweeps(gibbs_py.gibbs_sweep, n_iter=10)
    assert n_dk.sum() == len(z)
    assert n_kw.sum() == len(z)
    assert n_k.sum() == len(z)
    assert (n_dk >= 0).all() and (n_kw >= 0).all() and (n_k >= 0).all()


def test_selected_backend_exposed():
    assert BACKEND in ("compiled", "python")


def test_pure_fallback_selected_via_env(tmp_path):
    """A subprocess forced onto the fallback fits the same model bits."""
    import subprocess
    import sys

    script = tmp_path / "fit_hash.py"
    script.write_text(
        "import hashlib\n"
        "from crosseval._kernels import BACKEND\n"
        "from crosseval.topics import fit_lda\n"
        "corpus = [[f'w{(i*7+j) % 9}' for j in range(12)] for i in range(25)]\n"
        "model = fit_lda(corpus, n_topics=3, alpha=0.4, n_iterations=40, seed=2)\n"
        "print(BACKEND, hashlib.sha256(model.topic_word_counts.tobytes()).hexdigest())\n",
        encoding="utf-8",
    )

    def run(pure):
        import os

        env = dict(os.environ)
        if pure:
            env["CROSSEVAL_PURE_PYTHON"] = "1"
        else:
            env.pop("CROSSEVAL_PURE_PYTHON", None)
        out = subprocess.run(
            [sys.executable, str(script)], capture_output=True, text=True, env=env,
            check=True,
        )
        return out.stdout.split()

    default_backend, default_hash = run(pure=False)
    pure_backend, pure_hash = run(pure=True)
    assert pure_backend == "python"
    assert pure_hash == default_hash
