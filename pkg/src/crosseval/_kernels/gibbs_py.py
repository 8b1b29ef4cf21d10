"""Pure-Python collapsed Gibbs sweeps.

Fallback used when the compiled extension is unavailable (or when
``CROSSEVAL_PURE_PYTHON=1``). The compiled twin in ``_gibbs.pyx`` performs the
same floating-point operations in the same order on the same splitmix64
stream, so fitted models are bit-identical across backends.
"""

from __future__ import annotations

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_INV_2_53 = 1.0 / 9007199254740992.0

BACKEND = "python"


def _step(state: int) -> tuple[int, float]:
    state = (state + _GOLDEN) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    z = z ^ (z >> 31)
    return state, (z >> 11) * _INV_2_53


def gibbs_sweep(words, doc_ids, z, n_dk, n_kw, n_k, prior, beta, state):
    """One full corpus sweep; counts and assignments updated in place.

    words, doc_ids, z: int32[N]; n_dk: int32[D,K]; n_kw: int32[K,V];
    n_k: int32[K]; prior: float64[K]. Returns the advanced RNG state.
    """
    n_topics = n_kw.shape[0]
    vbeta = float(n_kw.shape[1]) * beta

    words_l = words.tolist()
    docs_l = doc_ids.tolist()
    z_l = z.tolist()
    n_dk_l = n_dk.tolist()
    n_kw_l = n_kw.tolist()
    n_k_l = n_k.tolist()
    prior_l = prior.tolist()
    weights = [0.0] * n_topics

    for i in range(len(words_l)):
        w = words_l[i]
        d = docs_l[i]
        old = z_l[i]
        n_dk_l[d][old] -= 1
        n_kw_l[old][w] -= 1
        n_k_l[old] -= 1

        total = 0.0
        row_d = n_dk_l[d]
        for k in range(n_topics):
            wt = (row_d[k] + prior_l[k]) * (n_kw_l[k][w] + beta) / (n_k_l[k] + vbeta)
            weights[k] = wt
            total += wt

        state, u = _step(state)
        r = u * total
        acc = 0.0
        new = n_topics - 1
        for k in range(n_topics):
            acc += weights[k]
            if r < acc:
                new = k
                break

        z_l[i] = new
        row_d[new] += 1
        n_kw_l[new][w] += 1
        n_k_l[new] += 1

    z[:] = z_l
    n_dk[:] = n_dk_l
    n_kw[:] = n_kw_l
    n_k[:] = n_k_l
    return state


def infer_sweep(words, z, n_local, n_kw, n_k, prior, beta, state):
    """One sweep over a single held-out document with frozen topic-word counts."""
    n_topics = n_kw.shape[0]
    vbeta = float(n_kw.shape[1]) * beta

    words_l = words.tolist()
    z_l = z.tolist()
    local_l = n_local.tolist()
    n_kw_l = n_kw.tolist()
    n_k_l = n_k.tolist()
    prior_l = prior.tolist()
    weights = [0.0] * n_topics

    for i in range(len(words_l)):
        w = words_l[i]
        old = z_l[i]
        local_l[old] -= 1

        total = 0.0
        for k in range(n_topics):
            wt = (local_l[k] + prior_l[k]) * (n_kw_l[k][w] + beta) / (n_k_l[k] + vbeta)
            weights[k] = wt
            total += wt

        state, u = _step(state)
        r = u * total
        acc = 0.0
        new = n_topics - 1
        for k in range(n_topics):
            acc += weights[k]
            if r < acc:
                new = k
                break

        z_l[i] = new
        local_l[new] += 1

    z[:] = z_l
    n_local[:] = np.asarray(local_l, dtype=n_local.dtype)
    return state
