# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled collapsed Gibbs sweeps.

Twin of ``gibbs_py.py``: identical splitmix64 stream and identical
floating-point operation order, so both backends produce bit-identical fits.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport uint64_t

BACKEND = "compiled"

cdef uint64_t _GOLDEN = 0x9E3779B97F4A7C15UL
cdef uint64_t _MIX1 = 0xBF58476D1CE4E5B9UL
cdef uint64_t _MIX2 = 0x94D049BB133111EBUL
cdef double _INV_2_53 = 1.0 / 9007199254740992.0


cdef inline double _step(uint64_t* state) nogil:
    cdef uint64_t z
    state[0] = state[0] + _GOLDEN
    z = state[0]
    z = (z ^ (z >> 30)) * _MIX1
    z = (z ^ (z >> 27)) * _MIX2
    z = z ^ (z >> 31)
    return <double>(z >> 11) * _INV_2_53


def gibbs_sweep(cnp.int32_t[::1] words, cnp.int32_t[::1] doc_ids,
                cnp.int32_t[::1] z, cnp.int32_t[:, ::1] n_dk,
                cnp.int32_t[:, ::1] n_kw, cnp.int32_t[::1] n_k,
                cnp.float64_t[::1] prior, double beta, object state_obj):
    """One full corpus sweep; counts and assignments updated in place."""
    cdef uint64_t state = <uint64_t>(<unsigned long long>state_obj)
    cdef Py_ssize_t n_tokens = words.shape[0]
    cdef int n_topics = <int>n_kw.shape[0]
    cdef double vbeta = <double>n_kw.shape[1] * beta
    cdef cnp.float64_t[::1] weights = np.empty(n_topics, dtype=np.float64)
    cdef Py_ssize_t i
    cdef int w, d, old, new, k
    cdef double total, wt, r, acc

    with nogil:
        for i in range(n_tokens):
            w = words[i]
            d = doc_ids[i]
            old = z[i]
            n_dk[d, old] -= 1
            n_kw[old, w] -= 1
            n_k[old] -= 1

            total = 0.0
            for k in range(n_topics):
                wt = (n_dk[d, k] + prior[k]) * (n_kw[k, w] + beta) / (n_k[k] + vbeta)
                weights[k] = wt
                total += wt

            r = _step(&state) * total
            acc = 0.0
            new = n_topics - 1
            for k in range(n_topics):
                acc += weights[k]
                if r < acc:
                    new = k
                    break

            z[i] = new
            n_dk[d, new] += 1
            n_kw[new, w] += 1
            n_k[new] += 1

    return int(state)


def infer_sweep(cnp.int32_t[::1] words, cnp.int32_t[::1] z,
                cnp.int32_t[::1] n_local, cnp.int32_t[:, ::1] n_kw,
                cnp.int32_t[::1] n_k, cnp.float64_t[::1] prior,
                double beta, object state_obj):
    """One sweep over a single held-out document with frozen topic-word counts."""
    cdef uint64_t state = <uint64_t>(<unsigned long long>state_obj)
    cdef Py_ssize_t n_tokens = words.shape[0]
    cdef int n_topics = <int>n_kw.shape[0]
    cdef double vbeta = <double>n_kw.shape[1] * beta
    cdef cnp.float64_t[::1] weights = np.empty(n_topics, dtype=np.float64)
    cdef Py_ssize_t i
    cdef int w, old, new, k
    cdef double total, wt, r, acc

    with nogil:
        for i in range(n_tokens):
            w = words[i]
            old = z[i]
            n_local[old] -= 1

            total = 0.0
            for k in range(n_topics):
                wt = (n_local[k] + prior[k]) * (n_kw[k, w] + beta) / (n_k[k] + vbeta)
                weights[k] = wt
                total += wt

            r = _step(&state) * total
            acc = 0.0
            new = n_topics - 1
            for k in range(n_topics):
                acc += weights[k]
                if r < acc:
                    new = k
                    break

            z[i] = new
            n_local[new] += 1

    return int(state)
