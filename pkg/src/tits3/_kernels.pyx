# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled super-Jacobi sweep over a CSR structure-constant table mod p.

For each pair ``(i, j)`` the three cyclic terms are accumulated for every
``k`` at once into a dense ``(k, l)`` block, visiting only nonzero structure
constants.  Entries are canonical residues below ``p < 2**24``, so products
stay below ``2**48`` and the at most ``3 n`` products landing on one ``(k, l)``
slot cannot overflow; reduction happens once per slot.
"""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free, calloc

cnp.import_array()

ctypedef cnp.int64_t i64


def jacobi_sweep(i64[::1] ptr, i64[::1] idx, i64[::1] val, i64[::1] parity, i64 p):
    """Sweep all ordered basis triples; stop at the first violation.

    Returns ``(checked, triple_or_None, value_or_None)``, where ``checked``
    counts triples in lexicographic order up to and including the violation.
    """
    cdef i64 n = parity.shape[0]
    cdef i64 nnz = idx.shape[0]
    if nnz == 0:
        return n * n * n, None, None

    # second index of each entry, and the entries regrouped by second index
    pairs = np.repeat(np.arange(n * n, dtype=np.int64), np.diff(np.asarray(ptr)))
    first, second = np.divmod(pairs, n)
    order = np.lexsort((first, second))
    cdef i64[::1] rowk = np.ascontiguousarray(second, dtype=np.int64)
    cdef i64[::1] colk = np.ascontiguousarray(first[order], dtype=np.int64)
    cdef i64[::1] colm = np.ascontiguousarray(np.asarray(idx)[order], dtype=np.int64)
    cdef i64[::1] colv = np.ascontiguousarray(np.asarray(val)[order], dtype=np.int64)
    cdef i64[::1] colptr = np.ascontiguousarray(
        np.searchsorted(second[order], np.arange(n + 1)), dtype=np.int64)

    cdef i64* acc = <i64*> calloc(n * n, sizeof(i64))
    cdef char* touched = <char*> calloc(n * n, sizeof(char))
    cdef i64* tlist = <i64*> malloc(n * n * sizeof(i64))
    cdef i64 i, j, k, l, m, q, r, e, c, pos, nt, t, s2
    cdef i64 pi, pj
    cdef i64 checked = 0
    cdef i64 fi = -1, fj = -1, fk = -1
    try:
        with nogil:
            for i in range(n):
                pi = parity[i]
                for j in range(n):
                    pj = parity[j]
                    nt = 0
                    # (-1)^{|i||k|} [[e_i, e_j], e_k]
                    for q in range(ptr[i * n + j], ptr[i * n + j + 1]):
                        m = idx[q]
                        c = val[q]
                        for r in range(ptr[m * n], ptr[m * n + n]):
                            k = rowk[r]
                            pos = k * n + idx[r]
                            if pi & parity[k]:
                                acc[pos] -= c * val[r]
                            else:
                                acc[pos] += c * val[r]
                            if not touched[pos]:
                                touched[pos] = 1
                                tlist[nt] = pos
                                nt += 1
                    # (-1)^{|j||i|} [[e_j, e_k], e_i]
                    s2 = -1 if (pj & pi) else 1
                    for r in range(ptr[j * n], ptr[j * n + n]):
                        k = rowk[r]
                        m = idx[r]
                        c = s2 * val[r]
                        for q in range(ptr[m * n + i], ptr[m * n + i + 1]):
                            pos = k * n + idx[q]
                            acc[pos] += c * val[q]
                            if not touched[pos]:
                                touched[pos] = 1
                                tlist[nt] = pos
                                nt += 1
                    # (-1)^{|k||j|} [[e_k, e_i], e_j]
                    for e in range(colptr[i], colptr[i + 1]):
                        k = colk[e]
                        m = colm[e]
                        c = -colv[e] if (parity[k] & pj) else colv[e]
                        for q in range(ptr[m * n + j], ptr[m * n + j + 1]):
                            pos = k * n + idx[q]
                            acc[pos] += c * val[q]
                            if not touched[pos]:
                                touched[pos] = 1
                                tlist[nt] = pos
                                nt += 1
                    # smallest k carrying a nonzero residue
                    for t in range(nt):
                        pos = tlist[t]
                        if acc[pos] % p != 0:
                            k = pos // n
                            if fk < 0 or k < fk:
                                fk = k
                    if fk >= 0:
                        fi = i
                        fj = j
                        checked += fk + 1
                        break
                    checked += n
                    for t in range(nt):
                        acc[tlist[t]] = 0
                        touched[tlist[t]] = 0
                if fi >= 0:
                    break
        if fi >= 0:
            out = np.zeros(n, dtype=np.int64)
            for l in range(n):
                out[l] = ((acc[fk * n + l] % p) + p) % p
            return checked, (fi, fj, fk), out
        return checked, None, None
    finally:
        free(acc)
        free(touched)
        free(tlist)
