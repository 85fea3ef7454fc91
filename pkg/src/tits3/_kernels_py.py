"""Pure-Python (numpy/scipy) implementation of the hot sweep kernels.

Same contract as the compiled ``_kernels`` module.  The sweep is done one
first index ``i`` at a time: for fixed ``i`` all ``n**2`` pairs ``(j, k)``
are evaluated with three sparse matrix products.
"""

import numpy as np
from scipy import sparse


def _tables(ptr, idx, val, n):
    """CSR-by-pair table as sparse matrices used by the sweep."""
    rows = np.repeat(np.arange(n * n, dtype=np.int64), np.diff(ptr))
    # pairs[(a*n+b), m] = c[a,b,m]
    pairs = sparse.csr_matrix((val, (rows, idx)), shape=(n * n, n), dtype=np.int64)
    a, b = np.divmod(rows, n)
    # flat[a, b*n+m] = c[a,b,m]
    flat = sparse.csr_matrix((val, (a, b * n + idx)), shape=(n, n * n), dtype=np.int64)
    return pairs, flat, a, b


def jacobi_sweep(ptr, idx, val, parity, p):
    """Sweep all ordered basis triples; stop at the first violation.

    Returns ``(checked, triple_or_None, value_or_None)``.
    """
    ptr = np.asarray(ptr, dtype=np.int64)
    idx = np.asarray(idx, dtype=np.int64)
    val = np.asarray(val, dtype=np.int64)
    par = np.asarray(parity, dtype=np.int64)
    n = len(par)
    if idx.size == 0:
        return n ** 3, None, None
    pairs, flat, a_of, b_of = _tables(ptr, idx, val, n)
    flat_csc = flat.tocsc()
    for i in range(n):
        # C_i[j, m] = c[i, j, m];  [[e_i, e_j], e_k]_l = (C_i @ flat)[j, k*n+l]
        ci = pairs[i * n:(i + 1) * n]
        t1 = (ci @ flat).tocoo()
        j1 = t1.row
        k1, l1 = np.divmod(t1.col, n)
        s1 = np.where(par[i] & par[k1], -1, 1)
        # [[e_j, e_k], e_i]_l: pairs @ R_i with R_i[m, l] = c[m, i, l]
        ri = flat_csc[:, i * n:(i + 1) * n]
        t2 = (pairs @ ri).tocoo()
        j2, k2 = np.divmod(t2.row, n)
        l2 = t2.col
        s2 = np.where(par[j2] & par[i], -1, 1)
        # [[e_k, e_i], e_j]_l = (B_i @ flat)[k, j*n+l] with B_i[k, m] = c[k, i, m]
        bi = pairs[np.arange(n) * n + i]
        t3 = (bi @ flat).tocoo()
        k3 = t3.row
        j3, l3 = np.divmod(t3.col, n)
        s3 = np.where(par[k3] & par[j3], -1, 1)
        rows = np.concatenate([j1 * n + k1, j2 * n + k2, j3 * n + k3])
        cols = np.concatenate([l1, l2, l3])
        data = np.concatenate([s1 * (t1.data % p), s2 * (t2.data % p), s3 * (t3.data % p)])
        tot = sparse.csr_matrix((data, (rows, cols)), shape=(n * n, n), dtype=np.int64)
        tot.data %= p
        tot.eliminate_zeros()
        if tot.nnz:
            nzrows = np.flatnonzero(np.diff(tot.indptr))
            bad = int(nzrows[0])
            j, k = divmod(bad, n)
            out = np.asarray(tot[bad].todense()).ravel() % p
            return i * n * n + bad + 1, (i, j, k), out
    return n ** 3, None, None
