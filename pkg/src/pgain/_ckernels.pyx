# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled CSR kernels. Signatures mirror pgain._pykernels."""


def spmv_csr(const long long[::1] indptr, const long long[::1] indices,
             const double[::1] x, double scale, double[::1] out):
    """out = scale * (A @ x) for a CSR adjacency with unit values.

    Per-row summation is sequential over the (sorted) neighbor list, so the
    result is bit-for-bit reproducible.
    """
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t i, p
    cdef double acc
    for i in range(n):
        acc = 0.0
        for p in range(indptr[i], indptr[i + 1]):
            acc += x[indices[p]]
        out[i] = scale * acc
