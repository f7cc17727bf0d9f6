"""Pure-numpy CSR kernels, used when the compiled extension is unavailable."""

import numpy as np


def spmv_csr(indptr, indices, x, scale, out):
    """out = scale * (A @ x) for a CSR adjacency with unit values."""
    if indices.size == 0:
        out[:] = 0.0
        return
    starts = indptr[:-1]
    nonempty = starts < indptr[1:]
    # reduceat over nonempty rows only: their starts are strictly increasing
    # and in range, and consecutive starts delimit each row exactly (empty
    # rows in between share the same offset and contribute nothing).
    out[:] = 0.0
    out[nonempty] = np.add.reduceat(x[indices], starts[nonempty])
    if scale != 1.0:
        out *= scale
