# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernel: the 256-term pointwise Clifford contraction."""

import numpy as np


def clifford_contract(double complex[:, ::1] a, double complex[:, ::1] b,
                      long[::1] slot_a, long[::1] slot_b, long[::1] slot_out,
                      double[::1] signs):
    """Contract (16, npts) component arrays: for each lattice point, combine
    all basis pairs through the sign table, accumulating in registers."""
    cdef Py_ssize_t nslots = a.shape[0]
    cdef Py_ssize_t npts = a.shape[1]
    cdef Py_ssize_t nterms = signs.shape[0]
    cdef Py_ssize_t t, p, s
    cdef long ca, cb, co
    cdef double sg
    cdef double ar[16]
    cdef double ai[16]
    cdef double br[16]
    cdef double bi[16]
    cdef double outr[16]
    cdef double outi[16]
    out_arr = np.empty((nslots, npts), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    for p in range(npts):
        for s in range(nslots):
            ar[s] = a[s, p].real
            ai[s] = a[s, p].imag
            br[s] = b[s, p].real
            bi[s] = b[s, p].imag
            outr[s] = 0.0
            outi[s] = 0.0
        for t in range(nterms):
            ca = slot_a[t]
            cb = slot_b[t]
            co = slot_out[t]
            sg = signs[t]
            outr[co] += sg * (ar[ca] * br[cb] - ai[ca] * bi[cb])
            outi[co] += sg * (ar[ca] * bi[cb] + ai[ca] * br[cb])
        for s in range(nslots):
            out[s, p] = outr[s] + 1j * outi[s]
    return out_arr
