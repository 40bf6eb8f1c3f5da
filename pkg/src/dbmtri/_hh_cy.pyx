# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled Householder tridiagonalization kernels (beta = 1 and 2).

Same contract as the _hh_py reference kernels: k elimination steps in place,
filling a[0..k] and b[0..k-1] with the leading corner of the tridiagonal
form.  All heavy lifting goes through BLAS; the matrix buffer is C
contiguous, handed to the Fortran routines as its transpose, which the
symmetric-pair updates keep correct.
"""

from libc.math cimport fabs, sqrt

from scipy.linalg.cython_blas cimport (
    daxpy, dcopy, ddot, dgemv, dger, dnrm2, dscal,
    zcopy, zdotc, zdscal, zgemv, zgeru, dznrm2,
)

import numpy as np

cdef double EPS_REL = 1e-13


def tridiag_real(double[:, ::1] s, Py_ssize_t k, double[::1] a, double[::1] b):
    """beta=1 kernel; returns the number of zero-norm (recorded) steps."""
    cdef Py_ssize_t n = s.shape[0]
    cdef double[::1] work = np.empty(2 * n)
    cdef double *sp = &s[0, 0]
    cdef double *v = &work[0]
    cdef double *w = &work[n]
    cdef int m, inc1 = 1, incn = <int> n
    cdef Py_ssize_t p
    cdef double normx, unorm2, scal, kappa
    cdef double one = 1.0, zero = 0.0, minus2 = -2.0
    cdef int nzero = 0
    with nogil:
        for p in range(k):
            m = <int> (n - p - 1)
            a[p] = sp[p * n + p]
            normx = dnrm2(&m, sp + (p + 1) * n + p, &incn)
            b[p] = normx
            if normx == 0.0:
                nzero += 1
                continue
            dcopy(&m, sp + (p + 1) * n + p, &incn, v, &inc1)
            unorm2 = 2.0 * normx * (normx - v[0])
            if unorm2 <= (EPS_REL * normx) * (EPS_REL * normx):
                continue
            v[0] -= normx
            scal = 1.0 / sqrt(unorm2)
            dscal(&m, &scal, v, &inc1)
            # w = T v on the trailing block (kept fully symmetric, so the
            # transposed Fortran view is the same matrix)
            dgemv("N", &m, &m, &one, sp + (p + 1) * (n + 1), &incn, v, &inc1, &zero, w, &inc1)
            kappa = -ddot(&m, v, &inc1, w, &inc1)
            daxpy(&m, &kappa, v, &inc1, w, &inc1)
            dger(&m, &m, &minus2, v, &inc1, w, &inc1, sp + (p + 1) * (n + 1), &incn)
            dger(&m, &m, &minus2, w, &inc1, v, &inc1, sp + (p + 1) * (n + 1), &incn)
        a[k] = sp[k * n + k]
    return nzero


def sym_update(double[:, ::1] a, double[::1] z, double decay, double fresh):
    """a <- decay*a + fresh*G for the structurally symmetric Gaussian G.

    z supplies the strict upper triangle in row-major order followed by the
    n diagonal draws (scaled by sqrt(2) here); both triangles are written
    from the same draw.  decay=0, fresh=1 is the stationary fill.
    """
    cdef Py_ssize_t n = a.shape[0], i, j, idx = 0
    cdef double val
    cdef double sqrt2 = sqrt(2.0)
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                val = decay * a[i, j] + fresh * z[idx]
                a[i, j] = val
                a[j, i] = val
                idx += 1
        for i in range(n):
            a[i, i] = decay * a[i, i] + fresh * sqrt2 * z[idx]
            idx += 1


def herm_update(double complex[:, ::1] a, double[::1] z, double decay, double fresh):
    """Complex analogue of sym_update: off-diagonal noise from consecutive
    (re, im) pairs of z, diagonal noise real; mirror conjugated."""
    cdef Py_ssize_t n = a.shape[0], i, j, idx = 0, base
    cdef double complex val, imag_unit = 1j
    cdef double sqrt2 = sqrt(2.0)
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                val = decay * a[i, j] + fresh * (z[2 * idx] + imag_unit * z[2 * idx + 1])
                a[i, j] = val
                a[j, i] = val.conjugate()
                idx += 1
        base = 2 * idx  # diagonal draws follow the interleaved pair block
        for i in range(n):
            a[i, i] = decay * a[i, i].real + fresh * sqrt2 * z[base + i]


def sturm_count(double[::1] diag, double[::1] offdiag, double x, double pivmin):
    """Negative-pivot count of the LDL^T factorization of T - xI."""
    cdef Py_ssize_t n = diag.shape[0], i
    cdef double d, bb
    cdef int count = 0
    with nogil:
        d = diag[0] - x
        if fabs(d) < pivmin:
            d = -pivmin
        if d < 0.0:
            count += 1
        for i in range(1, n):
            bb = offdiag[i - 1]
            d = diag[i] - x - bb * bb / d
            if fabs(d) < pivmin:
                d = -pivmin
            if d < 0.0:
                count += 1
    return count


def tridiag_complex(double complex[:, ::1] s, Py_ssize_t k, double[::1] a, double[::1] b):
    """beta=2 kernel; returns (zero-norm count, max |imag| seen on the diagonal)."""
    cdef Py_ssize_t n = s.shape[0]
    cdef double complex[::1] work = np.empty(4 * n, dtype=complex)
    cdef double complex *sp = &s[0, 0]
    cdef double complex *v = &work[0]
    cdef double complex *w = &work[n]
    cdef double complex *cv = &work[2 * n]
    cdef double complex *cw = &work[3 * n]
    cdef int m, inc1 = 1, incn = <int> n
    cdef Py_ssize_t p, i
    cdef double normx, unorm2, ax0, scal, kappa, im
    cdef double complex alpha, zkap
    cdef double complex one = 1.0, zero = 0.0, minus2 = -2.0
    cdef double max_imag = 0.0
    cdef int nzero = 0
    with nogil:
        for p in range(k):
            a[p] = sp[p * n + p].real
            im = sp[p * n + p].imag
            if im < 0.0:
                im = -im
            if im > max_imag:
                max_imag = im
            m = <int> (n - p - 1)
            normx = dznrm2(&m, sp + (p + 1) * n + p, &incn)
            b[p] = normx
            if normx == 0.0:
                nzero += 1
                continue
            zcopy(&m, sp + (p + 1) * n + p, &incn, v, &inc1)
            ax0 = sqrt(v[0].real * v[0].real + v[0].imag * v[0].imag)
            unorm2 = 2.0 * normx * (normx - ax0)
            if unorm2 <= (EPS_REL * normx) * (EPS_REL * normx):
                continue
            alpha = v[0] / ax0 if ax0 > 0.0 else one
            v[0] -= alpha * normx
            scal = 1.0 / sqrt(unorm2)
            zdscal(&m, &scal, v, &inc1)
            # w = T v: the Fortran view of the C buffer is T transposed, so
            # ask for the transposed product
            zgemv("T", &m, &m, &one, sp + (p + 1) * (n + 1), &incn, v, &inc1, &zero, w, &inc1)
            kappa = zdotc(&m, v, &inc1, w, &inc1).real
            zkap = -kappa
            for i in range(m):
                w[i] = w[i] + zkap * v[i]
                cv[i] = v[i].conjugate()
                cw[i] = w[i].conjugate()
            # T -= 2 v w^H + 2 w v^H; in the transposed Fortran view that is
            # T_F -= 2 conj(v) w^T + 2 conj(w) v^T
            zgeru(&m, &m, &minus2, cv, &inc1, w, &inc1, sp + (p + 1) * (n + 1), &incn)
            zgeru(&m, &m, &minus2, cw, &inc1, v, &inc1, sp + (p + 1) * (n + 1), &incn)
        a[k] = sp[k * n + k].real
        im = sp[k * n + k].imag
        if im < 0.0:
            im = -im
        if im > max_imag:
            max_imag = im
    return nzero, max_imag
