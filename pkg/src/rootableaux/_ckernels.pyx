# cython: boundscheck=False, wraparound=False
"""Compiled group-scan kernels (see _pykernels for the reference versions)."""
from array import array


def inversion_masks(const long long[::1] perms, Py_ssize_t n, const long long[::1] roots):
    cdef Py_ssize_t m = roots.shape[0] // 4
    cdef Py_ssize_t count = perms.shape[0] // n if n else 0
    cdef Py_ssize_t i, k, base
    cdef long long p, a, q, b, wp, wq, awp, ap, aq
    cdef unsigned long long mask
    out = array("Q", bytes(8 * count))
    cdef unsigned long long[::1] res = out
    for i in range(count):
        base = i * n
        mask = 0
        for k in range(m):
            p = roots[4 * k]
            a = roots[4 * k + 1]
            q = roots[4 * k + 2]
            b = roots[4 * k + 3]
            wp = perms[base + p]
            if q < 0:
                if a * wp < 0:
                    mask |= (<unsigned long long>1) << k
            else:
                wq = perms[base + q]
                ap = wp if wp > 0 else -wp
                aq = wq if wq > 0 else -wq
                if ap > aq:
                    if a * wp < 0:
                        mask |= (<unsigned long long>1) << k
                elif b * wq < 0:
                    mask |= (<unsigned long long>1) << k
        res[i] = mask
    return out


def select(const unsigned long long[::1] masks, unsigned long long zmask,
           unsigned long long pmask, unsigned long long jmask):
    cdef Py_ssize_t i
    cdef unsigned long long m
    cdef list hits = []
    for i in range(masks.shape[0]):
        m = masks[i]
        if (m & zmask) == 0 and (m & pmask) == jmask:
            hits.append(i)
    return hits


def group_by_label(const unsigned long long[::1] masks, unsigned long long zmask,
                   unsigned long long pmask):
    cdef Py_ssize_t i
    cdef unsigned long long m
    cdef dict out = {}
    for i in range(masks.shape[0]):
        m = masks[i]
        if (m & zmask) == 0:
            key = m & pmask
            bucket = out.get(key)
            if bucket is None:
                out[key] = [i]
            else:
                (<list>bucket).append(i)
    return out
