"""Pure-Python versions of the group-scan kernels.

Same signatures as the compiled module; used when the extension is not
built or when ROOTABLEAUX_PURE=1 is set.
"""
from __future__ import annotations

from array import array


def inversion_masks(perms: array, n: int, roots: array) -> array:
    """Bitmask of inverted positive roots for every signed permutation.

    ``perms`` holds the one-line notations back to back (``n`` entries each).
    ``roots`` holds ``(p, a, q, b)`` per positive root a*e_p + b*e_q, with
    ``q = -1`` for roots supported on one coordinate.
    """
    spec = [
        (roots[k], roots[k + 1], roots[k + 2], roots[k + 3], 1 << (k // 4))
        for k in range(0, len(roots), 4)
    ]
    out = array("Q")
    for start in range(0, len(perms), n):
        w = perms[start:start + n]
        mask = 0
        for p, a, q, b, bit in spec:
            wp = w[p]
            if q < 0:
                neg = a * wp < 0
            else:
                wq = w[q]
                # the image root's last nonzero coordinate decides its sign
                if abs(wp) > abs(wq):
                    neg = a * wp < 0
                else:
                    neg = b * wq < 0
            if neg:
                mask |= bit
        out.append(mask)
    return out


def select(masks: array, zmask: int, pmask: int, jmask: int) -> list[int]:
    """Indices whose mask misses ``zmask`` and meets ``pmask`` in exactly ``jmask``."""
    return [
        i for i, m in enumerate(masks)
        if not m & zmask and m & pmask == jmask
    ]


def group_by_label(masks: array, zmask: int, pmask: int) -> dict[int, list[int]]:
    """Bucket the indices avoiding ``zmask`` by their intersection with ``pmask``."""
    out: dict[int, list[int]] = {}
    for i, m in enumerate(masks):
        if not m & zmask:
            out.setdefault(m & pmask, []).append(i)
    return out
