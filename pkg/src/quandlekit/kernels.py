"""Hot inner loops over operation tables.

Everything here scans dense integer tables: self-distributivity checks,
the reductivity identities (exhaustive tuple scans of size n^(c+1)), and
the welded-braid action on colour tuples Q^n.  Each kernel has a numba
@njit implementation and a vectorized pure-numpy fallback; set
QUANDLEKIT_NO_NUMBA=1 to force the numpy path.
"""

import os

import numpy as np

_DISABLED = os.environ.get("QUANDLEKIT_NO_NUMBA", "").lower() in ("1", "true", "yes")

if not _DISABLED:
    try:
        from numba import njit

        HAS_NUMBA = True
    except ImportError:  # pragma: no cover - depends on environment
        HAS_NUMBA = False
else:
    HAS_NUMBA = False


def backend_name():
    return "numba" if HAS_NUMBA else "numpy"


def _decode(index, base, length):
    digits = []
    for _ in range(length):
        digits.append(index % base)
        index //= base
    return tuple(digits)


# -- self-distributivity ----------------------------------------------------

def _distributive_witness_numpy(table):
    n = table.shape[0]
    if n == 0:
        return None
    lhs = table[:, table]
    rhs = table[table[:, :, None], table[:, None, :]]
    bad = lhs != rhs
    if not bad.any():
        return None
    flat = int(np.argmax(bad))
    x, rem = divmod(flat, n * n)
    y, z = divmod(rem, n)
    return (x, y, z)


if HAS_NUMBA:

    @njit(cache=True)
    def _distributive_witness_jit(table):
        n = table.shape[0]
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if table[x, table[y, z]] != table[table[x, y], table[x, z]]:
                        return x * n * n + y * n + z
        return -1

    def distributive_witness(table):
        n = table.shape[0]
        if n == 0:
            return None
        flat = _distributive_witness_jit(table)
        if flat < 0:
            return None
        x, rem = divmod(flat, n * n)
        y, z = divmod(rem, n)
        return (x, y, z)

else:
    distributive_witness = _distributive_witness_numpy


# -- reductivity identities -------------------------------------------------

def _reductive_witness_numpy(table, c):
    n = table.shape[0]
    if n == 0:
        return None
    grids = np.indices((n,) * (c + 1)).reshape(c + 1, -1)
    a = grids[0]
    for i in range(1, c + 1):
        a = table[a, grids[i]]
    b = grids[1]
    for i in range(2, c + 1):
        b = table[b, grids[i]]
    bad = a != b
    if not bad.any():
        return None
    flat = int(np.argmax(bad))
    # np.indices flattens with the first axis slowest
    rev = _decode(flat, n, c + 1)
    return tuple(reversed(rev))


if HAS_NUMBA:

    @njit(cache=True)
    def _reductive_witness_jit(table, c):
        n = table.shape[0]
        total = 1
        for _ in range(c + 1):
            total *= n
        q = np.empty(c + 1, np.int64)
        for t in range(total):
            tt = t
            for i in range(c + 1):
                q[i] = tt % n
                tt //= n
            a = q[0]
            for i in range(1, c + 1):
                a = table[a, q[i]]
            b = q[1]
            for i in range(2, c + 1):
                b = table[b, q[i]]
            if a != b:
                return t
        return -1

    def reductive_witness(table, c):
        n = table.shape[0]
        if n == 0:
            return None
        flat = _reductive_witness_jit(table, c)
        if flat < 0:
            return None
        return _decode(flat, n, c + 1)

else:
    reductive_witness = _reductive_witness_numpy


def _weak_witness_numpy(table, c):
    n = table.shape[0]
    if n == 0:
        return None
    grids = np.indices((n,) * (c + 1)).reshape(c + 1, -1)
    a = grids[0]
    for i in range(1, c + 1):
        a = table[a, grids[i]]
    ref = a.reshape((n,) + (n,) * c)
    bad = ref != ref[0:1]
    if not bad.any():
        return None
    flat = int(np.argmax(bad))
    rev = _decode(flat, n, c + 1)
    x1, rest = rev[-1], tuple(reversed(rev[:-1]))
    return (x1, 0) + rest


if HAS_NUMBA:

    @njit(cache=True)
    def _weak_witness_jit(table, c):
        n = table.shape[0]
        total = 1
        for _ in range(c + 1):
            total *= n
        q = np.empty(c + 1, np.int64)
        for t in range(total):
            tt = t
            for i in range(c + 1):
                q[i] = tt % n
                tt //= n
            a = q[0]
            b = 0
            for i in range(1, c + 1):
                a = table[a, q[i]]
                b = table[b, q[i]]
            if a != b:
                return t
        return -1

    def weak_witness(table, c):
        n = table.shape[0]
        if n == 0:
            return None
        flat = _weak_witness_jit(table, c)
        if flat < 0:
            return None
        q = _decode(flat, n, c + 1)
        return (q[0], 0) + q[1:]

else:
    weak_witness = _weak_witness_numpy


# -- welded-braid action on colour tuples -----------------------------------
#
# A braid is handed over as (sigma, letters, offsets): strand i reads its
# word as letters[offsets[i]:offsets[i+1]], a letter +j meaning "apply the
# row of the colour on strand j" and -j its inverse.  The braid acts
# trivially iff every colour tuple is fixed.

def _braid_fixes_all_numpy(rows, rows_inv, sigma, letters, offsets, nstr):
    m = rows.shape[0]
    grids = np.indices((m,) * nstr).reshape(nstr, -1)
    for i in range(nstr):
        p = grids[sigma[i]]
        for k in range(offsets[i + 1] - 1, offsets[i] - 1, -1):
            l = letters[k]
            if l > 0:
                p = rows[grids[l - 1], p]
            else:
                p = rows_inv[grids[-l - 1], p]
        bad = p != grids[i]
        if bad.any():
            flat = int(np.argmax(bad))
            rev = _decode(flat, m, nstr)
            return tuple(reversed(rev))
    return None


if HAS_NUMBA:

    @njit(cache=True)
    def _braid_fixes_all_jit(rows, rows_inv, sigma, letters, offsets, nstr):
        m = rows.shape[0]
        total = 1
        for _ in range(nstr):
            total *= m
        q = np.empty(nstr, np.int64)
        for t in range(total):
            tt = t
            for i in range(nstr):
                q[i] = tt % m
                tt //= m
            for i in range(nstr):
                p = q[sigma[i]]
                for k in range(offsets[i + 1] - 1, offsets[i] - 1, -1):
                    l = letters[k]
                    if l > 0:
                        p = rows[q[l - 1], p]
                    else:
                        p = rows_inv[q[-l - 1], p]
                if p != q[i]:
                    return t
        return -1

    def braid_fixes_all(rows, rows_inv, sigma, letters, offsets, nstr):
        m = rows.shape[0]
        if m == 0:
            return None
        flat = _braid_fixes_all_jit(rows, rows_inv, sigma, letters, offsets, nstr)
        if flat < 0:
            return None
        return _decode(flat, m, nstr)

else:

    def braid_fixes_all(rows, rows_inv, sigma, letters, offsets, nstr):
        if rows.shape[0] == 0:
            return None
        return _braid_fixes_all_numpy(rows, rows_inv, sigma, letters, offsets, nstr)


def pack_words(words):
    """Flatten per-strand letter words into (letters, offsets) arrays."""
    offsets = np.zeros(len(words) + 1, np.int64)
    for i, w in enumerate(words):
        offsets[i + 1] = offsets[i] + len(w)
    letters = np.empty(offsets[-1], np.int64)
    pos = 0
    for w in words:
        for l in w:
            letters[pos] = l
            pos += 1
    return letters, offsets
