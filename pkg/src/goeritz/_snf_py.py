"""Pure-Python diagonalization kernel (reference and fallback for the native one)."""


def snf_diagonal(rows, nrows, ncols):
    """Diagonalize an integer matrix by unimodular row and column moves.

    ``rows`` is consumed (mutated). Returns the absolute diagonal of length
    ``min(nrows, ncols)``; it is *not* yet a divisibility chain.
    """
    a = rows
    n = min(nrows, ncols)
    diag = [0] * n
    for t in range(n):
        # smallest non-zero entry of the trailing block becomes the pivot
        best = 0
        bi = bj = -1
        for i in range(t, nrows):
            r = a[i]
            for j in range(t, ncols):
                x = r[j]
                if x:
                    ax = x if x > 0 else -x
                    if best == 0 or ax < best:
                        best, bi, bj = ax, i, j
                        if ax == 1:
                            break
            if best == 1:
                break
        if best == 0:
            break
        _move_pivot(a, t, bi, bj, nrows)

        while True:
            p = a[t][t]
            row_t = a[t]
            # clear column t
            small = 0
            si = -1
            for i in range(t + 1, nrows):
                r = a[i]
                x = r[t]
                if x:
                    f = x // p
                    if f:
                        for j in range(t, ncols):
                            y = row_t[j]
                            if y:
                                r[j] -= f * y
                    x = r[t]
                    if x:
                        ax = x if x > 0 else -x
                        if small == 0 or ax < small:
                            small, si = ax, i
            if small:
                a[t], a[si] = a[si], a[t]
                continue
            # clear row t; column t is already zero below the pivot, so the
            # column moves only touch row t
            sj = -1
            for j in range(t + 1, ncols):
                x = row_t[j]
                if x:
                    x = row_t[j] = x % p
                    if x:
                        ax = x if x > 0 else -x
                        if small == 0 or ax < small:
                            small, sj = ax, j
            if small:
                for r in a:
                    r[t], r[sj] = r[sj], r[t]
                continue
            break
        p = a[t][t]
        diag[t] = p if p > 0 else -p
    return diag


def _move_pivot(a, t, bi, bj, nrows):
    if bi != t:
        a[t], a[bi] = a[bi], a[t]
    if bj != t:
        for i in range(nrows):
            r = a[i]
            r[t], r[bj] = r[bj], r[t]
