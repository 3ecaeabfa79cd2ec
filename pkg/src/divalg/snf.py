"""Smith normal form and integer-lattice helpers.

All matrices are lists of lists of Python ints (arbitrary precision).
`smith_normal_form` returns (D, U, V) with U @ M @ V = D, U and V
unimodular, and the diagonal of D satisfying d1 | d2 | ... .
"""

from __future__ import annotations

from math import gcd


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _matmul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            f = ai[k]
            if f:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    oi[j] += f * bk[j]
    return out


def smith_normal_form(m):
    """Return (D, U, V) with U*M*V = D in Smith normal form."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d = [list(r) for r in m]
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def row_op(dst, src, f):
        # row dst -= f * row src
        d[dst] = [a - f * b for a, b in zip(d[dst], d[src])]
        u[dst] = [a - f * b for a, b in zip(u[dst], u[src])]

    def col_op(dst, src, f):
        for r in d:
            r[dst] -= f * r[src]
        for r in v:
            r[dst] -= f * r[src]

    t = 0
    while t < min(rows, cols):
        # find a nonzero pivot in the remaining block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0:
                    if piv is None or abs(d[i][j]) < abs(d[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    row_op(i, t, q)
                    if d[i][t]:
                        swap_rows(i, t)
                    dirty = True
            for j in range(t + 1, cols):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    col_op(j, t, q)
                    if d[t][j]:
                        swap_cols(j, t)
                    dirty = True
            if not dirty:
                break
        # pivot must divide the rest of the block
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)      # fold the offending row in and repeat
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


def diagonal(d):
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def kernel_basis(m):
    """Basis (list of int vectors) of {x : M x = 0} over the integers."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return []
    d, _u, v = smith_normal_form(m)
    rank = sum(1 for x in diagonal(d) if x != 0)
    basis = []
    for j in range(rank, cols):
        basis.append([v[i][j] for i in range(cols)])
    return basis


def solve_integer(m, b):
    """One integer solution x of M x = b, or None."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d, u, v = smith_normal_form(m)
    c = [sum(u[i][k] * b[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    diag = diagonal(d)
    for i in range(rows):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di:
                return None
            if i < cols:
                y[i] = c[i] // di
    return [sum(v[i][k] * y[k] for k in range(cols)) for i in range(cols)]


def xgcd(a, b):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def solve_gcd_combination(coeffs, modulus, target):
    """Find integers t_i with sum(coeffs[i] * t_i) = target (mod modulus),
    or None.  Iterated extended gcd with bookkeeping."""
    acc = modulus
    acc_weights = [0] * len(coeffs)
    for i, c in enumerate(coeffs):
        g, x, y = xgcd(acc, c)
        acc_weights = [x * w for w in acc_weights]
        acc_weights[i] = y
        acc = g
    if acc == 0:
        return [0] * len(coeffs) if target == 0 else None
    if target % acc:
        return None
    f = target // acc
    return [w * f for w in acc_weights]
