"""Pure numpy/Python fallback for the hot table kernels.

Mirrors the API of the compiled `_native` extension; selected at import by
`divalg._kernels` when the extension is unavailable (or when
DIVALG_PURE_KERNELS=1 is set).
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"


def is_latin(table: np.ndarray) -> bool:
    n = table.shape[0]
    want = np.arange(n)
    rows = np.sort(table, axis=1)
    cols = np.sort(table, axis=0)
    return bool((rows == want).all() and (cols == want.reshape(-1, 1)).all())


def assoc_exhaustive(table: np.ndarray) -> bool:
    n = table.shape[0]
    for a in range(n):
        # (a*b)*c vs a*(b*c), vectorized over (b, c)
        left = table[table[a, :], :]
        right = table[a][table]
        if not (left == right).all():
            return False
    return True


def assoc_triples(table: np.ndarray, triples: np.ndarray) -> bool:
    a, b, c = triples[:, 0], triples[:, 1], triples[:, 2]
    return bool((table[table[a, b], c] == table[a, table[b, c]]).all())


def center_indices(table: np.ndarray) -> np.ndarray:
    return np.where((table == table.T).all(axis=1))[0].astype(np.int64)


def element_orders(table: np.ndarray, identity: int) -> np.ndarray:
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.int64)
    cur = np.arange(n)
    k = 1
    alive = cur != identity
    orders[~alive] = 1
    while alive.any():
        k += 1
        cur = table[cur, np.arange(n)]
        done = alive & (cur == identity)
        orders[done] = k
        alive &= ~done
        if k > n:
            raise ValueError("order computation ran past the group order")
    return orders


def span_indices(table: np.ndarray, gens, identity: int) -> np.ndarray:
    members = {int(identity)}
    members.update(int(g) for g in gens)
    while True:
        cur = sorted(members)
        idx = np.array(cur, dtype=np.int64)
        prods = np.unique(table[np.ix_(idx, idx)])
        new = set(int(p) for p in prods) - members
        if not new:
            return np.array(cur, dtype=np.int64)
        members |= new


def is_normal(table: np.ndarray, sub: np.ndarray, inv: np.ndarray) -> bool:
    n = table.shape[0]
    mask = np.zeros(n, dtype=bool)
    mask[sub] = True
    conj = table[table[:, sub], inv[:, None]]
    return bool(mask[conj].all())


def max_isotropic(masks, sizes, bad) -> int:
    """Index of the largest subgroup (given sorted by size descending, as
    bitmasks) on which no bad pair occurs; -1 if none."""
    for idx, m in enumerate(masks):
        m = int(m)
        rest = m
        ok = True
        while rest:
            v = (rest & -rest).bit_length() - 1
            if int(bad[v]) & m:
                ok = False
                break
            rest &= rest - 1
        if ok:
            return idx
    return -1
