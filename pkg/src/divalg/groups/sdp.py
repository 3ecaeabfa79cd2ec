"""Balanced semidirect products Z/n x| Z/p and the shape-embedding search.

A semidirect product of two cyclic groups is *balanced* when its center is
trivial.  For an odd prime p one exists iff every prime divisor of n is
congruent to 1 mod p; realizations correspond to multipliers r of order p
in (Z/n)* with gcd(r - 1, n) = 1.  (Distinct power-classes of multipliers
can give non-isomorphic groups once n has two prime factors; the suite
checks this honestly rather than assuming uniqueness.)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import gcd
from typing import Optional

import numpy as np

from .. import _kernels as kernels
from ..errors import InputError, NoBalancedProduct, SearchBoundExceeded
from .tables import FiniteGroupTable


def _is_odd_prime(p: int) -> bool:
    from sympy import isprime

    return p > 2 and isprime(p)


def _factor(n: int) -> dict[int, int]:
    from sympy import factorint

    return {int(p): int(e) for p, e in factorint(n).items()}


@dataclass(frozen=True)
class BalancedSdpDescriptor:
    n: int
    p: int
    r: int


def balanced_exists(n: int, p: int) -> bool:
    """Prime-congruence criterion.  n = 1 is vacuously true (the degenerate
    product is read as Z/p, used only through the n = 1 shape convention)."""
    if n < 1:
        raise InputError("n must be positive")
    if not _is_odd_prime(p):
        raise InputError(f"p = {p} must be an odd prime")
    return all(q % p == 1 for q in _factor(n))


def action_multipliers(n: int, p: int) -> list[int]:
    """Every r defining an action of Z/p on Z/n: r**p = 1 (mod n)."""
    if n == 1:
        return [0]
    return [r for r in range(1, n) if gcd(r, n) == 1 and pow(r, p, n) == 1]


def is_balanced_multiplier(n: int, p: int, r: int) -> bool:
    if n == 1:
        return False
    if gcd(r, n) != 1 or pow(r, p, n) != 1:
        return False
    if r % n == 1:
        return False
    return gcd(r - 1, n) == 1


def balanced_multipliers(n: int, p: int) -> list[int]:
    return [r for r in action_multipliers(n, p) if is_balanced_multiplier(n, p, r)]


def multiplier_classes(n: int, p: int) -> list[list[int]]:
    """Balanced multipliers grouped by power-orbit {r, r^2, ..., r^(p-1)};
    orbits are exactly the isomorphism classes of the actions."""
    left = set(balanced_multipliers(n, p))
    classes = []
    while left:
        r = min(left)
        orbit = sorted({pow(r, j, n) for j in range(1, p)})
        classes.append(orbit)
        left -= set(orbit)
    return classes


def sdp_table(n: int, p: int, r: int) -> np.ndarray:
    """Multiplication table of Z/n x|_r Z/p with index a*p + t."""
    size = n * p
    powr = np.array([pow(r, t, n) if n > 1 else 0 for t in range(p)], dtype=np.int64)
    idx = np.arange(size)
    a, t = idx // p, idx % p
    # (a, t) * (b, u) = (a + r^t b, t + u)
    res_a = (a[:, None] + powr[t][:, None] * a[None, :]) % n
    res_t = (t[:, None] + t[None, :]) % p
    return res_a * p + res_t


def shape_table(n: int, p: int, r: int) -> np.ndarray:
    """(Z/n x|_r Z/p) x Z/p with index x*p + s; for n = 1 this is the
    Z/p x Z/p convention."""
    base = sdp_table(n, p, r)
    m = base.shape[0]
    idx = np.arange(m * p)
    x, s = idx // p, idx % p
    res_x = base[x[:, None], x[None, :]]
    res_s = (s[:, None] + s[None, :]) % p
    return res_x * p + res_s


def balanced_build(n: int, p: int) -> tuple[BalancedSdpDescriptor, FiniteGroupTable]:
    """Smallest balanced multiplier plus the explicit table; the center of
    the result is verified trivial."""
    if n <= 1:
        raise InputError("balanced products are built for n > 1 only")
    rs = balanced_multipliers(n, p)
    if not rs:
        raise NoBalancedProduct(f"no trivial-center Z/{n} x| Z/{p}")
    r = rs[0]
    table = FiniteGroupTable(sdp_table(n, p, r))
    if len(table.center()) != 1:
        raise NoBalancedProduct(f"center of r = {r} is not trivial; criterion bug")
    return BalancedSdpDescriptor(n, p, r), table


def center_is_trivial(table: np.ndarray) -> bool:
    return len(kernels.center_indices(table)) == 1


def sdp_isomorphic(n: int, p: int, r1: int, r2: int) -> bool:
    """Complete generator-matching isomorphism test between two semidirect
    products of Z/n by Z/p.  Any isomorphism sends the canonical generators
    to an (order-n, order-p) pair satisfying the r1-conjugation relation."""
    t2 = sdp_table(n, p, r2)
    g2 = FiniteGroupTable(t2, validate=False)
    orders = g2.element_orders()
    xs = np.where(orders == n)[0]
    ys = np.where(orders == p)[0]
    inv = g2.inv
    for x in xs:
        px = np.empty(n, dtype=np.int64)
        px[0] = g2.identity
        for a2 in range(1, n):
            px[a2] = t2[px[a2 - 1], x]
        target = px[r1 % n]
        conj = t2[t2[ys, x], inv[ys]]
        for y in ys[conj == target]:
            py = np.empty(p, dtype=np.int64)
            py[0] = g2.identity
            for b2 in range(1, p):
                py[b2] = t2[py[b2 - 1], y]
            phi = t2[np.ix_(px, py)].reshape(-1)
            if len(np.unique(phi)) != n * p:
                continue
            t1 = sdp_table(n, p, r1)
            if (phi[t1] == t2[phi[:, None], phi[None, :]]).all():
                return True
    return False


# -- monomorphism search ---------------------------------------------------------


def minimal_generators(g: FiniteGroupTable) -> list[int]:
    gens: list[int] = []
    span = {g.identity}
    by_order = sorted(range(g.order), key=lambda e: (-int(g.element_orders()[e]), e))
    for e in by_order:
        if e not in span:
            gens.append(e)
            span = set(g.span(gens))
            if len(span) == g.order:
                break
    return gens


def find_monomorphism(g: FiniteGroupTable, h: FiniteGroupTable) -> Optional[np.ndarray]:
    """An injective homomorphism g -> h as an index array, or None.
    Exhaustive over generator images of matching element orders; every
    candidate is verified as a full table homomorphism before acceptance."""
    if h.order % g.order:
        return None
    gens = minimal_generators(g) if g.order > 1 else []
    if not gens:
        phi = np.full(g.order, h.identity, dtype=np.int64)
        return phi
    g_orders = g.element_orders()
    h_orders = h.element_orders()
    cands = [np.where(h_orders == int(g_orders[x]))[0] for x in gens]
    if any(len(c) == 0 for c in cands):
        return None
    # BFS word decomposition of g over the generators
    parent = np.full(g.order, -1, dtype=np.int64)
    via = np.full(g.order, -1, dtype=np.int64)
    order_seen = [g.identity]
    seen = {g.identity}
    qi = 0
    while qi < len(order_seen):
        cur = order_seen[qi]
        qi += 1
        for gi, x in enumerate(gens):
            nxt = g.mul(cur, x)
            if nxt not in seen:
                seen.add(nxt)
                parent[nxt] = cur
                via[nxt] = gi
                order_seen.append(nxt)
    if len(seen) != g.order:
        raise InputError("generators do not generate; search bug")
    for images in iproduct(*cands):
        phi = np.full(g.order, -1, dtype=np.int64)
        phi[g.identity] = h.identity
        ok = True
        for e in order_seen[1:]:
            phi[e] = h.mul(int(phi[parent[e]]), int(images[via[e]]))
        if len(np.unique(phi)) != g.order:
            continue
        if (phi[g.table] == h.table[phi[:, None], phi[None, :]]).all():
            return phi
    return None


def embeds_theorem_shape(g: FiniteGroupTable, p: int,
                         n_bound: Optional[int] = None) -> tuple[int, int, np.ndarray]:
    """Smallest n (with a balanced action, or the n = 1 convention) such
    that g embeds into (Z/n x| Z/p) x Z/p; returns (n, r, images).

    Exhausting the bound raises SearchBoundExceeded -- the search never
    claims definite absence.
    """
    if not _is_odd_prime(p):
        raise InputError(f"p = {p} must be an odd prime")
    if g.order > 2000:
        raise InputError("embedding search restricted to order <= 2000")
    if n_bound is None:
        n_bound = 10 * g.order
    orders = [int(o) for o in np.unique(g.element_orders())]
    for n in range(1, n_bound + 1):
        if (n * p * p) % g.order:        # Lagrange: |G| divides n * p^2
            continue
        if n > 1 and not balanced_exists(n, p):
            continue
        # element orders in the shape are d * p^e with d | n, e <= 1
        compatible = True
        for o in orders:
            d = o
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            if e > 1 or n % d:
                compatible = False
                break
        if not compatible:
            continue
        if n == 1:
            classes = [[0]]
        else:
            classes = multiplier_classes(n, p)
            if not classes:
                continue
        for orbit in classes:
            r = orbit[0]
            h = FiniteGroupTable(shape_table(n, p, r), validate=False)
            phi = find_monomorphism(g, h)
            if phi is not None:
                return n, r, phi
    raise SearchBoundExceeded(
        f"no embedding into (Z/n x| Z/{p}) x Z/{p} for n <= {n_bound}")
