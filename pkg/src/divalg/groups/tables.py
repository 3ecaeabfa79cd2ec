"""Finite groups as explicit multiplication tables.

Tables are numpy int arrays of element indices.  Construction validates the
Latin-square property, the identity, and associativity -- exhaustively up to
order 256, by 10**4 seeded random triples above that.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

import numpy as np

from .. import _kernels as kernels
from ..errors import InputError, NotNormal

ASSOC_EXHAUSTIVE_LIMIT = 256
ASSOC_SAMPLES = 10_000
VALIDATION_SEED = 0x5EED


class FiniteGroupTable:
    def __init__(self, table, identity: Optional[int] = None, validate: bool = True):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise InputError("table must be square")
        n = t.shape[0]
        if n == 0:
            raise InputError("empty table")
        if t.min() < 0 or t.max() >= n:
            raise InputError("table entries out of range")
        self.table = t
        self.order = n
        if identity is None:
            identity = self._find_identity()
        self.identity = int(identity)
        if validate:
            self._validate()
        inv = np.empty(n, dtype=np.int64)
        rows, cols = np.where(t == self.identity)
        inv[rows] = cols
        self.inv = inv
        self._orders: Optional[np.ndarray] = None

    def _find_identity(self) -> int:
        n = self.order
        idx = np.arange(n)
        for e in range(n):
            if (self.table[e] == idx).all() and (self.table[:, e] == idx).all():
                return e
        raise InputError("table has no identity element")

    def _validate(self):
        n = self.order
        if not kernels.is_latin(self.table):
            raise InputError("table is not a Latin square")
        idx = np.arange(n)
        e = self.identity
        if not ((self.table[e] == idx).all() and (self.table[:, e] == idx).all()):
            raise InputError("identity row/column does not act trivially")
        if n <= ASSOC_EXHAUSTIVE_LIMIT:
            ok = kernels.assoc_exhaustive(self.table)
        else:
            rng = random.Random(VALIDATION_SEED)
            triples = np.array(
                [[rng.randrange(n), rng.randrange(n), rng.randrange(n)]
                 for _ in range(ASSOC_SAMPLES)], dtype=np.int64)
            ok = kernels.assoc_triples(self.table, triples)
        if not ok:
            raise InputError("table is not associative")

    # -- basic queries ---------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, g: int, m: int) -> int:
        if m < 0:
            return self.power(int(self.inv[g]), -m)
        acc, base = self.identity, g
        while m:
            if m & 1:
                acc = int(self.table[acc, base])
            base = int(self.table[base, base])
            m >>= 1
        return acc

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            self._orders = kernels.element_orders(self.table, self.identity)
        return self._orders

    def order_histogram(self) -> dict[int, int]:
        vals, counts = np.unique(self.element_orders(), return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def span(self, gens: Sequence[int]) -> list[int]:
        return [int(g) for g in kernels.span_indices(self.table, list(gens), self.identity)]

    def center(self) -> list[int]:
        return [int(g) for g in kernels.center_indices(self.table)]

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def is_normal(self, sub: Sequence[int]) -> bool:
        return bool(kernels.is_normal(self.table, np.asarray(sorted(sub), dtype=np.int64), self.inv))

    def conjugate(self, g: int, x: int) -> int:
        return int(self.table[self.table[g, x], self.inv[g]])

    def normal_closure(self, g: int) -> list[int]:
        gens = {int(self.table[self.table[h, g], self.inv[h]]) for h in range(self.order)}
        return self.span(sorted(gens))

    def is_simple(self) -> bool:
        """No proper nontrivial normal subgroup; exhaustive over normal
        closures of single elements."""
        if self.order == 1:
            return False
        for g in range(self.order):
            if g == self.identity:
                continue
            if len(self.normal_closure(g)) != self.order:
                return False
        return True

    def subgroup_table(self, indices: Sequence[int]) -> tuple["FiniteGroupTable", list[int]]:
        """Table of a subgroup in local indices; returns (table, members)."""
        members = sorted(int(i) for i in indices)
        pos = {g: i for i, g in enumerate(members)}
        sub = np.array([[pos[int(self.table[a, b])] for b in members] for a in members],
                       dtype=np.int64)
        return FiniteGroupTable(sub, identity=pos[self.identity], validate=False), members

    def quotient_by(self, normal: Sequence[int]) -> tuple["FiniteGroupTable", np.ndarray]:
        """Quotient table on cosets plus the element -> coset map."""
        members = sorted(int(i) for i in normal)
        if not self.is_normal(members):
            raise NotNormal("subgroup is not normal")
        n = self.order
        coset_of = -np.ones(n, dtype=np.int64)
        reps = []
        for g in range(n):
            if coset_of[g] >= 0:
                continue
            cid = len(reps)
            reps.append(g)
            for h in members:
                coset_of[self.table[g, h]] = cid
        m = len(reps)
        qt = np.array([[coset_of[self.table[reps[i], reps[j]]] for j in range(m)]
                       for i in range(m)], dtype=np.int64)
        return FiniteGroupTable(qt, identity=int(coset_of[self.identity]), validate=False), coset_of

    def as_dict(self) -> dict:
        return {"order": self.order, "table": self.table.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteGroupTable":
        table = data["table"]
        if data.get("order") is not None and len(table) != data["order"]:
            raise InputError("declared order does not match the table")
        return cls(table)

    def __repr__(self):
        return f"FiniteGroupTable(order={self.order})"


# -- structural recognition ------------------------------------------------------


def _is_prime_power(n: int):
    for p in range(2, n + 1):
        if p * p > n:
            break
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else None
    return (n, 1) if n > 1 else None


def recognize(g: FiniteGroupTable):
    """Structural tag by presentation matching.

    Returns one of ("cyclic", n), ("generalized_quaternion", order),
    ("dihedral", order), ("elementary_abelian", p, k), ("other",).

    Dihedral and quaternion tags carry the group ORDER.  The Klein group is
    reported as the degenerate dihedral of order 4 (index-2 split with the
    inverting action), which is the convention the quaternion-quotient
    checks rely on.
    """
    n = g.order
    orders = g.element_orders()
    if n == 1 or (orders == n).any():
        return ("cyclic", n)
    # generalized quaternion: x of order n/2, y with y^2 = x^{n/4}, yxy^-1 = x^-1
    if n >= 8 and n % 4 == 0 and _is_prime_power(n) == (2, n.bit_length() - 1):
        tag = _match_quaternion(g, orders)
        if tag:
            return tag
    if n % 2 == 0 and n >= 4:
        tag = _match_dihedral(g, orders)
        if tag:
            return tag
    pp = _is_prime_power(n)
    if pp and g.is_abelian():
        p, k = pp
        non_id = [int(o) for o in orders if o != 1]
        if all(o == p for o in non_id):
            return ("elementary_abelian", p, k)
    return ("other",)


def _match_quaternion(g: FiniteGroupTable, orders):
    n = g.order
    half = n // 2
    for x in range(n):
        if orders[x] != half:
            continue
        sub = set(g.span([x]))
        target = g.power(x, half // 2)
        xinv = int(g.inv[x])
        for y in range(n):
            if y in sub:
                continue
            if g.power(y, 2) != target:
                continue
            if g.mul(g.mul(y, x), int(g.inv[y])) == xinv:
                return ("generalized_quaternion", n)
        return None     # all order-n/2 elements are equivalent here
    return None


def _match_dihedral(g: FiniteGroupTable, orders):
    n = g.order
    half = n // 2
    for x in range(n):
        if orders[x] != half:
            continue
        sub = set(g.span([x]))
        xinv = int(g.inv[x])
        for y in range(n):
            if y in sub:
                continue
            if orders[y] != 2:
                continue
            if g.mul(g.mul(y, x), int(g.inv[y])) == xinv:
                return ("dihedral", n)
    return None


def has_normal_cyclic(g: FiniteGroupTable) -> Optional[list[int]]:
    """A nontrivial normal cyclic subgroup, by exhaustive scan; None if
    there is none (e.g. for a simple nonabelian group)."""
    if g.order <= 1:
        raise InputError("group must be nontrivial")
    seen = set()
    for x in range(g.order):
        if x == g.identity:
            continue
        sub = tuple(g.span([x]))
        if sub in seen:
            continue
        seen.add(sub)
        if g.is_normal(sub):
            return list(sub)
    return None


def all_subgroups(g: FiniteGroupTable, limit: int = 130) -> list[frozenset]:
    """Every subgroup, as frozensets of indices.  Join-closure over cyclic
    subgroups; intended for small groups only."""
    if g.order > limit:
        raise InputError(f"subgroup enumeration capped at order {limit}")
    cyclics = set()
    for x in range(g.order):
        cyclics.add(frozenset(g.span([x])))
    subs = set(cyclics)
    queue = list(cyclics)
    while queue:
        s = queue.pop()
        for c in cyclics:
            if c <= s:
                continue
            joined = frozenset(g.span(sorted(s | c)))
            if joined not in subs:
                subs.add(joined)
                queue.append(joined)
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def abelian_invariants(g: FiniteGroupTable) -> tuple[tuple[int, ...], list[int], dict]:
    """Invariant factors (ascending divisibility), a basis realizing them,
    and the full coordinate map element -> exponent tuple."""
    if not g.is_abelian():
        raise InputError("group is not abelian")
    if g.order == 1:
        return (), [], {g.identity: ()}

    def split(sub_indices):
        # returns list of basis elements (global indices), largest order first
        table, members = g.subgroup_table(sub_indices)
        if table.order == 1:
            return []
        orders = table.element_orders()
        m = int(orders.max())
        x_local = int(np.nonzero(orders == m)[0][0])
        x_global = members[x_local]
        if m == table.order:
            return [x_global]
        xsub = frozenset(table.span([x_local]))
        want = table.order // m
        for cand in all_subgroups(table):
            if len(cand) != want:
                continue
            if len(xsub & cand) != 1:
                continue
            if len(table.span(sorted(xsub | cand))) == table.order:
                rest = split([members[i] for i in sorted(cand)])
                return [x_global] + rest
        raise InputError("no complement found; group is not abelian?")

    basis_desc = split(list(range(g.order)))
    basis = list(reversed(basis_desc))                  # ascending orders
    factors = tuple(int(g.element_orders()[b]) for b in basis)
    coords = {}
    from itertools import product as iproduct

    for tup in iproduct(*(range(d) for d in factors)):
        e = g.identity
        for b, t in zip(basis, tup):
            e = g.mul(e, g.power(b, t))
        coords[e] = tup
    if len(coords) != g.order:
        raise InputError("basis does not span; group is not abelian?")
    return factors, basis, coords
