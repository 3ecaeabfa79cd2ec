"""Finite abelian groups with alternating pairings, and the isotropic
subgroup extraction.

Groups are in invariant-factor form d1 | d2 | ... | dr; pairing values are
rationals mod 1 (the exponent q stands for the root of unity e^{2 pi i q},
purely formally -- the extraction never needs a concrete root).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import gcd, lcm

import numpy as np

from .. import _kernels as kernels
from ..errors import InputError, NotMaximalOrder
from ..snf import kernel_basis, smith_normal_form, solve_gcd_combination, solve_integer
from .tables import FiniteGroupTable, all_subgroups

def _mod1(q: Fraction) -> Fraction:
    return q % 1


def element_order_in(factors, v) -> int:
    o = 1
    for d, x in zip(factors, v):
        o = lcm(o, d // gcd(d, x))
    return o


@dataclass(frozen=True)
class AbelianPairedGroup:
    factors: tuple[int, ...]
    pairing: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def make(cls, factors, pairing) -> "AbelianPairedGroup":
        factors = tuple(int(d) for d in factors)
        r = len(factors)
        for i in range(r - 1):
            if factors[i + 1] % factors[i]:
                raise InputError("invariant factors must form a divisibility chain")
        if any(d < 2 for d in factors):
            raise InputError("invariant factors must be >= 2 (drop trivial ones)")
        p = tuple(tuple(_mod1(Fraction(v)) for v in row) for row in pairing)
        if len(p) != r or any(len(row) != r for row in p):
            raise InputError("pairing must be an r x r matrix")
        for i in range(r):
            if p[i][i] != 0:
                raise InputError("pairing must vanish on the diagonal")
            for j in range(r):
                if _mod1(p[i][j] + p[j][i]) != 0:
                    raise InputError("pairing must be alternating")
                if _mod1(factors[i] * p[i][j]) != 0 or _mod1(factors[j] * p[i][j]) != 0:
                    raise InputError("pairing must kill the torsion of each slot")
        return cls(factors, p)

    @property
    def order(self) -> int:
        n = 1
        for d in self.factors:
            n *= d
        return n

    def pair(self, u, v) -> Fraction:
        acc = Fraction(0)
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if vj:
                    acc += ui * vj * self.pairing[i][j]
        return _mod1(acc)

    def elements(self):
        return iproduct(*(range(d) for d in self.factors))

    def element_order(self, v) -> int:
        o = 1
        for d, x in zip(self.factors, v):
            o = lcm(o, d // gcd(d, x))
        return o


# -- subgroup structure over the integers --------------------------------------


def _int_inverse(m):
    """Exact inverse of a unimodular integer matrix."""
    return [[_as_int(v) for v in row] for row in _int_inverse_fraction(m)]


def subgroup_invariants(gens, ambient) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """Invariant factors and realizing basis (tuples mod ambient) of the
    subgroup generated by ``gens`` inside prod Z/ambient[i]."""
    r = len(ambient)
    cols = [list(g) for g in gens] + [[ambient[i] if j == i else 0 for j in range(r)]
                                      for i in range(r)]
    m = [[cols[c][i] for c in range(len(cols))] for i in range(r)]
    d, u, _v = smith_normal_form(m)
    uinv = _int_inverse(u)
    # lattice basis B = Uinv * D restricted to its nonzero columns (rank is r)
    b = [[sum(uinv[i][k] * d[k][j] for k in range(r)) for j in range(r)] for i in range(r)]
    # relations: solve B X = diag(ambient)
    bx_inv = _int_inverse_fraction(b)
    x = [[_as_int(sum(bx_inv[i][k] * (ambient[j] if k == j else 0) for k in range(r)))
          for j in range(r)] for i in range(r)]
    d2, u2, _v2 = smith_normal_form(x)
    u2inv = _int_inverse(u2)
    basis_mat = [[sum(b[i][k] * u2inv[k][j] for k in range(r)) for j in range(r)]
                 for i in range(r)]
    factors = []
    basis = []
    for j in range(r):
        e = d2[j][j]
        if e > 1:
            factors.append(e)
            basis.append(tuple(basis_mat[i][j] % ambient[i] for i in range(r)))
    return tuple(factors), basis


def _int_inverse_fraction(m):
    """Inverse of an invertible integer matrix, as Fractions."""
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(1 if i == j else 0)
                                                    for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise InputError("singular lattice basis")
        aug[col], aug[piv] = aug[piv], aug[col]
        f = aug[col][col]
        aug[col] = [v / f for v in aug[col]]
        for r2 in range(n):
            if r2 != col and aug[r2][col] != 0:
                g = aug[r2][col]
                aug[r2] = [a - g * b for a, b in zip(aug[r2], aug[col])]
    return [[aug[i][n + j] for j in range(n)] for i in range(n)]


def _as_int(q: Fraction) -> int:
    if q.denominator != 1:
        raise InputError("expected an integer; lattice inclusion violated")
    return int(q)


def subgroup_order(gens, ambient) -> int:
    factors, _ = subgroup_invariants(gens, ambient)
    n = 1
    for f in factors:
        n *= f
    return n


def member_coordinates(x, basis, ambient):
    """Express x as an integer combination of basis tuples mod ambient;
    None when x is outside the subgroup."""
    r = len(ambient)
    s = len(basis)
    cols = [list(b) for b in basis] + [[ambient[i] if j == i else 0 for j in range(r)]
                                       for i in range(r)]
    m = [[cols[c][i] for c in range(s + r)] for i in range(r)]
    sol = solve_integer(m, list(x))
    if sol is None:
        return None
    return sol[:s]


def complement_of_cyclic(factors, x) -> list[tuple[int, ...]]:
    """Generators of a complement A' with A = <x> x A', for x of maximal
    order.  The homomorphism psi: A -> Z/m with psi(x) = 1 is built by
    extended gcd; its kernel is the complement."""
    factors = tuple(factors)
    m = factors[-1] if factors else 1
    if element_order_in(factors, x) != m:
        raise NotMaximalOrder(
            f"element {x} has order {element_order_in(factors, x)}, exponent is {m}")
    coeffs = [(m // d) * xi for d, xi in zip(factors, x)]
    ts = solve_gcd_combination(coeffs, m, 1)
    if ts is None:
        raise NotMaximalOrder("no splitting homomorphism; order computation inconsistent")
    psi = [((m // d) * t) % m for d, t in zip(factors, ts)]
    row = psi + [m]
    gens = []
    for vec in kernel_basis([row]):
        g = tuple(v % d for v, d in zip(vec[:len(factors)], factors))
        if any(g):
            gens.append(g)
    # sanity: <x> and the kernel really decompose A
    sub_order = subgroup_order(gens, factors)
    total = 1
    for d in factors:
        total *= d
    if m * sub_order != total or subgroup_order(gens + [tuple(x)], factors) != total:
        raise NotMaximalOrder("complement construction failed")
    return gens


def kernel_of_pairing_with(a: AbelianPairedGroup, x) -> list[tuple[int, ...]]:
    """Generators of { y : pairing(x, y) = 0 }."""
    r = len(a.factors)
    c = [a.pair(x, tuple(1 if j == i else 0 for j in range(r))) for i in range(r)]
    den = 1
    for q in c:
        den = lcm(den, q.denominator)
    row = [int(q * den) for q in c] + [den]
    gens = []
    for vec in kernel_basis([row]):
        g = tuple(v % d for v, d in zip(vec[:r], a.factors))
        if any(g):
            gens.append(g)
    return gens


@dataclass
class GammaResult:
    generators: list[tuple[int, ...]]
    order: int
    elements: list[tuple[int, ...]]


def _subgroup_elements(gens, factors):
    seen = {tuple(0 for _ in factors)}
    frontier = [tuple(0 for _ in factors)]
    gens = [tuple(g) for g in gens]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = tuple((a + b) % d for a, b, d in zip(cur, g, factors))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return sorted(seen)


def gamma_subgroup(a: AbelianPairedGroup) -> GammaResult:
    """Isotropic subgroup with |A| dividing |Gamma|^2.

    Induction: take x of maximal order m (lexicographically least such),
    intersect with the kernel of pairing(x, -), split off <x> as a direct
    summand there, recurse on the complement with the restricted pairing.
    """
    gens = _gamma_generators(a)
    elements = _subgroup_elements(gens, a.factors) if a.factors else [()]
    for u in elements:
        for v in elements:
            if a.pair(u, v) != 0:
                raise InputError("gamma output is not isotropic; construction bug")
    order = len(elements)
    if (order * order) % a.order:
        raise InputError("gamma divisibility failed; construction bug")
    return GammaResult(generators=gens, order=order, elements=elements)


def _gamma_generators(a: AbelianPairedGroup) -> list[tuple[int, ...]]:
    if not a.factors:
        return []
    m = a.factors[-1]
    x = min(v for v in a.elements() if a.element_order(v) == m)
    ker_gens = kernel_of_pairing_with(a, x)
    inv_k, basis_k = subgroup_invariants(ker_gens, a.factors)
    if not inv_k:
        raise InputError("pairing kernel misses x; pairing not alternating?")
    x_in_k = member_coordinates(x, basis_k, a.factors)
    if x_in_k is None:
        raise InputError("x not in its own pairing kernel; pairing not alternating?")
    x_in_k = tuple(v % e for v, e in zip(x_in_k, inv_k))
    comp_gens_k = complement_of_cyclic(inv_k, x_in_k)
    # map complement generators back to ambient coordinates
    comp_gens = []
    for g in comp_gens_k:
        vec = [0] * len(a.factors)
        for coeff, b in zip(g, basis_k):
            for i, bi in enumerate(b):
                vec[i] += coeff * bi
        comp_gens.append(tuple(v % d for v, d in zip(vec, a.factors)))
    inv_c, basis_c = subgroup_invariants(comp_gens, a.factors)
    if not inv_c:
        return [x]
    sub_pairing = tuple(tuple(a.pair(bi, bj) for bj in basis_c) for bi in basis_c)
    sub = AbelianPairedGroup.make(inv_c, sub_pairing)
    inner = _gamma_generators(sub)
    out = [x]
    for g in inner:
        vec = [0] * len(a.factors)
        for coeff, b in zip(g, basis_c):
            for i, bi in enumerate(b):
                vec[i] += coeff * bi
        out.append(tuple(v % d for v, d in zip(vec, a.factors)))
    return out


# -- pairing corpus and the brute-force oracle ----------------------------------


def invariant_factor_shapes(max_order: int):
    """All invariant-factor tuples (d1 | ... | dr, di >= 2) of order <= max_order."""
    shapes = []

    def rec(prefix, prod):
        shapes.append(tuple(prefix))
        start = prefix[-1] if prefix else 2
        d = start
        while prod * d <= max_order:
            if not prefix or d % prefix[-1] == 0:
                rec(prefix + [d], prod * d)
            d += 1

    rec([], 1)
    return [s for s in shapes if s]


def pairing_slots(factors):
    """Upper-triangle slot sizes: entry (i, j) ranges over t/g, t < g,
    g = gcd(d_i, d_j)."""
    r = len(factors)
    return [(i, j, gcd(factors[i], factors[j]))
            for i in range(r) for j in range(i + 1, r)]


def pairing_count(factors) -> int:
    n = 1
    for _i, _j, g in pairing_slots(factors):
        n *= g
    return n


def build_pairing(factors, choices) -> AbelianPairedGroup:
    r = len(factors)
    mat = [[Fraction(0)] * r for _ in range(r)]
    for (i, j, g), t in zip(pairing_slots(factors), choices):
        q = Fraction(t, g)
        mat[i][j] = q
        mat[j][i] = _mod1(-q)
    return AbelianPairedGroup.make(factors, mat)


def enumerate_pairings(factors, cap: int, rng):
    """All valid alternating pairings when there are at most ``cap`` of
    them; otherwise ``cap`` seeded samples (deduplicated)."""
    slots = pairing_slots(factors)
    total = pairing_count(factors)
    if total <= cap:
        for choices in iproduct(*(range(g) for _i, _j, g in slots)):
            yield build_pairing(factors, choices)
        return
    seen = set()
    for _ in range(cap):
        choices = tuple(rng.randrange(g) for _i, _j, g in slots)
        if choices in seen:
            continue
        seen.add(choices)
        yield build_pairing(factors, choices)


@lru_cache(maxsize=None)
def _shape_subgroup_masks(factors: tuple[int, ...]):
    """Subgroup lattice of prod Z/d_i as bitmasks over the element
    enumeration, sorted by size descending.  Depends only on the shape."""
    elements = list(iproduct(*(range(d) for d in factors)))
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    table = np.zeros((n, n), dtype=np.int64)
    for i, u in enumerate(elements):
        for j, v in enumerate(elements):
            table[i, j] = index[tuple((a + b) % d for a, b, d in zip(u, v, factors))]
    g = FiniteGroupTable(table, identity=index[tuple(0 for _ in factors)], validate=False)
    subs = all_subgroups(g)
    masked = []
    for s in subs:
        mask = 0
        for i in s:
            mask |= 1 << i
        masked.append((len(s), mask))
    masked.sort(key=lambda t: -t[0])
    sizes = np.array([t[0] for t in masked], dtype=np.int64)
    masks = [t[1] for t in masked]
    return elements, index, masks, sizes


def max_isotropic_order(a: AbelianPairedGroup) -> int:
    """Brute-force maximal isotropic subgroup order: scans the full subgroup
    lattice against the pairing.  Independent of gamma_subgroup."""
    if not a.factors:
        return 1
    if a.order > 64:
        raise InputError("oracle capped at order 64")
    elements, index, masks, sizes = _shape_subgroup_masks(a.factors)
    n = len(elements)
    bad = [0] * n
    for i, u in enumerate(elements):
        m = 0
        for j, v in enumerate(elements):
            if a.pair(u, v) != 0:
                m |= 1 << j
        bad[i] = m
    idx = kernels.max_isotropic(masks, sizes, bad)
    if idx < 0:
        raise InputError("no isotropic subgroup found; the trivial one always is")
    return int(sizes[idx])
