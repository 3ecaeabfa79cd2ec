"""Cyclic algebras (K/k, sigma, a) of degree n.

The algebra is generated over the degree-n cyclic extension K/k by a symbol
z with the relations z * c = sigma(c) * z for c in K and z**n = a in k*.
Quaternion algebras are the n = 2 case with K = k(sqrt b) and sigma the
conjugation; they get no special code path.

Elements are stored as n coordinates in K (coefficient of z**i at slot i);
the canonical k-basis ordering everywhere is z-power major, K-power-basis
minor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .errors import (
    AlgebraMismatch,
    DegreeOverflow,
    InputError,
    NonCommutative,
    NotInvertible,
    ResultNotInBaseField,
    ZeroInput,
)
from .fields import FieldDescriptor, FieldElement


@dataclass(frozen=True)
class DivisionCertificate:
    certified: bool
    citation: str = ""


class CyclicAlgebra:
    def __init__(self, label: str, base: FieldDescriptor, splitting: FieldDescriptor,
                 sigma_index: int, a: FieldElement, degree: int,
                 certificate: DivisionCertificate = DivisionCertificate(False)):
        if splitting.base is not base:
            raise InputError(f"{label}: splitting field must be a direct extension of the base")
        if splitting.rel_degree != degree:
            raise InputError(f"{label}: [K:k] = {splitting.rel_degree} != degree {degree}")
        if a.field is not base or a.is_zero:
            raise InputError(f"{label}: parameter a must be a nonzero base-field element")
        if not (0 <= sigma_index < len(splitting.automorphisms)):
            raise InputError(f"{label}: sigma index out of range")
        if splitting.automorphism_order(sigma_index) != degree:
            raise InputError(f"{label}: sigma must have exact order {degree}")
        self.label = label
        self.base = base
        self.splitting = splitting
        self.sigma_index = sigma_index
        self.a = a
        self.degree = degree
        self.certificate = certificate
        self._a_in_K = splitting.embed(a)

    # -- element constructors -------------------------------------------------

    def element(self, coords: Sequence[FieldElement]) -> "AlgebraElement":
        coords = tuple(coords)
        if len(coords) != self.degree:
            raise InputError(f"{self.label}: expected {self.degree} K-coordinates")
        for c in coords:
            if c.field is not self.splitting:
                raise InputError(f"{self.label}: coordinates must lie in {self.splitting.label}")
        return AlgebraElement(self, coords)

    def element_from_rationals(self, flat) -> "AlgebraElement":
        """Parse z-major flat rational coordinates (n * [K:Q] values)."""
        d = self.splitting.abs_degree
        flat = list(flat)
        if len(flat) != self.degree * d:
            raise InputError(
                f"{self.label}: expected {self.degree * d} rational coordinates, got {len(flat)}")
        return self.element([self.splitting.element(flat[i * d:(i + 1) * d])
                             for i in range(self.degree)])

    @property
    def zero(self) -> "AlgebraElement":
        return self.element([self.splitting.zero] * self.degree)

    @property
    def one(self) -> "AlgebraElement":
        coords = [self.splitting.zero] * self.degree
        coords[0] = self.splitting.one
        return self.element(coords)

    @property
    def z(self) -> "AlgebraElement":
        coords = [self.splitting.zero] * self.degree
        if self.degree == 1:
            coords[0] = self._a_in_K
        else:
            coords[1] = self.splitting.one
        return self.element(coords)

    def scalar(self, c) -> "AlgebraElement":
        """c * 1 for c in the base field (or a rational)."""
        if isinstance(c, (int, Fraction)):
            c = self.base.from_rational(c)
        coords = [self.splitting.zero] * self.degree
        coords[0] = self.splitting.embed(c)
        return self.element(coords)

    def from_splitting(self, c: FieldElement) -> "AlgebraElement":
        coords = [self.splitting.zero] * self.degree
        coords[0] = c
        return self.element(coords)

    def sigma(self, c: FieldElement, times: int = 1) -> FieldElement:
        for _ in range(times % self.degree):
            c = self.splitting.apply_automorphism(self.sigma_index, c)
        return c

    def monomial(self, i: int, j: int) -> "AlgebraElement":
        """Basis element z^i * s^j in the canonical ordering."""
        coords = [self.splitting.zero] * self.degree
        coords[i] = self.splitting.generator ** j if j else self.splitting.one
        return self.element(coords)

    def random_element(self, rng) -> "AlgebraElement":
        """Small random element: integer coordinates in [-9, 9], not all zero."""
        d = self.splitting.abs_degree
        while True:
            flat = [rng.randint(-9, 9) for _ in range(self.degree * d)]
            if any(flat):
                return self.element_from_rationals(flat)

    def __repr__(self):
        return f"CyclicAlgebra({self.label!r})"


@dataclass(frozen=True)
class AlgebraElement:
    algebra: CyclicAlgebra
    coords: tuple

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise AlgebraMismatch(f"{self.algebra.label} vs {other.algebra.label}")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra,
                              tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra,
                              tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        self._check(other)
        alg = self.algebra
        n = alg.degree
        K = alg.splitting
        out = [K.zero] * n
        for i, ci in enumerate(self.coords):
            if ci.is_zero:
                continue
            for j, dj in enumerate(other.coords):
                if dj.is_zero:
                    continue
                term = ci * alg.sigma(dj, i)
                if i + j >= n:
                    term = term * alg._a_in_K
                out[(i + j) % n] = out[(i + j) % n] + term
        return AlgebraElement(alg, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "AlgebraElement":
        """Multiply by a central scalar (rational or base-field element)."""
        if isinstance(c, (int, Fraction)):
            c = self.algebra.base.from_rational(c)
        if c.field is self.algebra.base:
            c = self.algebra.splitting.embed(c)
        if c.field is not self.algebra.splitting:
            raise InputError("scalars must come from the base field")
        return AlgebraElement(self.algebra, tuple(c * x for x in self.coords))

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            c = self.algebra.base.from_rational(c)
        if isinstance(c, FieldElement):
            return self.scale(c.inverse())
        return NotImplemented

    def __pow__(self, m: int):
        if m < 0:
            return inverse(self) ** (-m)
        acc = self.algebra.one
        base = self
        while m:
            if m & 1:
                acc = acc * base
            base = base * base
            m >>= 1
        return acc

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((self.algebra.label, self.coords))

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coords)

    def k_coords(self) -> list[FieldElement]:
        """Flat base-field coordinates, z-power major, K-power-basis minor."""
        K = self.algebra.splitting
        out = []
        for c in self.coords:
            out.extend(K.rel_chunks(c))
        return out

    def flat_rationals(self) -> list[Fraction]:
        out = []
        for c in self.coords:
            out.extend(c.coords)
        return out

    def scalar_part(self) -> Optional[FieldElement]:
        """The base-field element c with self = c * 1, or None."""
        kc = self.k_coords()
        if any(not c.is_zero for c in kc[1:]):
            return None
        return kc[0]

    def __repr__(self):
        return f"<{self.algebra.label}: {self.coords}>"


# -- operations ----------------------------------------------------------------


def algebra_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def embed_matrix(x: AlgebraElement) -> list[list[FieldElement]]:
    """Standard splitting representation: a ring homomorphism into n x n
    matrices over K.  The monomial c * z^i contributes sigma^r(c) * a^[r+i>=n]
    at position ((r+i) mod n, r)."""
    alg = x.algebra
    n = alg.degree
    K = alg.splitting
    m = [[K.zero] * n for _ in range(n)]
    for i, ci in enumerate(x.coords):
        if ci.is_zero:
            continue
        for r in range(n):
            val = alg.sigma(ci, r)
            if r + i >= n:
                val = val * alg._a_in_K
            m[r][(r + i) % n] = m[r][(r + i) % n] + val
    return m


def reduced_norm(x: AlgebraElement) -> FieldElement:
    """Determinant of the splitting embedding; always lands in the base field."""
    alg = x.algebra
    K = alg.splitting
    det = linalg.determinant(embed_matrix(x), K.zero, K.one)
    chunks = K.rel_chunks(det)
    if any(not c.is_zero for c in chunks[1:]):
        raise ResultNotInBaseField(
            f"{alg.label}: reduced norm {det!r} has coordinates outside {alg.base.label}")
    return chunks[0]


def inverse(x: AlgebraElement) -> AlgebraElement:
    """Two-sided inverse via the n^2-dimensional base-field linear system of
    left multiplication by x."""
    if x.is_zero:
        raise ZeroInput("inverse of zero")
    alg = x.algebra
    if reduced_norm(x).is_zero:
        raise NotInvertible(
            f"{alg.label}: reduced norm vanishes on a nonzero element; "
            "the algebra cannot be a division algebra")
    n = alg.degree
    k = alg.base
    cols = []
    for i in range(n):
        for j in range(n):
            prod = x * alg.monomial(i, j)
            cols.append(prod.k_coords())
    matrix = [[cols[m][r] for m in range(n * n)] for r in range(n * n)]
    rhs = [k.one] + [k.zero] * (n * n - 1)
    sol = linalg.solve(matrix, rhs, k.zero, k.one)
    if sol is None:
        raise NotInvertible(f"{alg.label}: singular left-multiplication matrix")
    K = alg.splitting
    coords = []
    for i in range(n):
        chunk = sol[i * n:(i + 1) * n]
        flat = []
        for c in chunk:
            flat.extend(c.coords)
        coords.append(K.element(flat))
    y = alg.element(coords)
    assert (x * y) == alg.one and (y * x) == alg.one
    return y


@dataclass
class Subfield:
    basis: list[AlgebraElement]
    degree: int


def generated_subfield(gens: Sequence[AlgebraElement]) -> Subfield:
    """k-span of all monomials in commuting generators, with its k-basis.

    In a division algebra this is a subfield whose degree divides n; a basis
    larger than n (or commutativity failure) is reported as an error rather
    than silently accepted.
    """
    if not gens:
        raise InputError("need at least one generator (use the identity for k itself)")
    alg = gens[0].algebra
    for g in gens:
        if g.algebra is not alg:
            raise AlgebraMismatch("generators from different algebras")
        if g.is_zero:
            raise ZeroInput("zero generator")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if gens[i] * gens[j] != gens[j] * gens[i]:
                raise NonCommutative(
                    "generators do not commute; the generated subalgebra is not a field")
    n = alg.degree
    k = alg.base
    span = linalg.RowSpan(n * n, k.zero, k.one)
    basis = [alg.one]
    span.add(alg.one.k_coords())
    frontier = list(gens)
    for g in frontier:
        if span.add(g.k_coords()):
            basis.append(g)
    while True:
        new = []
        for a in basis:
            for b in basis:
                p = a * b
                if span.add(p.k_coords()):
                    new.append(p)
                    if len(basis) + len(new) > n:
                        raise DegreeOverflow(
                            f"{alg.label}: commutative subalgebra exceeds degree {n}; "
                            "not a division algebra")
        if not new:
            break
        basis.extend(new)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if basis[i] * basis[j] != basis[j] * basis[i]:
                raise NonCommutative("basis elements do not commute")
    if n % len(basis):
        raise DegreeOverflow(
            f"{alg.label}: subfield degree {len(basis)} does not divide {n}")
    return Subfield(basis=basis, degree=len(basis))


def division_sanity_check(alg: CyclicAlgebra, samples: int = 1000, seed: int = 0x5EED) -> bool:
    """Sampling check that the reduced norm has no nonzero kernel; evidence
    for (never proof of) division-ness."""
    import random

    rng = random.Random(seed)
    for _ in range(samples):
        if reduced_norm(alg.random_element(rng)).is_zero:
            return False
    return True
