"""Exact arithmetic in towers of number fields.

A field is either the rationals or a monic integer-polynomial extension of
another catalog field; towers are at most two proper steps deep (Q -> k -> L),
which covers every algebra in the bundled catalog.  Elements carry their
coordinates over the flattened power basis

    basis[j * d_base + i]  =  (base basis element i) * s**j

where ``s`` is the generator of the top step.  All coordinates are
`fractions.Fraction`; there is no floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .errors import (
    DivisionByZero,
    FieldMismatch,
    InputError,
    ZeroInput,
)

QQ = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def divisors_of(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


class FieldDescriptor:
    """A catalog number field.

    The rationals are represented uniformly as the degree-1 extension with
    defining polynomial t - 1 (generator 1), so every element everywhere is
    just a coordinate vector and no code path special-cases Q.
    """

    def __init__(self, label: str, base: Optional["FieldDescriptor"],
                 rel_poly: Sequence[int], torsion_order: int):
        if not rel_poly or rel_poly[-1] != 1:
            raise InputError(f"{label}: defining polynomial must be monic")
        if any(int(c) != c for c in rel_poly):
            raise InputError(f"{label}: defining polynomial must have integer coefficients")
        self.label = label
        self.base = base
        self.rel_poly = tuple(int(c) for c in rel_poly)
        self.rel_degree = len(rel_poly) - 1
        if self.rel_degree < 1:
            raise InputError(f"{label}: degree must be at least 1")
        self.base_degree = base.abs_degree if base is not None else 1
        self.abs_degree = self.rel_degree * self.base_degree
        self.torsion_order = int(torsion_order)
        if self.torsion_order < 2 or self.torsion_order % 2:
            raise InputError(f"{label}: torsion order must be even and >= 2 (every field has -1)")
        self.automorphisms: list[FieldElement] = []   # images of the generator
        self._auto_powers: list[list[FieldElement]] = []
        self.primitive_root: Optional[FieldElement] = None

    # -- constructors -------------------------------------------------------

    def element(self, coords) -> "FieldElement":
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.abs_degree:
            raise InputError(
                f"{self.label}: expected {self.abs_degree} coordinates, got {len(coords)}")
        return FieldElement(self, coords)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (_ZERO,) * self.abs_degree)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, (_ONE,) + (_ZERO,) * (self.abs_degree - 1))

    def from_rational(self, q) -> "FieldElement":
        q = Fraction(q)
        return FieldElement(self, (q,) + (_ZERO,) * (self.abs_degree - 1))

    @property
    def generator(self) -> "FieldElement":
        if self.base is None:
            # degree-1 step: the generator is the root of the linear polynomial
            return self.from_rational(-self.rel_poly[0])
        coords = [_ZERO] * self.abs_degree
        coords[self.base_degree] = _ONE
        return FieldElement(self, tuple(coords))

    def embed(self, x: "FieldElement") -> "FieldElement":
        """Lift an element of an ancestor field into this field."""
        if x.field is self:
            return x
        chain = [self]
        while chain[-1].base is not None:
            chain.append(chain[-1].base)
        if x.field not in chain:
            raise FieldMismatch(f"{x.field.label} is not an ancestor of {self.label}")
        cur = x
        for f in reversed(chain[:chain.index(x.field)]):
            coords = list(cur.coords) + [_ZERO] * (f.abs_degree - len(cur.coords))
            cur = FieldElement(f, tuple(coords))
        return cur

    def is_extension_of(self, other: "FieldDescriptor") -> bool:
        f = self
        while f is not None:
            if f is other:
                return True
            f = f.base
        return False

    # -- relative coordinates -----------------------------------------------

    def rel_chunks(self, x: "FieldElement") -> list["FieldElement"]:
        """Coordinates of x over the base, as base-field elements."""
        if x.field is not self:
            raise FieldMismatch("element of a different field")
        if self.base is None:
            return [x]
        d = self.base_degree
        return [self.base.element(x.coords[j * d:(j + 1) * d])
                for j in range(self.rel_degree)]

    def coords_over(self, x: "FieldElement", over: "FieldDescriptor") -> list["FieldElement"]:
        """Coordinates of x over an ancestor field, as elements of it."""
        if over is self:
            return [x]
        if over is self.base:
            return self.rel_chunks(x)
        if self.base is not None and self.base.is_extension_of(over):
            out = []
            for chunk in self.rel_chunks(x):
                out.extend(self.base.coords_over(chunk, over))
            return out
        raise FieldMismatch(f"{over.label} is not an ancestor of {self.label}")

    def degree_over(self, over: "FieldDescriptor") -> int:
        if over is self:
            return 1
        if self.base is None:
            raise FieldMismatch(f"{over.label} is not an ancestor of {self.label}")
        return self.rel_degree * self.base.degree_over(over)

    # -- multiplication ------------------------------------------------------

    def _base_mul(self, u, v):
        if self.base is None:
            return (u[0] * v[0],)
        return self.base._mul_coords(u, v)

    def _mul_coords(self, x, y):
        m = self.rel_degree
        d = self.base_degree
        if m == 1:
            return self._base_mul(x, y)
        xs = [x[j * d:(j + 1) * d] for j in range(m)]
        ys = [y[j * d:(j + 1) * d] for j in range(m)]
        conv = [[_ZERO] * d for _ in range(2 * m - 1)]
        for j, xj in enumerate(xs):
            if all(c == 0 for c in xj):
                continue
            for jp, yjp in enumerate(ys):
                if all(c == 0 for c in yjp):
                    continue
                prod = self._base_mul(xj, yjp)
                tgt = conv[j + jp]
                for i in range(d):
                    tgt[i] += prod[i]
        # reduce powers s^e for e >= m via s^m = -sum(a_l s^l)
        for e in range(2 * m - 2, m - 1, -1):
            top = conv[e]
            if all(c == 0 for c in top):
                continue
            for l in range(m):
                a = self.rel_poly[l]
                if a:
                    tgt = conv[e - m + l]
                    for i in range(d):
                        tgt[i] -= a * top[i]
        out = []
        for e in range(m):
            out.extend(conv[e])
        return tuple(out)

    # -- automorphisms -------------------------------------------------------

    def attach_automorphisms(self, images: Sequence["FieldElement"]):
        self.automorphisms = list(images)
        self._auto_powers = []
        for img in images:
            powers = [self.one]
            for _ in range(self.rel_degree - 1):
                powers.append(powers[-1] * img)
            self._auto_powers.append(powers)

    def apply_automorphism(self, index: int, x: "FieldElement") -> "FieldElement":
        """Base-fixing automorphism: sum c_j s^j  ->  sum c_j sigma(s)^j."""
        chunks = self.rel_chunks(x)
        powers = self._auto_powers[index]
        acc = self.zero
        for c, p in zip(chunks, powers):
            acc = acc + self.embed(c) * p
        return acc

    def automorphism_order(self, index: int) -> int:
        s = self.generator
        img = s
        for k in range(1, len(self.automorphisms) + 1):
            img = self.apply_automorphism(index, img)
            if img == s:
                return k
        raise InputError(f"{self.label}: automorphism {index} does not close")

    def __repr__(self):
        return f"FieldDescriptor({self.label!r})"


@dataclass(frozen=True)
class FieldElement:
    field: FieldDescriptor
    coords: tuple

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch(
                    f"{self.field.label} vs {other.field.label}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul_coords(self.coords, o.coords))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field is other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field.label, self.coords))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise DivisionByZero(f"division by zero in {self.field.label}")
        f = self.field
        n = f.abs_degree
        cols = []
        for m in range(n):
            basis = [_ZERO] * n
            basis[m] = _ONE
            cols.append(f._mul_coords(self.coords, tuple(basis)))
        matrix = [[cols[m][i] for m in range(n)] for i in range(n)]
        rhs = [_ONE] + [_ZERO] * (n - 1)
        sol = linalg.solve(matrix, rhs, _ZERO, _ONE)
        if sol is None:
            raise DivisionByZero(
                f"{self.field.label}: noninvertible element (is the defining polynomial irreducible?)")
        return FieldElement(f, tuple(sol))

    def rational_value(self) -> Fraction:
        """The value of an element that lies in Q; InputError otherwise."""
        if any(c != 0 for c in self.coords[1:]):
            raise InputError("element is not rational")
        return self.coords[0]

    def __repr__(self):
        return f"<{self.field.label}: {list(self.coords)}>"


# -- free-standing operations ------------------------------------------------


def field_arith(op: str, x: FieldElement, y: FieldElement) -> FieldElement:
    """Dispatch basic arithmetic by name; the CLI entry point for `exact`."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise InputError(f"unknown operation {op!r}")


def trace(x: FieldElement, over: FieldDescriptor) -> FieldElement:
    """Trace of multiplication-by-x on x's field viewed over an ancestor.

    Computed from the regular representation: the trace is the sum of the
    diagonal relative coordinates of x * (basis element m).
    """
    f = x.field
    d = f.degree_over(over)
    total = over.zero
    for m in range(d):
        basis = [_ZERO] * f.abs_degree
        basis[m] = _ONE
        prod = FieldElement(f, f._mul_coords(x.coords, tuple(basis)))
        total = total + f.coords_over(prod, over)[m]
    return total


def minimal_polynomial(x: FieldElement, over: FieldDescriptor) -> list[FieldElement]:
    """Monic minimal polynomial of x over an ancestor field.

    Returned constant-term first as elements of ``over``; the degree always
    divides the extension degree.
    """
    f = x.field
    d = f.degree_over(over)
    powers = [f.one]
    for _ in range(d):
        powers.append(powers[-1] * x)
    vectors = [f.coords_over(p, over) for p in powers]
    dep = linalg.first_dependency(vectors, over.zero, over.one)
    if dep is None:
        raise InputError("no dependency found; extension data is inconsistent")
    deg, coeffs = dep
    poly = [over.zero - c for c in coeffs]
    poly.append(over.one)
    return poly


def eval_int_poly(poly: Sequence[int], x: FieldElement) -> FieldElement:
    """Evaluate an integer-coefficient polynomial (constant first) at x."""
    acc = x.field.zero
    for c in reversed(poly):
        acc = acc * x + x.field.from_rational(c)
    return acc


def eval_poly(poly: Sequence[FieldElement], x: FieldElement) -> FieldElement:
    """Evaluate a polynomial with coefficients in an ancestor of x's field."""
    acc = x.field.zero
    for c in reversed(poly):
        acc = acc * x + x.field.embed(c)
    return acc


def is_root_of_unity(x: FieldElement) -> Optional[int]:
    """Exact multiplicative order of x if x^w = 1 for the field torsion
    order w; None otherwise."""
    if x.is_zero:
        raise ZeroInput("0 is not a root of unity")
    w = x.field.torsion_order
    one = x.field.one
    if x ** w != one:
        return None
    for d in divisors_of(w):
        if x ** d == one:
            return d
    return None


def unity_exponent(x: FieldElement) -> Fraction:
    """Discrete log of a root of unity against the field's canonical
    primitive root, as a rational in [0, 1)."""
    f = x.field
    if f.primitive_root is None:
        raise InputError(f"{f.label}: no primitive torsion root attached")
    w = f.torsion_order
    acc = f.one
    for s in range(w):
        if acc == x:
            return Fraction(s, w)
        acc = acc * f.primitive_root
    raise InputError("element is not a root of unity")
