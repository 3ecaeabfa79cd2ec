"""Power tests: decide whether a = (root of unity) * c**alpha in a field.

Exact engines exist where the ring of integers is a principal ideal domain
with a computable unit group:

* the rationals (sign + prime factorization),
* imaginary quadratic fields of class number one (finite unit group),
* Q(sqrt 5), whose units are +-(golden ratio)**m, recovered by coefficient
  descent.

Everywhere else a bounded search runs and a miss raises
HeuristicInconclusive -- never a definite "absent".
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from .errors import HeuristicInconclusive, InputError, ZeroInput
from .fields import FieldDescriptor, FieldElement, is_root_of_unity

# Imaginary quadratic fields Q(sqrt m) whose integer ring is a PID.
_CLASS_NUMBER_ONE = {-1, -2, -3, -7, -11, -19, -43, -67, -163}

# Candidate numerators for the generic bounded search.
_SEARCH_VALUES = (1, -1, 2, -2, 3, -3)
_COORD_BOUND = 10 ** 6


def _factorint(n: int) -> dict[int, int]:
    from sympy import factorint     # deferred: sympy import is slow

    return {int(p): int(e) for p, e in factorint(n).items()}


def _squarefree_part(n: int) -> int:
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = sign
    for p, e in _factorint(n).items():
        if e % 2:
            out *= p
    return out


def classify_engine(field: FieldDescriptor) -> str:
    """Which power-test engine serves this field."""
    if field.abs_degree == 1:
        return "rational"
    if field.rel_degree == 2 and field.base is not None and field.base.abs_degree == 1:
        c0, c1, _ = field.rel_poly
        disc = c1 * c1 - 4 * c0
        m = _squarefree_part(disc)
        field_disc = m if m % 4 == 1 else 4 * m
        if disc != field_disc:
            return "bounded"        # non-maximal generator order: stay honest
        if m in _CLASS_NUMBER_ONE:
            return "imaginary_pid"
        if m == 5:
            return "golden"
    return "bounded"


# -- ring helpers for the quadratic engines -----------------------------------


def _conj(x: FieldElement) -> FieldElement:
    """Galois conjugate in a quadratic field, read off the defining poly."""
    f = x.field
    c0, c1, _ = f.rel_poly
    u, v = x.coords
    return f.element((u - c1 * v, -v))


def _norm(x: FieldElement) -> Fraction:
    return (x * _conj(x)).rational_value()


def _is_integral(x: FieldElement) -> bool:
    return all(c.denominator == 1 for c in x.coords)


def _norm_form_solutions(field: FieldDescriptor, p: int):
    """Integral x + y*g with |N| = p, by exhaustive y-range search."""
    c0, c1, _ = field.rel_poly
    disc = c1 * c1 - 4 * c0
    # N(x + y g) = x^2 - c1 x y + c0 y^2; completing the square:
    # 4N = (2x - c1 y)^2 - disc y^2
    out = []
    ymax = isqrt(4 * p // abs(disc)) + 2 if disc < 0 else isqrt(4 * p) + 2
    for y in range(0, ymax + 1):
        for target in (4 * p, -4 * p):
            t = target + disc * y * y
            if t < 0:
                continue
            s = isqrt(t)
            if s * s != t:
                continue
            for sg in (s, -s):
                num = sg + c1 * y
                if num % 2:
                    continue
                x = num // 2
                cand = field.element((x, y))
                if abs(_norm(cand)) == p:
                    out.append(cand)
    return out


def _primes_above(field: FieldDescriptor, p: int):
    """Prime elements of Z[g] above the rational prime p (one per prime
    ideal: a single inert or ramified representative, or a conjugate pair)."""
    sols = _norm_form_solutions(field, p)
    if not sols:
        return [field.from_rational(p)]         # inert
    pi = sols[0]
    pib = _conj(pi)
    q = pib / pi
    if _is_integral(q) and abs(_norm(q)) == 1:
        return [pi]                             # ramified: conjugate associate
    return [pi, pib]


def _valuation(x: FieldElement, pi: FieldElement):
    """Largest v with pi^v | x in the integer ring; also returns x / pi^v."""
    v = 0
    while True:
        y = x / pi
        if not _is_integral(y):
            return v, x
        x = y
        v += 1
        if v > 10_000:
            raise InputError("runaway valuation; non-prime divisor?")


def _golden_unit_exponent(u: FieldElement) -> Optional[int]:
    """Write a unit of Z[phi] as +-phi^m and return m; None if not a unit."""
    f = u.field
    if abs(_norm(u)) != 1 or not _is_integral(u):
        return None
    phi = f.generator
    phi_inv = phi - 1          # phi^-1 = phi - 1 in Z[phi]
    size = lambda x: sum(abs(c.numerator) for c in x.coords)
    one, neg_one = f.one, -f.one
    m = 0
    cur = u
    for _ in range(10_000):
        if cur == one or cur == neg_one:
            return m
        down = cur * phi_inv
        up = cur * phi
        if down == one or down == neg_one or size(down) < size(cur):
            cur, m = down, m + 1
        elif up == one or up == neg_one or size(up) < size(cur):
            cur, m = up, m - 1
        else:
            return None
    raise InputError("unit descent did not terminate")


# -- engines ------------------------------------------------------------------


def _power_test_rational(a: FieldElement, alpha: int) -> Optional[FieldElement]:
    q = a.rational_value()
    exps: dict[int, int] = {}
    for p, e in _factorint(q.numerator if q > 0 else -q.numerator).items():
        exps[p] = exps.get(p, 0) + e
    for p, e in _factorint(q.denominator).items():
        exps[p] = exps.get(p, 0) - e
    if any(e % alpha for e in exps.values()):
        return None
    c = Fraction(1)
    for p, e in exps.items():
        c *= Fraction(p) ** (e // alpha)
    # leftover is +-1, always a root of unity
    return a.field.from_rational(c)


def _power_test_quadratic(a: FieldElement, alpha: int, golden: bool) -> Optional[FieldElement]:
    f = a.field
    den = 1
    for c in a.coords:
        den = den * c.denominator // gcd(den, c.denominator)
    y = a * den                         # integral now
    den_elt = f.from_rational(den)

    rational_primes = set(_factorint(abs(_norm(y).numerator)))
    rational_primes |= set(_factorint(den))
    exps: list[tuple[FieldElement, int]] = []
    unit = y
    den_unit = den_elt
    for p in sorted(rational_primes):
        for pi in _primes_above(f, p):
            vy, unit = _valuation(unit, pi)
            vd, den_unit = _valuation(den_unit, pi)
            e = vy - vd
            if e:
                exps.append((pi, e))
    # whatever remains of the denominator part must be a unit now
    if golden:
        m = _golden_unit_exponent(unit / den_unit)
        if m is None:
            raise InputError("factorization left a non-unit; engine bug")
        if m % alpha:
            return None
        c = f.generator ** (m // alpha)
    else:
        if is_root_of_unity(unit / den_unit) is None:
            raise InputError("factorization left a non-unit; engine bug")
        c = f.one
    if any(e % alpha for _, e in exps):
        return None
    for pi, e in exps:
        c = c * pi ** (e // alpha)
    return c


def _power_test_bounded(a: FieldElement, alpha: int) -> Optional[FieldElement]:
    f = a.field
    if any(abs(c.numerator) > _COORD_BOUND or c.denominator > _COORD_BOUND
           for c in a.coords):
        raise HeuristicInconclusive(
            f"{f.label}: coordinates exceed the search bound")
    if is_root_of_unity(a) is not None:
        return f.one
    # rational witnesses embed: a = omega * (rational c)^alpha
    if f.primitive_root is not None:
        omega = f.one
        for _ in range(f.torsion_order):
            b = a * omega               # a / omega^{-1}; powers enumerate all
            if all(c == 0 for c in b.coords[1:]):
                cand = _power_test_rational(f.from_rational(b.coords[0]), alpha)
                if cand is not None and is_root_of_unity(a / cand ** alpha) is not None:
                    return cand
            omega = omega * f.primitive_root
    # small-coordinate candidates
    n = f.abs_degree
    singles = [(i, v) for i in range(n) for v in _SEARCH_VALUES]
    for i, v in singles:
        coords = [0] * n
        coords[i] = v
        cand = f.element(coords)
        if is_root_of_unity(a / cand ** alpha) is not None:
            return cand
    for i in range(n):
        for j in range(i + 1, n):
            for vi in _SEARCH_VALUES:
                for vj in _SEARCH_VALUES:
                    coords = [0] * n
                    coords[i], coords[j] = vi, vj
                    cand = f.element(coords)
                    if is_root_of_unity(a / cand ** alpha) is not None:
                        return cand
    raise HeuristicInconclusive(
        f"{f.label}: no small witness for a {alpha}-th power up to a root of unity")


def power_test(a: FieldElement, alpha: int) -> Optional[FieldElement]:
    """Return c with c**alpha * (root of unity) = a, or None.

    Over the exact engines, None is a proof that no such c exists (unique
    factorization plus full knowledge of the unit group).  Over everything
    else the search raises HeuristicInconclusive instead of answering None.
    """
    if a.is_zero:
        raise ZeroInput("power test on zero")
    if alpha < 1:
        raise InputError("alpha must be positive")
    engine = classify_engine(a.field)
    if engine == "rational":
        return _power_test_rational(a, alpha)
    if engine == "imaginary_pid":
        return _power_test_quadratic(a, alpha, golden=False)
    if engine == "golden":
        return _power_test_quadratic(a, alpha, golden=True)
    return _power_test_bounded(a, alpha)
