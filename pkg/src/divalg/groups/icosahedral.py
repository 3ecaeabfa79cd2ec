"""The 120 unit quaternions of the binary icosahedral group, built exactly
over Q(sqrt 5) inside the Hamilton quaternions.

Coordinates: all signed permutations of (1,0,0,0); all (+-1 +-i +-j +-k)/2;
and the even coordinate permutations of (0, +-1, +-phi, +-1/phi)/2 with phi
the golden ratio.  Products are computed with the explicit Hamilton formula
over Z[phi] for speed and spot-checked against the generic algebra product.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations, product as iproduct

import numpy as np

from ..csa import AlgebraElement, CyclicAlgebra
from ..errors import InputError
from .tables import FiniteGroupTable

_HALF = Fraction(1, 2)


def _even_permutations():
    out = []
    for perm in permutations(range(4)):
        inversions = sum(1 for a in range(4) for b in range(a + 1, 4)
                         if perm[a] > perm[b])
        if inversions % 2 == 0:
            out.append(perm)
    return out


def _golden_mul(a, b):
    # (a0 + a1 phi)(b0 + b1 phi) with phi^2 = phi + 1
    c = a[1] * b[1]
    return (a[0] * b[0] + c, a[0] * b[1] + a[1] * b[0] + c)


def _golden_neg(a):
    return (-a[0], -a[1])


def _quat_mul(x, y):
    w1, x1, y1, z1 = x
    w2, x2, y2, z2 = y
    m = _golden_mul
    def add(*terms):
        s0 = s1 = Fraction(0)
        for t in terms:
            s0 += t[0]
            s1 += t[1]
        return (s0, s1)
    w = add(m(w1, w2), _golden_neg(m(x1, x2)), _golden_neg(m(y1, y2)), _golden_neg(m(z1, z2)))
    xx = add(m(w1, x2), m(x1, w2), m(y1, z2), _golden_neg(m(z1, y2)))
    yy = add(m(w1, y2), _golden_neg(m(x1, z2)), m(y1, w2), m(z1, x2))
    zz = add(m(w1, z2), m(x1, y2), _golden_neg(m(y1, x2)), m(z1, w2))
    return (w, xx, yy, zz)


def _icosian_coordinates():
    zero = (Fraction(0), Fraction(0))
    one = (Fraction(1), Fraction(0))
    phi = (Fraction(0), Fraction(1))
    phi_inv = (Fraction(-1), Fraction(1))         # 1/phi = phi - 1
    units = set()
    for pos in range(4):
        for sign in (1, -1):
            q = [zero] * 4
            q[pos] = (Fraction(sign), Fraction(0))
            units.add(tuple(q))
    for signs in iproduct((1, -1), repeat=4):
        units.add(tuple((Fraction(s, 2), Fraction(0)) for s in signs))
    pattern = (zero, one, phi, phi_inv)
    for perm in _even_permutations():
        base = [pattern[perm.index(i)] for i in range(4)]
        nonzero = [i for i in range(4) if base[i] != zero]
        for signs in iproduct((1, -1), repeat=3):
            q = list(base)
            for s, i in zip(signs, nonzero):
                q[i] = (s * q[i][0] * _HALF, s * q[i][1] * _HALF)
            units.add(tuple(q))
    return sorted(units)


def _to_algebra_element(alg: CyclicAlgebra, q) -> AlgebraElement:
    K = alg.splitting
    w, x, y, z = q
    c0 = K.element((w[0], w[1], x[0], x[1]))
    c1 = K.element((y[0], y[1], z[0], z[1]))
    return alg.element((c0, c1))


def binary_icosahedral(alg: CyclicAlgebra) -> tuple[list[AlgebraElement], FiniteGroupTable]:
    """The 120 icosian units and their multiplication table.

    Requires the Hamilton quaternions over Q(sqrt 5) presented with base
    polynomial t^2 - t - 1 (generator phi) and splitting step t^2 + 1.
    """
    if (alg.degree != 2 or alg.base.rel_poly != (-1, -1, 1)
            or alg.splitting.rel_poly != (1, 0, 1)
            or alg.a != alg.base.from_rational(-1)):
        raise InputError(
            "binary icosahedral units need Hamilton quaternions over Q(sqrt 5) "
            "with base generator the golden ratio")
    coords = _icosian_coordinates()
    if len(coords) != 120:
        raise InputError(f"expected 120 units, built {len(coords)}")
    index = {q: i for i, q in enumerate(coords)}
    table = np.empty((120, 120), dtype=np.int64)
    for i, a in enumerate(coords):
        for j, b in enumerate(coords):
            p = _quat_mul(a, b)
            k = index.get(p)
            if k is None:
                raise InputError("icosian set is not closed under multiplication")
            table[i, j] = k
    group = FiniteGroupTable(table)
    elements = [_to_algebra_element(alg, q) for q in coords]
    # spot-check the fast product against the generic algebra product
    rng = random.Random(0xA5)
    for _ in range(50):
        i, j = rng.randrange(120), rng.randrange(120)
        assert elements[i] * elements[j] == elements[int(table[i, j])]
    return elements, group
