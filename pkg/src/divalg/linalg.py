"""Exact Gaussian elimination over an arbitrary field.

Works on lists of lists whose entries support +, -, *, / and compare
equal to ``zero``.  Used with `fractions.Fraction` scalars and with
`FieldElement` values alike; no floating point anywhere.
"""

from __future__ import annotations

from .errors import NotInvertible


def _find_pivot(rows, col, start, zero):
    for r in range(start, len(rows)):
        if rows[r][col] != zero:
            return r
    return None


def solve(matrix, rhs, zero, one):
    """Solve ``matrix @ x = rhs`` for square ``matrix``; None if singular."""
    n = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = _find_pivot(aug, col, col, zero)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = one / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != zero:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def determinant(matrix, zero, one):
    """Determinant by fraction-full elimination; exact over a field."""
    n = len(matrix)
    rows = [list(r) for r in matrix]
    det = one
    for col in range(n):
        piv = _find_pivot(rows, col, col, zero)
        if piv is None:
            return zero
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = zero - det
        det = det * rows[col][col]
        inv = one / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col] != zero:
                f = rows[r][col] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return det


def invert(matrix, zero, one):
    """Inverse of a square matrix; raises NotInvertible when singular."""
    n = len(matrix)
    aug = [list(row) + [one if i == j else zero for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = _find_pivot(aug, col, col, zero)
        if piv is None:
            raise NotInvertible("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = one / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != zero:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class RowSpan:
    """Incremental row space with exact reduction; supports membership and
    dependency queries.  Rows are kept in echelon form."""

    def __init__(self, width, zero, one):
        self.width = width
        self.zero = zero
        self.one = one
        self.rows = []          # echelon rows
        self.pivots = []        # pivot column of each row

    def reduce(self, vec):
        """Return ``vec`` reduced against the current span."""
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != self.zero:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, vec):
        """Insert ``vec``; returns True if it enlarged the span."""
        v = self.reduce(vec)
        for col in range(self.width):
            if v[col] != self.zero:
                inv = self.one / v[col]
                v = [a * inv for a in v]
                self.rows.append(v)
                self.pivots.append(col)
                return True
        return False

    def contains(self, vec):
        v = self.reduce(vec)
        return all(a == self.zero for a in v)

    @property
    def rank(self):
        return len(self.rows)


def first_dependency(vectors, zero, one):
    """Feed vectors in order; return (index, coeffs) for the first vector that
    is a combination of the previous ones, with ``coeffs`` expressing it.
    Returns None if all are independent."""
    if not vectors:
        return None
    width = len(vectors[0])
    basis = []      # reduced rows
    history = []    # combination of inputs giving each reduced row
    for idx, vec in enumerate(vectors):
        v = list(vec)
        comb = [zero] * len(vectors)
        comb[idx] = one
        for (row, p), hist in zip(basis, history):
            if v[p] != zero:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
                comb = [a - f * b for a, b in zip(comb, hist)]
        pivot = next((c for c in range(width) if v[c] != zero), None)
        if pivot is None:
            # vec = -sum(comb[j] * vectors[j] for j < idx), comb[idx] = 1
            coeffs = [zero - comb[j] for j in range(idx)]
            return idx, coeffs
        inv = one / v[pivot]
        v = [a * inv for a in v]
        comb = [a * inv for a in comb]
        basis.append((v, pivot))
        history.append(comb)
    return None
