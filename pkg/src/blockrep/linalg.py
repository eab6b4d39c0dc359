"""Exact linear algebra over the rationals: row echelon, rank, kernel.

Matrices are lists of rows; entries are ints or Fractions.  Everything is
dense -- the weight blocks this package produces stay small, and exactness
is the actual deliverable, so there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


def row_echelon(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (in place on a copy) and pivot columns."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: list[list]) -> int:
    return len(row_echelon(rows)[1])


def kernel_basis(rows: list[list], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right null space {x : M x = 0}.

    Basis vectors have a 1 in their free coordinate and are scaled to
    integer entries with content 1, which makes test expectations stable.
    """
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        echelon, pivots = [], []
    else:
        echelon, pivots = row_echelon(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -echelon[r][f]
        basis.append(_integralize(vec))
    return basis


def _integralize(vec: list[Fraction]) -> list[Fraction]:
    from math import gcd, lcm

    denom = lcm(*(x.denominator for x in vec)) if vec else 1
    scaled = [x * denom for x in vec]
    g = 0
    for x in scaled:
        g = gcd(g, x.numerator)
    if g > 1:
        scaled = [x / g for x in scaled]
    return scaled


def in_span(vectors: list[list], target: list) -> bool:
    """Is target a rational combination of the given vectors?"""
    if all(x == 0 for x in target):
        return True
    if not vectors:
        return False
    base = rank(vectors)
    return rank(vectors + [target]) == base
