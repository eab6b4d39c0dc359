"""Triangular-pattern weight bases for finite-dimensional gl_m irreducibles.

A basis vector is a triangular array of integer rows (top row = the highest
weight, which may have negative entries); consecutive rows interlace.  The
simple generators act with the classical rational matrix elements, so the
whole module is exact over Fractions.  Non-simple matrix units are built
from commutators of simple ones and memoized.

The trivial module (zero top row) has a single pattern, so modules built
from an empty weight stay one-dimensional no matter the rank.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Pattern = tuple  # tuple of row tuples, longest (top) row first


def _interlacing(upper: tuple, lower: tuple) -> bool:
    return all(upper[i] >= lower[i] >= upper[i + 1] for i in range(len(lower)))


def enumerate_patterns(top: tuple) -> list[Pattern]:
    out: list[Pattern] = []

    def rec(acc):
        upper = acc[-1]
        if len(upper) == 1:
            out.append(tuple(acc))
            return
        k = len(upper) - 1

        def fill(idx, row):
            if idx == k:
                rec(acc + [tuple(row)])
                return
            hi = upper[idx]
            lo = upper[idx + 1]
            for v in range(lo, hi + 1):
                fill(idx + 1, row + [v])

        fill(0, [])

    rec([tuple(top)])
    return out


class WeightBasisModule:
    """Irreducible gl_m module with an explicit weight basis.

    `top` is the highest weight (weakly decreasing integers, length m).
    Matrix units are exposed as sparse column maps: matrix(a, b)[i] is a
    dict {j: coefficient} with E_ab . v_i = sum_j coeff * v_j.
    """

    def __init__(self, top):
        top = tuple(int(x) for x in top)
        if any(a < b for a, b in zip(top, top[1:])):
            raise ValueError(f"highest weight must be dominant: {top}")
        self.rank = len(top)
        self.top = top
        self.patterns = enumerate_patterns(top)
        self.index = {p: i for i, p in enumerate(self.patterns)}
        self.dim = len(self.patterns)
        self._matrices: dict = {}

    def weight(self, i: int) -> tuple:
        pat = self.patterns[i]
        sums = [sum(row) for row in pat] + [0]
        # pat[0] is the top row (length m), pat[-1] has length 1
        return tuple(sums[self.rank - k] - sums[self.rank - k + 1]
                     for k in range(1, self.rank + 1))

    @property
    def highest_index(self) -> int:
        for i, pat in enumerate(self.patterns):
            if self.weight(i) == self.top:
                return i
        raise AssertionError("highest weight vector missing")

    def matrix(self, a: int, b: int) -> list[dict]:
        """Column maps of E_ab (1-indexed, 1 <= a, b <= rank)."""
        key = (a, b)
        if key in self._matrices:
            return self._matrices[key]
        if not (1 <= a <= self.rank and 1 <= b <= self.rank):
            raise ValueError(f"matrix unit ({a},{b}) outside rank {self.rank}")
        if a == b:
            mat = [{i: Fraction(self.weight(i)[a - 1])}
                   if self.weight(i)[a - 1] else {}
                   for i in range(self.dim)]
        elif b == a + 1:
            mat = [self._raise_simple(i, a) for i in range(self.dim)]
        elif a == b + 1:
            mat = [self._lower_simple(i, b) for i in range(self.dim)]
        elif a < b:
            mat = _commutator(self.matrix(a, b - 1), self.matrix(b - 1, b),
                              self.dim)
        else:
            mat = _commutator(self.matrix(a, b + 1), self.matrix(b + 1, b),
                              self.dim)
        self._matrices[key] = mat
        return mat

    def _row(self, pat: Pattern, k: int) -> tuple:
        """Row of length k (counting from the bottom of the triangle)."""
        return pat[self.rank - k]

    def _shifted(self, pat: Pattern, k: int, i: int, delta: int) -> Pattern | None:
        rows = [list(r) for r in pat]
        rows[self.rank - k][i] += delta
        new = tuple(tuple(r) for r in rows)
        for upper, lower in zip(new, new[1:]):
            if not _interlacing(upper, lower):
                return None
        return new

    def _raise_simple(self, idx: int, k: int) -> dict:
        """E_{k,k+1} on basis vector idx."""
        pat = self.patterns[idx]
        row_k = self._row(pat, k)
        row_up = self._row(pat, k + 1)
        l_k = [row_k[i] - i for i in range(k)]
        l_up = [row_up[i] - i for i in range(k + 1)]
        out: dict = {}
        for i in range(k):
            target = self._shifted(pat, k, i, +1)
            if target is None:
                continue
            num = Fraction(1)
            for j in range(k + 1):
                num *= l_k[i] - l_up[j]
            den = Fraction(1)
            for j in range(k):
                if j != i:
                    den *= l_k[i] - l_k[j]
            coeff = -num / den
            if coeff:
                out[self.index[target]] = out.get(self.index[target], 0) + coeff
        return out

    def _lower_simple(self, idx: int, k: int) -> dict:
        """E_{k+1,k} on basis vector idx."""
        pat = self.patterns[idx]
        row_k = self._row(pat, k)
        l_k = [row_k[i] - i for i in range(k)]
        if k >= 2:
            row_dn = self._row(pat, k - 1)
            l_dn = [row_dn[i] - i for i in range(k - 1)]
        else:
            l_dn = []
        out: dict = {}
        for i in range(k):
            target = self._shifted(pat, k, i, -1)
            if target is None:
                continue
            num = Fraction(1)
            for j in range(k - 1):
                num *= l_k[i] - l_dn[j]
            den = Fraction(1)
            for j in range(k):
                if j != i:
                    den *= l_k[i] - l_k[j]
            coeff = num / den
            if coeff:
                out[self.index[target]] = out.get(self.index[target], 0) + coeff
        return out

    def apply(self, a: int, b: int, vec: dict) -> dict:
        """Apply E_ab to a sparse vector {index: coefficient}."""
        mat = self.matrix(a, b)
        out: dict = {}
        for i, c in vec.items():
            for j, m in mat[i].items():
                s = out.get(j, 0) + c * m
                if s:
                    out[j] = s
                else:
                    del out[j]
        return out


def _commutator(m1: list[dict], m2: list[dict], dim: int) -> list[dict]:
    """[M1, M2] for sparse column maps."""
    out = []
    for i in range(dim):
        col: dict = {}
        for j, c in m2[i].items():
            for k, d in m1[j].items():
                s = col.get(k, 0) + c * d
                if s:
                    col[k] = s
                else:
                    del col[k]
        for j, c in m1[i].items():
            for k, d in m2[j].items():
                s = col.get(k, 0) - c * d
                if s:
                    col[k] = s
                else:
                    del col[k]
        out.append(col)
    return out


def weyl_dimension(top: tuple) -> int:
    """Product formula for the dimension, used as an independent check."""
    m = len(top)
    num = 1
    den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= top[i] - top[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def cached_module(top: tuple) -> WeightBasisModule:
    return WeightBasisModule(top)
