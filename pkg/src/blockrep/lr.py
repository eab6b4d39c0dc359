"""Tensor-product multiplicities via the Littlewood-Richardson rule.

Two independent routes are kept deliberately separate:

* the tableau rule (`lr_coefficient`): count column-strict skew fillings
  whose reverse reading word is a lattice word;
* the Schur oracle (`schur_poly` + `decompose_symmetric`): multiply
  semistandard-tableau generating polynomials and eliminate leading
  monomials against the Schur basis.

`rational_tensor_coefficient` extends the rule to dominant gl_N weights
with negative entries by shifting with powers of the determinant.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import permutations

from .partitions import Partition, format_partition, is_dominant, partitions_of
from .poly import SparsePoly, exponent_vector, monomial


class DecompositionTable(dict):
    """Multiset of constituents: key -> multiplicity (positive ints)."""

    def to_json(self) -> dict:
        def key_str(k):
            if isinstance(k, tuple) and k and isinstance(k[0], Partition):
                return "|".join(format_partition(p) for p in k)
            return format_partition(k)

        return {key_str(k): int(v) for k, v in sorted(self.items())}

    def __str__(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def ssyt_count(shape: Partition, n: int) -> int:
    """Number of semistandard tableaux of the given shape with entries <= n."""
    return sum(1 for _ in iter_ssyt(shape, n))


def iter_ssyt(shape: Partition, n: int):
    """Yield semistandard tableaux (tuples of row tuples), entries in 1..n.

    Rows weakly increase, columns strictly increase.  Straightforward
    cell-by-cell backtracking; fine at desk scale.
    """
    if len(shape) > n:
        return
    rows = [[0] * r for r in shape]

    def fill(r, c):
        if r == len(shape):
            yield tuple(tuple(row) for row in rows)
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, n + 1):
            rows[r][c] = v
            yield from fill(nr, nc)

    if not shape:
        yield ()
        return
    yield from fill(0, 0)


def schur_poly(shape: Partition, n: int) -> SparsePoly:
    """Schur polynomial in variables x_1..x_n as the SSYT generating sum."""
    return _schur_poly_cached(Partition(shape), n)


@lru_cache(maxsize=None)
def _schur_poly_cached(shape: Partition, n: int) -> SparsePoly:
    terms: dict = {}
    for tab in iter_ssyt(shape, n):
        content = [0] * n
        for row in tab:
            for v in row:
                content[v - 1] += 1
        m = monomial(*((i + 1, e) for i, e in enumerate(content) if e))
        terms[m] = terms.get(m, 0) + 1
    return SparsePoly(terms)


@lru_cache(maxsize=None)
def _lr_count(outer: Partition, inner: Partition, content: Partition) -> int:
    """Count LR fillings of outer/inner with the given content.

    Cells are filled in reading order (each row right to left, top row
    first), so the lattice-word prefix condition and the column/row
    constraints can all be checked incrementally.
    """
    cells = []
    for r in range(len(outer)):
        lo = inner[r] if r < len(inner) else 0
        for c in range(outer[r] - 1, lo - 1, -1):
            cells.append((r, c))
    k = len(content)
    grid = {}
    used = [0] * (k + 1)
    total = 0

    def place(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        for v in range(1, k + 1):
            if used[v] >= content[v - 1]:
                continue
            if v > 1 and used[v] >= used[v - 1]:
                continue  # lattice word: #v never exceeds #(v-1) in any prefix
            right = grid.get((r, c + 1))
            if right is not None and v > right:
                continue  # rows weakly increase
            above = grid.get((r - 1, c))
            if above is not None and v <= above:
                continue  # columns strictly increase
            grid[(r, c)] = v
            used[v] += 1
            place(idx + 1)
            used[v] -= 1
            del grid[(r, c)]

    place(0)
    return total


def is_lattice_word(word) -> bool:
    """Every prefix contains at least as many i as i+1."""
    seen: dict = {}
    for v in word:
        seen[v] = seen.get(v, 0) + 1
        if v > 1 and seen[v] > seen.get(v - 1, 0):
            return False
    return True


def lr_fillings(outer: Partition, inner: Partition,
                content: Partition) -> list[dict]:
    """The actual fillings counted by lr_coefficient, as {(row, col): value}.

    Prefer lr_coefficient when only the number is needed; this rebuilds the
    search without the memoized fast path.
    """
    outer, inner, content = Partition(outer), Partition(inner), Partition(content)
    if (outer.size != inner.size + content.size
            or not outer.contains(inner)):
        return []
    cells = []
    for r in range(len(outer)):
        lo = inner[r] if r < len(inner) else 0
        for c in range(outer[r] - 1, lo - 1, -1):
            cells.append((r, c))
    k = len(content)
    grid: dict = {}
    used = [0] * (k + 1)
    out = []

    def place(idx):
        if idx == len(cells):
            out.append(dict(grid))
            return
        r, c = cells[idx]
        for v in range(1, k + 1):
            if used[v] >= content[v - 1]:
                continue
            if v > 1 and used[v] >= used[v - 1]:
                continue
            right = grid.get((r, c + 1))
            if right is not None and v > right:
                continue
            above = grid.get((r - 1, c))
            if above is not None and v <= above:
                continue
            grid[(r, c)] = v
            used[v] += 1
            place(idx + 1)
            used[v] -= 1
            del grid[(r, c)]

    place(0)
    return out


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of nu in the tensor product lambda (x) mu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size != lam.size + mu.size or not nu.contains(lam):
        return 0
    return _lr_count(nu, lam, mu)


def tensor_decompose(lam: Partition, mu: Partition,
                     row_bound: int | None = None) -> DecompositionTable:
    """All constituents nu of lambda (x) mu with their multiplicities."""
    lam, mu = Partition(lam), Partition(mu)
    max_len = len(lam) + len(mu)
    if row_bound is not None:
        max_len = min(max_len, row_bound)
    table = DecompositionTable()
    for nu in partitions_of(lam.size + mu.size, max_length=max_len):
        if not nu.contains(lam):
            continue
        if nu and nu[0] > lam.row(1) + mu.row(1):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            table[nu] = c
    return table


def is_symmetric(p: SparsePoly, n: int) -> bool:
    """Orbit-sum check: every monomial orbit is present with one coefficient."""
    seen = set()
    for m, c in p.terms.items():
        vec = exponent_vector(m, n)
        key = tuple(sorted(vec, reverse=True))
        if key in seen:
            continue
        seen.add(key)
        orbit = set(permutations(vec))
        for perm in orbit:
            mm = monomial(*((i + 1, e) for i, e in enumerate(perm) if e))
            if p.terms.get(mm, 0) != c:
                return False
    return True


def decompose_symmetric(p: SparsePoly, n: int) -> DecompositionTable:
    """Exact coefficients of p in the Schur basis of n variables.

    Peels the lexicographically leading monomial degree by degree; Schur
    polynomials are unitriangular in that order, so the loop terminates
    with integer coefficients and an exact zero remainder.
    """
    if any(not isinstance(v, int) or not 1 <= v <= n
           for v in p.variables()):
        raise ValueError(f"polynomial is not in variables x_1..x_{n}")
    if not is_symmetric(p, n):
        raise ValueError("polynomial is not symmetric in its variables")
    table = DecompositionTable()
    for d in p.degrees_present():
        piece = p.homogeneous_component(d)
        while piece:
            lead = max(exponent_vector(m, n) for m in piece.terms)
            if any(a < b for a, b in zip(lead, lead[1:])):
                raise ValueError("leading exponent is not a partition; "
                                 "input was not symmetric")
            shape = Partition(lead)
            coeff = piece.terms[monomial(*((i + 1, e)
                                           for i, e in enumerate(lead) if e))]
            piece = piece - schur_poly(shape, n).scale(coeff)
            table[shape] = table.get(shape, 0) + coeff
    for shape in [s for s, c in table.items() if c == 0]:
        del table[shape]
    return table


def _shift_to_partition(entries: tuple[int, ...]) -> tuple[Partition, int]:
    """Minimal determinant twist making a dominant weight polynomial."""
    shift = max(0, -min(entries)) if entries else 0
    return Partition(e + shift for e in entries), shift


def rational_tensor_coefficient(lam, mu, nu, n: int) -> int:
    """gl_n tensor multiplicity for dominant integral weights with any signs.

    Twist each factor by the smallest power of the determinant that makes
    it polynomial, match the twist on nu, and count LR fillings; the answer
    does not depend on the twists chosen.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if not (len(lam) == len(mu) == len(nu) == n):
        raise ValueError(f"weights must have length n={n}")
    for w in (lam, mu, nu):
        if not is_dominant(w):
            raise ValueError(f"weight is not dominant: {w}")
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    lam_p, k = _shift_to_partition(lam)
    mu_p, m = _shift_to_partition(mu)
    nu_shifted = tuple(e + k + m for e in nu)
    if nu_shifted and nu_shifted[-1] < 0:
        return 0
    return lr_coefficient(lam_p, mu_p, Partition(nu_shifted))


def rational_tensor_table(lam, mu, n: int,
                          size_bound: int) -> DecompositionTable:
    """All dominant nu with nonzero gl_n multiplicity in lambda (x) mu whose
    positive and negative parts each have size <= size_bound."""
    lam, mu = tuple(lam), tuple(mu)
    total = sum(lam) + sum(mu)
    table = DecompositionTable()
    for neg_size in range(size_bound + 1):
        pos_size = total + neg_size
        if not 0 <= pos_size <= size_bound:
            continue
        for head in partitions_of(pos_size):
            for tail in partitions_of(neg_size):
                if len(head) + len(tail) > n:
                    continue
                nu = (tuple(head) + (0,) * (n - len(head) - len(tail))
                      + tuple(-r for r in reversed(tail)))
                c = rational_tensor_coefficient(lam, mu, nu, n)
                if c:
                    table[nu] = c
    return table
