"""Polynomial model of the lower-left corner block of gl_{2n}.

The abelian corner block has coordinates y_{ij} (i, j = 1..n), one for the
matrix unit in row n+i, column n+1-j; the symmetric algebra on the block is
the polynomial ring in the y_{ij}.  The two diagonal block subalgebras act
by derivations, and every substitution rule here is derived from the
matrix-unit bracket in gl_{2n} rather than hand-coded, so the singular
vector computations below genuinely test the determinant claims.

The k x k corner determinants det_k are the generators of the joint
raising kernel; their products realize every singular vector, one per
partition, which is verified degree by degree by exact rank computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import comb

from .linalg import in_span, kernel_basis
from .lr import ssyt_count
from .partitions import (det_monomial_weight_pair,
                         partition_from_column_counts, partitions_of)
from .poly import SparsePoly, monomial, monomial_mul

GL1, GL2 = 1, 2


def gl2n_bracket(n: int, ab: tuple[int, int], cd: tuple[int, int]) -> dict:
    """[E_ab, E_cd] in gl_{2n} as a dict (row, col) -> int coefficient."""
    (a, b), (c, d) = ab, cd
    out: dict = {}
    if b == c:
        out[(a, d)] = out.get((a, d), 0) + 1
    if d == a:
        out[(c, b)] = out.get((c, b), 0) - 1
    return {k: v for k, v in out.items() if v}


def _embed(n: int, block: int, a: int, b: int) -> tuple[int, int]:
    """Matrix-unit position of E_ab taken inside block 1 or block 2."""
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"block index out of range: ({a},{b}) for n={n}")
    off = 0 if block == GL1 else n
    return (a + off, b + off)


def _corner_position(n: int, i: int, j: int) -> tuple[int, int]:
    return (n + i, n + 1 - j)


@lru_cache(maxsize=None)
def variable_action(n: int, block: int, a: int, b: int) -> tuple:
    """Substitution rule of E_ab^(block) on the variables: for each y_{ij},
    the (target variable, coefficient) it maps to, or None."""
    gen = _embed(n, block, a, b)
    rules = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            br = gl2n_bracket(n, gen, _corner_position(n, i, j))
            if not br:
                continue
            items = []
            for (r, c), coeff in br.items():
                if not (n + 1 <= r <= 2 * n and 1 <= c <= n):
                    raise AssertionError(
                        "diagonal block action left the corner block")
                items.append(((r - n, n + 1 - c), coeff))
            rules[(i, j)] = tuple(items)
    return tuple(sorted(rules.items()))


def block_generator_action(n: int, block: int, a: int, b: int,
                           p: SparsePoly) -> SparsePoly:
    """Derivation action of E_ab^(block) on a polynomial in the y_{ij}."""
    rules = dict(variable_action(n, block, a, b))
    out = SparsePoly()
    for mono, coeff in p.terms.items():
        for idx, (var, exp) in enumerate(mono):
            subs = rules.get(var)
            if not subs:
                continue
            rest = mono[:idx] + ((var, exp - 1),) if exp > 1 else mono[:idx]
            rest = rest + mono[idx + 1:]
            rest = tuple(sorted(rest))
            for target, c in subs:
                term = monomial_mul(rest, ((target, 1),))
                out = out + SparsePoly({term: coeff * exp * c})
    return out


def simple_raisings(n: int) -> list[tuple[int, int, int]]:
    """Simple raising generators of both diagonal blocks: (block, a, a+1)."""
    gens = []
    for block in (GL1, GL2):
        for a in range(1, n):
            gens.append((block, a, a + 1))
    return gens


def raising_action(g: tuple[int, int, int], p: SparsePoly, n: int) -> SparsePoly:
    block, a, b = g
    if b != a + 1:
        raise ValueError(f"not a simple raising generator: {g}")
    return block_generator_action(n, block, a, b, p)


def det_k(k: int, n: int) -> SparsePoly:
    """k x k corner determinant: (-1)^(k+1) det[(y_ij)_{i,j<=k}], so
    det_2 = y_12 y_21 - y_11 y_22.

    The alternating prefactor is the orientation under which the closed
    commutator formula of the band model holds with its stated signs; it
    is invisible to every singularity or span statement.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    orient = 1 if k % 2 == 1 else -1
    terms: dict = {}
    for sigma in permutations(range(1, k + 1)):
        sign = orient * _perm_sign(sigma)
        m = monomial(*(((r, sigma[r - 1]), 1) for r in range(1, k + 1)))
        terms[m] = terms.get(m, 0) + sign
    return SparsePoly(terms)


def _perm_sign(sigma) -> int:
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


def det_monomial(l, n: int) -> SparsePoly:
    """Product det_1^{l_1} * ... * det_n^{l_n}."""
    out = SparsePoly.constant(1)
    for k, e in enumerate(l, start=1):
        if e:
            out = out * det_k(k, n) ** e
    return out


def variable_weight(n: int, var: tuple[int, int]) -> tuple[tuple, tuple]:
    """Diagonal eigenvalues of y_{ij}: (block-1 vector, block-2 vector)."""
    i, j = var
    w1 = tuple(-1 if j == n + 1 - a else 0 for a in range(1, n + 1))
    w2 = tuple(1 if i == a else 0 for a in range(1, n + 1))
    return w1, w2


def monomial_weight(n: int, mono) -> tuple[tuple, tuple]:
    w1 = [0] * n
    w2 = [0] * n
    for (i, j), e in mono:
        w1[n - j] -= e
        w2[i - 1] += e
    return tuple(w1), tuple(w2)


def degree_monomials(n: int, d: int) -> list:
    """All degree-d monomials in the n x n variable grid."""
    variables = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    out = []
    for combo in combinations_with_replacement(variables, d):
        counts: dict = {}
        for v in combo:
            counts[v] = counts.get(v, 0) + 1
        out.append(tuple(sorted(counts.items())))
    return out


def column_count_vectors(n: int, d: int) -> list[tuple[int, ...]]:
    """All (l_1..l_n) with sum k*l_k = d: one singular monomial each."""
    out = []

    def rec(k, remaining, acc):
        if k > n:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for e in range(remaining // k + 1):
            rec(k + 1, remaining - k * e, acc + [e])

    rec(1, d, [])
    return out


@dataclass
class WeightGradedComponent:
    degree: int
    weight: tuple[tuple, tuple]
    basis: list
    kernel: list

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel)


def singular_space(n: int, d: int) -> list[WeightGradedComponent]:
    """Joint kernel of all simple raising generators on each weight block
    of the degree-d polynomials, by exact rational elimination."""
    monos = degree_monomials(n, d)
    index = {m: i for i, m in enumerate(monos)}
    blocks: dict = {}
    for m in monos:
        blocks.setdefault(monomial_weight(n, m), []).append(m)
    gens = simple_raisings(n)
    components = []
    for weight, basis in sorted(blocks.items()):
        rows_by_target: dict = {}
        for col, m in enumerate(basis):
            src = SparsePoly({m: 1})
            for gi, g in enumerate(gens):
                img = raising_action(g, src, n)
                for tm, c in img.terms.items():
                    rows_by_target.setdefault((gi, index[tm]),
                                              [0] * len(basis))[col] = c
        matrix = list(rows_by_target.values())
        kern = kernel_basis(matrix, ncols=len(basis))
        if kern:
            components.append(WeightGradedComponent(d, weight, basis, kern))
    return components


def singular_space_report(n: int, d: int) -> dict:
    """JSON-friendly summary of singular_space plus the predicted count."""
    comps = singular_space(n, d)
    total = sum(c.kernel_dim for c in comps)
    expected = len(column_count_vectors(n, d))
    return {
        "n": n,
        "degree": d,
        "kernel_dim": total,
        "expected_kernel_dim": expected,
        "blocks": [
            {"weight": [list(c.weight[0]), list(c.weight[1])],
             "block_dim": len(c.basis), "kernel_dim": c.kernel_dim}
            for c in comps
        ],
    }


def det_products_span_check(n: int, d: int) -> bool:
    """The singular monomials of degree d are independent and span the
    joint raising kernel."""
    comps = singular_space(n, d)
    index: dict = {}
    for c in comps:
        for m in c.basis:
            index[m] = (c, c.basis.index(m))
    vectors = []
    for l in column_count_vectors(n, d):
        poly = det_monomial(l, n)
        comp = None
        for m in poly.terms:
            if m not in index:
                return False
            if comp is None:
                comp = index[m][0]
            elif index[m][0] is not comp:
                return False
        vec = [0] * len(comp.basis)
        for m, coeff in poly.terms.items():
            vec[comp.basis.index(m)] = coeff
        if not in_span(comp.kernel, vec):
            return False
        vectors.append((comp.weight, vec))
    from .linalg import rank
    by_weight: dict = {}
    for w, v in vectors:
        by_weight.setdefault(w, []).append(v)
    independent = sum(rank(vs) for vs in by_weight.values())
    total_kernel = sum(c.kernel_dim for c in comps)
    return independent == len(vectors) == total_kernel


def cauchy_character_check(n: int, d_max: int) -> dict:
    """Dimension count underlying the square-pairing decomposition of the
    polynomial ring: dim of degree d equals the sum over partitions of
    (number of SSYT with n rows allowed) squared."""
    rows = []
    ok = True
    for d in range(d_max + 1):
        lhs = comb(n * n + d - 1, d) if d > 0 else 1
        per = [(p, ssyt_count(p, n)) for p in partitions_of(d, max_length=n)]
        rhs = sum(c * c for _, c in per)
        ok = ok and lhs == rhs
        rows.append({"degree": d, "lhs_dim": lhs, "rhs_dim": rhs,
                     "partitions": {str(p): c for p, c in per}})
    return {"n": n, "d_max": d_max, "pass": ok, "rows": rows}


def model_report(n: int, d_max: int) -> dict:
    """One record per degree: both sides of the graded dimension identity
    together with the measured and predicted joint kernel dimensions and
    the partition list realized at that degree."""
    rows = []
    for d in range(d_max + 1):
        lhs = comb(n * n + d - 1, d) if d > 0 else 1
        per = [(p, ssyt_count(p, n)) for p in partitions_of(d, max_length=n)]
        kernel = sum(c.kernel_dim for c in singular_space(n, d))
        counts = column_count_vectors(n, d)
        rows.append({
            "degree": d,
            "lhs_dim": lhs,
            "rhs_dim": sum(c * c for _, c in per),
            "kernel_dim": kernel,
            "expected_kernel_dim": len(counts),
            "partitions": [str(partition_from_column_counts(l))
                           for l in counts],
        })
    return {"n": n, "d_max": d_max, "rows": rows,
            "pass": all(r["lhs_dim"] == r["rhs_dim"]
                        and r["kernel_dim"] == r["expected_kernel_dim"]
                        for r in rows)}


def cartan_eigenvalue(n: int, block: int, a: int, p: SparsePoly):
    """Eigenvalue of E_aa^(block) on p, or raise if p is not an eigenvector."""
    img = block_generator_action(n, block, a, a, p)
    if p.is_zero():
        return 0
    first_m, first_c = next(iter(p.terms.items()))
    lam = Fraction(img.terms.get(first_m, 0), 1) / first_c
    if img != p.scale(lam):
        raise ValueError("not a weight vector")
    return lam


def decomposition_report(n: int, d_max: int) -> dict:
    """Partition-by-partition account of the degree <= d_max singular
    monomials, with their diagonal weights checked against the predicted
    half-infinite weight pair."""
    per_degree = []
    for d in range(d_max + 1):
        entries = []
        for l in column_count_vectors(n, d):
            part = partition_from_column_counts(l)
            w_minus, w_plus = det_monomial_weight_pair(l)
            poly = det_monomial(l, n)
            expected_w1 = tuple(w_minus.slot(a - n) for a in range(1, n + 1))
            expected_w2 = tuple(w_plus.slot(a) for a in range(1, n + 1))
            actual_w1 = tuple(cartan_eigenvalue(n, GL1, a, poly)
                              for a in range(1, n + 1))
            actual_w2 = tuple(cartan_eigenvalue(n, GL2, a, poly)
                              for a in range(1, n + 1))
            entries.append({
                "column_counts": list(l),
                "partition": str(part),
                "multiplicity": 1,
                "weights_match": (expected_w1 == actual_w1
                                  and expected_w2 == actual_w2),
            })
        per_degree.append({"degree": d, "entries": entries})
    return {"n": n, "d_max": d_max, "degrees": per_degree,
            "pass": all(e["weights_match"]
                        for deg in per_degree for e in deg["entries"])}
