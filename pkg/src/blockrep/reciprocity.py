"""Stable branching multiplicities and the two-sided coefficient identity.

The induced-module multiplicity of a pair of half-infinite weights is a
finite sum over Young diagrams of products of two tableau-rule
coefficients.  The same sum, run from the split halves of a finite mixed
weight, must reproduce the single mixed tensor coefficient at every large
enough rank -- the two sides are computed by deliberately independent
code paths (tableau rule on canonical partitions vs. determinant-shifted
partitions at finite rank) so that agreement is evidence, not tautology.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lr import DecompositionTable, lr_coefficient, rational_tensor_coefficient
from .partitions import (HalfInfiniteWeight, Partition, SemidominantWeight,
                         assemble_weight, embed_weight, format_partition,
                         is_dominant, partitions_of, split_weight,
                         weight_to_partition)


def _paired_sum(base1: Partition, target1: Partition,
                base2: Partition, target2: Partition) -> tuple[int, list]:
    """Sum over diagrams D of c^{target1}_{base1, D} * c^{target2}_{base2, D}.

    Degree bookkeeping pins |D|, so the sum has finitely many candidates;
    a size mismatch between the two factors forces zero.
    """
    d = target1.size - base1.size
    if d < 0 or d != target2.size - base2.size:
        return 0, []
    total = 0
    contributions = []
    for diagram in partitions_of(d):
        c1 = lr_coefficient(base1, diagram, target1)
        if not c1:
            continue
        c2 = lr_coefficient(base2, diagram, target2)
        if not c2:
            continue
        total += c1 * c2
        contributions.append((diagram, c1 * c2))
    return total, contributions


def induced_multiplicity(chi: SemidominantWeight, nu1: HalfInfiniteWeight,
                         nu2: HalfInfiniteWeight) -> int:
    """Multiplicity of the (nu1, nu2) block pair in the module induced
    from chi; independent of the central charge."""
    if nu1.kind != "-":
        raise ValueError("nu1 must be negative-type")
    if nu2.kind != "+":
        raise ValueError("nu2 must be positive-type")
    total, _ = _paired_sum(weight_to_partition(chi.chi1),
                           weight_to_partition(nu1),
                           weight_to_partition(chi.chi2),
                           weight_to_partition(nu2))
    return total


def reciprocity_lhs(nu, lam_minus: HalfInfiniteWeight,
                    mu_plus: HalfInfiniteWeight) -> tuple[int, list]:
    """Stable side of the identity: split nu and run the paired diagram sum."""
    if lam_minus.kind != "-":
        raise ValueError("lam_minus must be negative-type")
    if mu_plus.kind != "+":
        raise ValueError("mu_plus must be positive-type")
    big_minus, big_plus = split_weight(nu)
    return _paired_sum(weight_to_partition(big_minus),
                       weight_to_partition(lam_minus),
                       weight_to_partition(big_plus),
                       weight_to_partition(mu_plus))


def stable_rank_bound(nu, lam_minus: HalfInfiniteWeight,
                      mu_plus: HalfInfiniteWeight) -> int:
    """Smallest rank this package evaluates the finite side at."""
    support_nu = sum(1 for x in nu if x)
    return support_nu + lam_minus.support + mu_plus.support


@dataclass
class ReciprocityReport:
    nu: tuple
    lam_minus: HalfInfiniteWeight
    mu_plus: HalfInfiniteWeight
    lhs: int
    rhs_by_n: dict = field(default_factory=dict)
    stabilized: bool = False
    d_terms: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.stabilized and all(v == self.lhs
                                       for v in self.rhs_by_n.values())

    def to_json(self) -> dict:
        return {
            "nu": list(self.nu),
            "lambda_minus": self.lam_minus.to_json(),
            "mu_plus": self.mu_plus.to_json(),
            "lhs": self.lhs,
            "rhs_by_N": {str(n): v for n, v in sorted(self.rhs_by_n.items())},
            "stabilized": self.stabilized,
            "holds": self.holds,
            "D_terms": [{"D": format_partition(d), "contribution": c}
                        for d, c in self.d_terms],
        }


def reciprocity_check(nu, lam_minus: HalfInfiniteWeight,
                      mu_plus: HalfInfiniteWeight,
                      n_list: list[int]) -> ReciprocityReport:
    """Evaluate both sides of the identity, the finite side once per rank.

    Every rank must be at least the combined support of the three weights;
    smaller ranks cannot even hold the embedded weights and are rejected.
    """
    nu = tuple(int(x) for x in nu)
    if not is_dominant(nu):
        raise ValueError(f"nu must be dominant: {nu}")
    bound = stable_rank_bound(nu, lam_minus, mu_plus)
    for n in n_list:
        if n < bound:
            raise ValueError(
                f"rank {n} below the stable bound {bound} for this triple")
    lhs, terms = reciprocity_lhs(nu, lam_minus, mu_plus)
    nu_minus, nu_plus = split_weight(nu)
    rhs_by_n = {}
    for n in n_list:
        lam_n = embed_weight(lam_minus, n)
        mu_n = embed_weight(mu_plus, n)
        nu_n = assemble_weight(nu_minus, nu_plus, n)
        rhs_by_n[n] = rational_tensor_coefficient(lam_n, mu_n, nu_n, n)
    stabilized = len(set(rhs_by_n.values())) <= 1
    return ReciprocityReport(nu, lam_minus, mu_plus, lhs, rhs_by_n,
                             stabilized, terms)


def random_triples(count: int, size_bound: int, seed: int) -> list:
    """Seeded sample of identity-check cases: (nu, lam_minus, mu_plus, n_list).

    Rejection sampling over quadruples of partitions with sizes up to the
    bound, keeping those whose degree bookkeeping admits a nonempty diagram
    sum; ranks are the stable bound and the next two.
    """
    import random

    rng = random.Random(seed)
    pool = [list(partitions_of(s)) for s in range(size_bound + 1)]

    def pick() -> Partition:
        return rng.choice(pool[rng.randint(0, size_bound)])

    cases = []
    while len(cases) < count:
        head, tail, p_lam, p_mu = pick(), pick(), pick(), pick()
        if p_lam.size - tail.size != p_mu.size - head.size:
            continue
        if p_lam.size < tail.size:
            continue
        nu = tuple(head) + tuple(-r for r in reversed(tail))
        lam_minus = HalfInfiniteWeight("-", p_lam)
        mu_plus = HalfInfiniteWeight("+", p_mu)
        base = max(1, stable_rank_bound(nu, lam_minus, mu_plus))
        cases.append((nu, lam_minus, mu_plus, [base, base + 1, base + 2]))
    return cases


def kac_radul_table(nu, n: int, size_bound: int) -> DecompositionTable:
    """Branching table of the mixed-weight irreducible at rank n: all
    (negative-side, positive-side) dominant pairs within the size bound,
    with their tensor multiplicities against nu."""
    nu = tuple(int(x) for x in nu)
    if len(nu) != n:
        raise ValueError(f"nu must have length n={n}")
    if not is_dominant(nu):
        raise ValueError(f"nu must be dominant: {nu}")
    total = sum(nu)
    table = DecompositionTable()
    for neg_size in range(size_bound + 1):
        pos_size = total + neg_size
        if not 0 <= pos_size <= size_bound:
            continue
        for p_lam in partitions_of(neg_size, max_length=n):
            lam = tuple(0 for _ in range(n - len(p_lam))) + tuple(
                -r for r in reversed(p_lam))
            for p_mu in partitions_of(pos_size, max_length=n):
                mu = tuple(p_mu) + (0,) * (n - len(p_mu))
                c = rational_tensor_coefficient(lam, mu, nu, n)
                if c:
                    table[(Partition(p_lam), Partition(p_mu))] = c
    return table


def kac_radul_report(nu, n: int, size_bound: int) -> dict:
    table = kac_radul_table(nu, n, size_bound)
    return {
        "nu": list(nu),
        "N": n,
        "size_bound": size_bound,
        "entries": [
            {"lambda_body": list(p_lam), "mu_body": list(p_mu),
             "multiplicity": c}
            for (p_lam, p_mu), c in sorted(table.items())
        ],
    }
