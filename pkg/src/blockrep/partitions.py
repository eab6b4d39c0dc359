"""Partitions, finite integer weights, and half-infinite weights.

A partition is stored as a weakly decreasing tuple of positive integers
(trailing zeros trimmed); it doubles as a Young diagram.  A half-infinite
weight is a finitely supported weight of a one-sided-infinite general
linear algebra: positive-type weights read (a_1, a_2, ..., 0, 0, ...)
along slots 1, 2, ...; negative-type weights read (..., 0, 0, -a_k, ...,
-a_1) along slots ..., -1, 0.  Both are canonically a (partition, sign)
pair, which makes "pad with more zeros" a no-op.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; () is the partition of 0."""

    def __new__(cls, rows: Iterable[int] = ()):
        rows = tuple(int(r) for r in rows)
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        for a, b in zip(rows, rows[1:]):
            if a < b:
                raise ValueError(f"rows must be weakly decreasing, got {rows}")
        if rows and rows[-1] < 0:
            raise ValueError(f"rows must be nonnegative, got {rows}")
        return super().__new__(cls, rows)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def row(self, i: int) -> int:
        """Row i (1-indexed), zero beyond the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def contains(self, other: "Partition") -> bool:
        """Diagram containment: other[i] <= self[i] for every row."""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for r in self if r >= c) for c in range(1, self[0] + 1))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)


def format_partition(p: Sequence[int]) -> str:
    """Bracketed comma list, e.g. [3,1,1]; the empty partition is []."""
    return "[" + ",".join(str(r) for r in p) + "]"


def parse_partition(text: str) -> Partition:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid partition syntax: {text!r}") from exc
    if not isinstance(rows, list) or not all(isinstance(r, int) for r in rows):
        raise ValueError(f"partition must be a list of integers: {text!r}")
    return Partition(rows)


def partitions_of(n: int, max_length: int | None = None,
                  max_row: int | None = None) -> Iterator[Partition]:
    """All partitions of n, optionally bounded in length and largest row."""
    if n < 0:
        return
    first_cap = n if max_row is None else min(n, max_row)

    def gen(remaining, cap, depth):
        if remaining == 0:
            yield ()
            return
        if max_length is not None and depth >= max_length:
            return
        for r in range(min(cap, remaining), 0, -1):
            for tail in gen(remaining - r, r, depth + 1):
                yield (r,) + tail

    for rows in gen(n, first_cap, 0):
        yield Partition(rows)


def partitions_up_to(n: int) -> Iterator[Partition]:
    """All partitions of every size 0..n."""
    for k in range(n + 1):
        yield from partitions_of(k)


POSITIVE = "+"
NEGATIVE = "-"


@dataclass(frozen=True)
class HalfInfiniteWeight:
    """Finitely supported dominant weight of a one-sided-infinite gl.

    kind "+": slots 1, 2, ... hold body[0], body[1], ..., then zeros.
    kind "-": slots ..., -1, 0 hold zeros, then -body[k-1], ..., -body[0],
    so slot 0 carries -body[0] (the most negative entry sits innermost).
    """

    kind: str
    body: Partition = field(default_factory=Partition)

    def __post_init__(self):
        if self.kind not in (POSITIVE, NEGATIVE):
            raise ValueError(f"kind must be '+' or '-', got {self.kind!r}")
        if not isinstance(self.body, Partition):
            object.__setattr__(self, "body", Partition(self.body))

    def slot(self, s: int) -> int:
        """Weight value on the diagonal matrix unit at slot s."""
        if self.kind == POSITIVE:
            if s < 1:
                raise ValueError(f"positive-type weight has no slot {s}")
            return self.body.row(s)
        if s > 0:
            raise ValueError(f"negative-type weight has no slot {s}")
        return -self.body.row(1 - s)

    @property
    def support(self) -> int:
        """Number of nonzero slots."""
        return len(self.body)

    def is_zero(self) -> bool:
        return not self.body

    def to_json(self) -> dict:
        return {"kind": self.kind, "body": list(self.body)}

    def __str__(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def positive_weight(body: Iterable[int]) -> HalfInfiniteWeight:
    return HalfInfiniteWeight(POSITIVE, Partition(body))


def negative_weight(body: Iterable[int]) -> HalfInfiniteWeight:
    return HalfInfiniteWeight(NEGATIVE, Partition(body))


def parse_half_weight(text: str) -> HalfInfiniteWeight:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid weight syntax: {text!r}") from exc
    if not isinstance(data, dict) or set(data) != {"kind", "body"}:
        raise ValueError(f'expected {{"kind":"+"|"-","body":[...]}}, got {text!r}')
    return HalfInfiniteWeight(data["kind"], Partition(data["body"]))


def weight_to_partition(w: HalfInfiniteWeight) -> Partition:
    """Canonical partition of a half-infinite weight (negate-reverse for '-')."""
    return w.body


def is_dominant(entries: Sequence[int]) -> bool:
    """A finite integer weight is dominant iff weakly decreasing."""
    return all(a >= b for a, b in zip(entries, entries[1:]))


def split_weight(nu: Sequence[int]) -> tuple[HalfInfiniteWeight, HalfInfiniteWeight]:
    """Split a dominant finite weight into (negative-type, positive-type) halves.

    The positive entries become the body of the positive-type half (slots
    1, 2, ...), the negative entries become the body of the negative-type
    half (innermost slot takes the least negative... i.e. the entries keep
    their order while interior zeros are dropped).  Padding nu with more
    interior zeros does not change the result.
    """
    nu = tuple(int(x) for x in nu)
    if not is_dominant(nu):
        raise ValueError(f"weight is not dominant: {nu}")
    head = Partition(x for x in nu if x > 0)
    tail = Partition(-x for x in reversed(nu) if x < 0)
    return negative_weight(tail), positive_weight(head)


def embed_weight(w: HalfInfiniteWeight, n: int) -> tuple[int, ...]:
    """Place a half-infinite weight into rank n: '+' fills the first slots,
    '-' fills the last slots (negated body reversed)."""
    if w.support > n:
        raise ValueError(f"rank {n} too small for support {w.support}")
    if w.kind == POSITIVE:
        return tuple(w.body) + (0,) * (n - len(w.body))
    return (0,) * (n - len(w.body)) + tuple(-r for r in reversed(w.body))


def assemble_weight(minus: HalfInfiniteWeight, plus: HalfInfiniteWeight,
                    n: int) -> tuple[int, ...]:
    """Inverse of split_weight at rank n: positive head, zeros, negative tail."""
    if plus.kind != POSITIVE or minus.kind != NEGATIVE:
        raise ValueError("expected a (negative-type, positive-type) pair")
    if plus.support + minus.support > n:
        raise ValueError(f"rank {n} too small to hold both halves")
    mid = n - plus.support - minus.support
    return (tuple(plus.body) + (0,) * mid
            + tuple(-r for r in reversed(minus.body)))


def partition_from_column_counts(l: Sequence[int]) -> Partition:
    """Partition whose Young diagram has l[k-1] columns of height k.

    Row i of the result is l_i + l_{i+1} + ... + l_n; this is a bijection
    from length-n count vectors onto partitions with at most n rows.  The
    counts double as the exponents of the corner determinants in the
    matching singular monomial det_1^{l_1} ... det_n^{l_n}.
    """
    l = tuple(int(x) for x in l)
    if any(x < 0 for x in l):
        raise ValueError(f"column counts must be nonnegative: {l}")
    rows = []
    total = 0
    for x in reversed(l):
        total += x
        rows.append(total)
    return Partition(reversed(rows))


def column_counts_from_partition(p: Partition, n: int) -> tuple[int, ...]:
    """Inverse of partition_from_column_counts at rank n (row differences)."""
    if len(p) > n:
        raise ValueError(f"partition {p} has more than {n} rows")
    rows = [p.row(i) for i in range(1, n + 2)]
    return tuple(rows[i] - rows[i + 1] for i in range(n))


def det_monomial_weight_pair(
        l: Sequence[int]) -> tuple[HalfInfiniteWeight, HalfInfiniteWeight]:
    """Highest-weight pair (negative side, positive side) of det_1^{l_1}...det_n^{l_n}.

    Both halves carry the same underlying partition: the positive side reads
    it off slots 1, 2, ... directly, the negative side negated and reversed.
    """
    body = partition_from_column_counts(l)
    return negative_weight(body), positive_weight(body)


@dataclass(frozen=True)
class SemidominantWeight:
    """Weight whose restrictions to the two diagonal block algebras are dominant.

    chi1 is the negative-side restriction (slots <= 0), chi2 the positive-side
    restriction (slots >= 1).  chi_centr records the value on the central
    coroot; the gap it encodes across the slot-0/slot-1 boundary is not
    constrained by dominance and may be negative.
    """

    chi1: HalfInfiniteWeight
    chi2: HalfInfiniteWeight
    chi_centr: int = 0

    def __post_init__(self):
        if self.chi1.kind != NEGATIVE:
            raise ValueError("chi1 must be negative-type")
        if self.chi2.kind != POSITIVE:
            raise ValueError("chi2 must be positive-type")

    def slot(self, s: int) -> int:
        return self.chi2.slot(s) if s >= 1 else self.chi1.slot(s)

    def is_zero(self) -> bool:
        return self.chi1.is_zero() and self.chi2.is_zero()

    def to_json(self) -> dict:
        return {"chi1": self.chi1.to_json(), "chi2": self.chi2.to_json(),
                "chi_centr": self.chi_centr}


ZERO_SEMIDOMINANT = SemidominantWeight(negative_weight(()), positive_weight(()))


def semidominant(chi1_body: Iterable[int], chi2_body: Iterable[int],
                 central_charge: int = 0) -> SemidominantWeight:
    """Build a semidominant weight from the two body partitions; chi_centr is
    the central-coroot value chi(E_00) - chi(E_11) + central charge."""
    chi1 = negative_weight(chi1_body)
    chi2 = positive_weight(chi2_body)
    centr = chi1.slot(0) - chi2.slot(1) + central_charge
    return SemidominantWeight(chi1, chi2, centr)
