"""Sparse multivariate polynomials with exact coefficients.

Variables are arbitrary orderable hashable keys (plain ints for the Schur
oracle, (i, j) pairs for the corner-block model).  A monomial is a sorted
tuple of (variable, exponent) pairs with positive exponents; coefficients
are ints or Fractions and zero coefficients are never stored.
"""

from __future__ import annotations

Monomial = tuple


def monomial(*pairs) -> Monomial:
    """Canonical monomial from (variable, exponent) pairs."""
    merged = {}
    for var, exp in pairs:
        merged[var] = merged.get(var, 0) + exp
    return tuple(sorted((v, e) for v, e in merged.items() if e != 0))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for var, exp in b:
        merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items()))


def monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class SparsePoly:
    """Immutable-by-convention dict of monomial -> nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {} if terms is None else {m: c for m, c in terms.items() if c}

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls()

    @classmethod
    def constant(cls, c) -> "SparsePoly":
        return cls({(): c}) if c else cls()

    @classmethod
    def variable(cls, var) -> "SparsePoly":
        return cls({((var, 1),): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, m: Monomial):
        return self.terms.get(m, 0)

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SparsePoly(out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return self.scale(other)
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return SparsePoly(out)

    def __rmul__(self, other) -> "SparsePoly":
        return self.scale(other)

    def scale(self, c) -> "SparsePoly":
        if not c:
            return SparsePoly()
        return SparsePoly({m: c * v for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "SparsePoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = SparsePoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def homogeneous_component(self, d: int) -> "SparsePoly":
        return SparsePoly({m: c for m, c in self.terms.items()
                           if monomial_degree(m) == d})

    def degrees_present(self) -> list[int]:
        return sorted({monomial_degree(m) for m in self.terms})

    def evaluate_all_ones(self):
        return sum(self.terms.values())

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def map_coefficients(self, f) -> "SparsePoly":
        return SparsePoly({m: f(c) for m, c in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"

        def var_name(v):
            if isinstance(v, tuple):
                return "y" + "".join(str(x) for x in v)
            return f"x{v}"

        def fmt(m, c):
            body = "*".join(var_name(v) + (f"^{e}" if e > 1 else "")
                            for v, e in m) or "1"
            if c == 1 and m:
                return body
            return f"{c}*{body}" if m else str(c)

        parts = [fmt(m, c) for m, c in sorted(self.terms.items())]
        return " + ".join(parts).replace("+ -", "- ")


def exponent_vector(m: Monomial, nvars: int) -> tuple[int, ...]:
    """Dense exponent tuple over integer variables 1..nvars."""
    out = [0] * nvars
    for var, exp in m:
        out[var - 1] = exp
    return tuple(out)


def from_exponent_vector(vec, coeff=1) -> tuple[Monomial, int]:
    return monomial(*((i + 1, e) for i, e in enumerate(vec) if e)), coeff
