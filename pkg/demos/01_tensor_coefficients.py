"""Tensor product multiplicities three ways.

Walks through the tableau rule, the Schur-polynomial oracle, and the
determinant-shifted extension to dominant weights with negative entries,
showing that all routes agree on classic examples.
"""

from blockrep import (Partition, decompose_symmetric, lr_coefficient,
                      rational_tensor_coefficient, rational_tensor_table,
                      schur_poly, tensor_decompose)

P = Partition

print("== The tableau rule ==")
print("V (x) V for the natural module splits into sym + alt:")
print("   ", tensor_decompose(P([1]), P([1])))

print("\nThe classic multiplicity-two example, [2,1] (x) [2,1]:")
table = tensor_decompose(P([2, 1]), P([2, 1]))
for nu, mult in sorted(table.items()):
    print(f"    {str(nu):12s} {mult}")
print("    total constituents:", sum(table.values()))

print("\n== The independent Schur oracle ==")
print("s_[2,1] in three variables is the tableau generating polynomial:")
p = schur_poly(P([2, 1]), 3)
print("   ", p)
print("    value at x=1 (the dimension):", p.evaluate_all_ones())

print("\nMultiplying Schur polynomials and eliminating leading monomials")
print("recovers the same table as the tableau rule:")
prod = schur_poly(P([2, 1]), 6) * schur_poly(P([2, 1]), 6)
oracle = decompose_symmetric(prod, 6)
print("    oracle agrees with tableau rule:", dict(oracle) == dict(table))

print("\n== Dominant weights with negative entries ==")
print("V (x) V* at rank 4: multiplicity of the adjoint weight and of zero:")
v_star, v = (0, 0, 0, -1), (1, 0, 0, 0)
print("    adjoint:", rational_tensor_coefficient(v_star, v, (1, 0, 0, -1), 4))
print("    trivial:", rational_tensor_coefficient(v_star, v, (0, 0, 0, 0), 4))
print("    full table within size bound 2:")
for nu, mult in sorted(rational_tensor_table(v_star, v, 4, 2).items()):
    print(f"        {nu}: {mult}")

print("\nSingle coefficients memoize, so repeated queries are cheap:")
print("    c^[3,2,1]_[2,1],[2,1] =",
      lr_coefficient(P([2, 1]), P([2, 1]), P([3, 2, 1])))
