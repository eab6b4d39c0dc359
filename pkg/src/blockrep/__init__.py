"""Exact computational representation theory for block matrix algebras.

The package computes tensor-product (Littlewood-Richardson) multiplicities
with an independent Schur-polynomial oracle, decomposes the symmetric
algebra on an abelian corner block under the two diagonal block algebras,
searches induced modules of the centrally extended infinite matrix algebra
for singular vectors, and verifies the stable branching identity relating
half-infinite and finite-rank tensor coefficients.  All arithmetic is
exact (integers and Fractions).
"""

from .ghat import (BandElement, BandEscapeError, InducedModule, bracket,
                   commutator_formula_check, corner_det, search_report,
                   singular_search)
from .lr import (DecompositionTable, decompose_symmetric, lr_coefficient,
                 rational_tensor_coefficient, rational_tensor_table,
                 schur_poly, ssyt_count, tensor_decompose)
from .partitions import (ZERO_SEMIDOMINANT, HalfInfiniteWeight, Partition,
                         SemidominantWeight, column_counts_from_partition,
                         det_monomial_weight_pair, embed_weight,
                         format_partition, negative_weight, parse_half_weight,
                         parse_partition, partition_from_column_counts,
                         partitions_of, positive_weight, semidominant,
                         split_weight, weight_to_partition)
from .poly import SparsePoly
from .polymodel import (cauchy_character_check, decomposition_report, det_k,
                        det_monomial, model_report, raising_action,
                        singular_space, singular_space_report)
from .reciprocity import (ReciprocityReport, induced_multiplicity,
                          kac_radul_report, kac_radul_table, reciprocity_check,
                          reciprocity_lhs, stable_rank_bound)

__all__ = [
    "ZERO_SEMIDOMINANT",
    "BandElement", "BandEscapeError", "DecompositionTable",
    "HalfInfiniteWeight", "InducedModule", "Partition", "ReciprocityReport",
    "SemidominantWeight", "SparsePoly", "bracket", "cauchy_character_check",
    "column_counts_from_partition", "commutator_formula_check", "corner_det",
    "decompose_symmetric", "decomposition_report", "det_k", "det_monomial",
    "det_monomial_weight_pair", "embed_weight", "format_partition",
    "induced_multiplicity", "kac_radul_report", "kac_radul_table",
    "lr_coefficient", "model_report", "negative_weight", "parse_half_weight",
    "parse_partition", "partition_from_column_counts", "partitions_of",
    "positive_weight", "raising_action", "rational_tensor_coefficient",
    "rational_tensor_table", "reciprocity_check", "reciprocity_lhs",
    "schur_poly", "search_report", "semidominant", "singular_search",
    "singular_space", "singular_space_report", "split_weight", "ssyt_count",
    "stable_rank_bound", "tensor_decompose", "weight_to_partition",
]

__version__ = "0.1.0"
