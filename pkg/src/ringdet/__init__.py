"""Exact linear algebra over commutative rings with unit.

Determinants and characteristic polynomials computed by a division-free,
parallelizable formula, cross-checked against four independent baseline
algorithms, with instrumentation that counts ring operations and measures
the critical-path depth of the computation.
"""

from .baselines import (charpoly_berkowitz, charpoly_csanky, det_chio,
                        det_from_charpoly, det_permutation)
from .bench import (ScalingRow, fit_loglog_slope, run_one, run_scaling,
                    seeded_matrix)
from .errors import (AlgorithmRefusal, HypothesisNotSatisfied, InversionError,
                     ParseError, UsageError)
from .instrument import CountingRing, OpStats
from .matrices import (MatMulCounter, Matrix, diag_entries_of_powers,
                       dump_matrix, load_matrix, matrix_from_json,
                       matrix_to_json)
from .pipeline import (balanced_product, char_poly, determinant, factor_poly,
                       rev_charpoly, verify_telescoping)
from .rings import (INTEGERS, RATIONALS, IntegerRing, ModularRing,
                    PolynomialRing, RationalRing, Ring, ring_from_spec,
                    tree_sum)
from .series import CharPoly, TruncPoly

__version__ = "0.1.0"

__all__ = [
    "AlgorithmRefusal", "CharPoly", "CountingRing", "HypothesisNotSatisfied",
    "INTEGERS", "IntegerRing", "InversionError", "MatMulCounter", "Matrix",
    "ModularRing", "OpStats", "ParseError", "PolynomialRing", "RATIONALS",
    "RationalRing", "Ring", "ScalingRow", "TruncPoly", "UsageError",
    "balanced_product", "char_poly", "charpoly_berkowitz", "charpoly_csanky",
    "det_chio", "det_from_charpoly", "det_permutation",
    "diag_entries_of_powers", "determinant", "dump_matrix",
    "factor_poly", "fit_loglog_slope", "load_matrix", "matrix_from_json",
    "matrix_to_json", "rev_charpoly", "ring_from_spec", "run_one",
    "run_scaling", "seeded_matrix", "tree_sum", "verify_telescoping",
]
