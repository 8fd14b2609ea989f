"""Exact Clifford-algebra engine for the biregular Fueter map.

Polynomials and axial functions cross the boundary as plain dicts in the
same JSON document shapes the CLI reads and writes.
"""

from bireg._bireg import (
    BiregError,
    biregular_residuals,
    classical_fueter,
    double_factorial_product,
    eval_poly,
    fd_cr_residuals,
    fueter_map,
    is_biregular,
    lemma1_residual,
    run_job,
)

__all__ = [
    "BiregError",
    "biregular_residuals",
    "classical_fueter",
    "double_factorial_product",
    "eval_poly",
    "fd_cr_residuals",
    "fueter_map",
    "is_biregular",
    "lemma1_residual",
    "run_job",
]
