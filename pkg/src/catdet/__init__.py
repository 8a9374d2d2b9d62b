"""catdet: exact determinant identities for Catalan-like sequences.

A library and CLI that builds Hankel and generalised-Catalan matrix
families, evaluates them with several independent exact determinant
engines, evaluates the matching closed-form products and sums, and
cross-verifies both sides against brute-force non-intersecting
lattice-path enumeration.  All arithmetic is exact.
"""

from .engines import (ENGINES, DetResult, det, det_condensation,
                      det_fraction_free, det_laplace, det_rational_elim)
from .formulas import RhsUndefinedError
from .matrices import ExactMatrix, MatrixParseError
from .paths import (LatticePath, LatticePoint, PathSystemConfig,
                    count_nonintersecting, count_paths, enumerate_paths,
                    lgv_determinant, render_ascii)
from .registry import REGISTRY, IdentityCase, VerificationReport, run_case, run_grid
from .sequences import SequenceSpec, catalan, fibonacci, gen_catalan, ternary

__version__ = "0.1.0"

__all__ = [
    "ENGINES", "DetResult", "det", "det_condensation", "det_fraction_free",
    "det_laplace", "det_rational_elim", "RhsUndefinedError", "ExactMatrix",
    "MatrixParseError", "LatticePath", "LatticePoint", "PathSystemConfig",
    "count_nonintersecting", "count_paths", "enumerate_paths",
    "lgv_determinant", "render_ascii", "REGISTRY", "IdentityCase",
    "VerificationReport", "run_case", "run_grid", "SequenceSpec", "catalan",
    "fibonacci", "gen_catalan", "ternary", "__version__",
]
