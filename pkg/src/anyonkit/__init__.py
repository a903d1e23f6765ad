"""Quantum-group data for anyon models of rank one and two.

The package derives Clebsch-Gordan coefficients, F- and R-symbols and the
resulting topological data (quantum dimensions, twists, central charge) for
the deformations of A1, A2, B2 and G2 at the roots of unity picked out by an
integer level.  Everything is computed from the defining relations; closed
forms for the A1 series provide an independent cross-check.
"""

from __future__ import annotations

from .qarith import QContext
from .liealg import ALGEBRAS, AlgebraSpec, admissible_weights, classical_weight_system, conjugate_weight, get_algebra
from .tensor import decompose, fusion_rules
from .symbols import f_tensor, r_symbol, r_symbols, verify_hexagon, verify_pentagon
from .tqft import TheoryData, derive
from .document import build_document, load_document, render_markdown, verify_document

__version__ = "0.1.0"

__all__ = [
    "QContext",
    "ALGEBRAS",
    "AlgebraSpec",
    "get_algebra",
    "admissible_weights",
    "classical_weight_system",
    "conjugate_weight",
    "decompose",
    "fusion_rules",
    "f_tensor",
    "r_symbol",
    "r_symbols",
    "verify_pentagon",
    "verify_hexagon",
    "TheoryData",
    "derive",
    "build_document",
    "load_document",
    "verify_document",
    "render_markdown",
    "__version__",
]
