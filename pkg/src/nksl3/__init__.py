"""Exact verification toolkit for the invariant nearly Kähler geometry of
SL(3,R)/(R × SO(2)): field arithmetic, the adapted Lie algebra basis, the
invariant tensors and curvature, the totally geodesic almost complex
surface examples, and the tangency classification engine."""

from .exactfield import ONE, SQRT2, SQRT3, SQRT6, ZERO, FieldElem
from .liealg import AlgMat, FullVec, MVec

__version__ = "0.1.0"

__all__ = [
    "FieldElem", "ZERO", "ONE", "SQRT2", "SQRT3", "SQRT6",
    "AlgMat", "MVec", "FullVec",
    "__version__",
]
