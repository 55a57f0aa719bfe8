"""Translation-invariant operators on finite abelian groups."""

from ._core import (
    FilterMatrix,
    GroupSpec,
    NotInvertible,
    ShapeError,
    __version__,
    adjoint,
    analyze,
    apply,
    benzi_bound,
    character,
    compose,
    convolve,
    dense_synthesis,
    densify,
    forward,
    inverse,
    inverse_filter,
    inverse_norm,
    operator_norm,
    riesz_analysis,
    symbol,
)

__all__ = [
    "FilterMatrix",
    "GroupSpec",
    "NotInvertible",
    "ShapeError",
    "__version__",
    "adjoint",
    "analyze",
    "apply",
    "benzi_bound",
    "character",
    "compose",
    "convolve",
    "dense_synthesis",
    "densify",
    "forward",
    "inverse",
    "inverse_filter",
    "inverse_norm",
    "operator_norm",
    "riesz_analysis",
    "symbol",
]
