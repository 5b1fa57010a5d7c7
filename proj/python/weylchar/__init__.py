"""Exact characters, dimensions and tensor products of simple Lie algebras."""

from ._weylchar import (
    Algebra,
    ConsistencyError,
    InvalidArgument,
    builtin_algebras,
    weyl_dimension,
)

__all__ = [
    "Algebra",
    "ConsistencyError",
    "InvalidArgument",
    "builtin_algebras",
    "weyl_dimension",
]
