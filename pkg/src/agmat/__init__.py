"""Affine groupoids x*y = (t*x + u*y) mod n over residues and residue matrices.

Builds the groupoids, decides their algebraic classes by exhaustive search and
by closed-form conditions on (n, t, u), and classifies every parameter pair of
a modulus.
"""

from agmat.errors import (
    AgmatError,
    BoundError,
    InconsistencyError,
    MatrixFormatError,
    ModulusError,
    ModulusMismatchError,
    ShapeMismatchError,
)
from agmat.modring import ZMod, add_mod, gcd, is_prime, is_unit, mul_mod, norm
from agmat.groupoid import (
    CayleyTable,
    ParamGroupoid,
    TypeClass,
    cayley_table,
    classify_type,
    make_groupoid,
    op,
)
from agmat.matrix import MatZ, mat_op, parse_matrix, scalar_matrix, serialize_matrix

__version__ = "0.1.0"

__all__ = [
    "AgmatError",
    "BoundError",
    "CayleyTable",
    "InconsistencyError",
    "MatZ",
    "MatrixFormatError",
    "ModulusError",
    "ModulusMismatchError",
    "ParamGroupoid",
    "ShapeMismatchError",
    "TypeClass",
    "ZMod",
    "add_mod",
    "cayley_table",
    "classify_type",
    "gcd",
    "is_prime",
    "is_unit",
    "make_groupoid",
    "mat_op",
    "mul_mod",
    "norm",
    "op",
    "parse_matrix",
    "scalar_matrix",
    "serialize_matrix",
]
