"""Exact computations in Solomon's descent algebra of S_{n+1} and its class algebra."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CapacityError,
    ContractViolation,
    DescentLabError,
    InvalidPartitionError,
    InvalidSubsetError,
    RankMismatchError,
)
from .weyl import Permutation, Root, composition_of, partition_of  # noqa: E402
from .solomon import SolomonElement, multiply_basis, structure_table  # noqa: E402
from .classes import ClassElement, multiply_classes, project  # noqa: E402
from .characters import ClassFunction, mark, perm_character  # noqa: E402

__all__ = [
    "__version__",
    "CapacityError", "ContractViolation", "DescentLabError",
    "InvalidPartitionError", "InvalidSubsetError", "RankMismatchError",
    "Permutation", "Root", "composition_of", "partition_of",
    "SolomonElement", "multiply_basis", "structure_table",
    "ClassElement", "multiply_classes", "project",
    "ClassFunction", "mark", "perm_character",
]
