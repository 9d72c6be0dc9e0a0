"""
blobcat: exact combinatorics of fully commutative elements over the affine C
diagram, the blobbed Catalan triangle, and a rewriting kernel for the
monomial bases of the three Temperley-Lieb quotient levels.

The standard entry points:

    from blobcat import words, normal_forms, grids, triangles, enumeration
    from blobcat.algebra import AlgebraLevel, reduce_word, structure_constants

or the `blobcat` command-line tool.
"""

from .algebra import AlgebraLevel, Scalar, reduce_word
from .enumeration import a_count, b_count, d_count, p_dim
from .triangles import blobbed_closed, blobbed_entry, classical_entry

__version__ = "0.1.0"

__all__ = [
    "AlgebraLevel",
    "Scalar",
    "a_count",
    "b_count",
    "blobbed_closed",
    "blobbed_entry",
    "classical_entry",
    "d_count",
    "p_dim",
    "reduce_word",
]
