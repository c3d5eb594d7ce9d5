"""Legendrian link invariants computed from front diagrams.

The package computes Chekanov-Eliashberg differential graded algebras,
normal rulings and ruling polynomials, and augmentations for Legendrian
links in R^3, in connected sums of S^1 x S^2, and in J^1(S^1).
"""

__version__ = "0.1.0"
