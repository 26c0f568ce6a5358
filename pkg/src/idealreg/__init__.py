"""Exact computation with graded ideals: Betti tables, regularity,
linear-quotient certificates, polymatroidal exchange checks, primary
decompositions of products of linear-form ideals, and chain-ideal
combinatorics.  Everything is exact (rationals or GF(p)); no Groebner
bases are used anywhere.
"""

__version__ = "0.1.0"
