"""
Combinatorics of Kostant positivity for parabolic Verma modules over
sl_n: symmetric group infrastructure (Bruhat order, Kazhdan-Lusztig
tables, cells), cup-diagram calculus for maximal parabolics, the
bigrassmannian factorization for minimal parabolics, and classifiers
for general parabolic types, with a reproducible command line front
end (``kostantpv``).
"""

from .permutations import (
    Permutation,
    bruhat_leq,
    format_permutation,
    parse_permutation,
)

__version__ = '0.1.0'

__all__ = [
    'Permutation',
    'bruhat_leq',
    'format_permutation',
    'parse_permutation',
    '__version__',
]
