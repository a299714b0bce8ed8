"""
braceproducts/utilities/__init__.py
"""

from .lyndon import (
    is_lyndon,
    is_prenecklace,
    standard_factorization,
    weighted_lyndon_words,
    )
