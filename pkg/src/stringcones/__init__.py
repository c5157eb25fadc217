"""String cones, string/Lusztig polytopes, and A_{n-1} branching for the
classical families B, C, D."""

from .rootsys import EpsVector, LieType, Weight
from .weyl import ReducedWord, SignedPermutation, canonical_word

__all__ = [
    "EpsVector",
    "LieType",
    "ReducedWord",
    "SignedPermutation",
    "Weight",
    "canonical_word",
]
