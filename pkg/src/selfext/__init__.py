"""Exact homological computations for Nakayama, bound quiver and hybrid algebras."""

from selfext.nakayama import NakayamaAlgebra, SerialModule, Shape, validate_kupisch

__all__ = ["NakayamaAlgebra", "SerialModule", "Shape", "validate_kupisch"]
