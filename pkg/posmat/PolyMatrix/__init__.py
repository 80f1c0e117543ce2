from .PolyMatrix import PolyMatrix, SymPolyMatrix, mat_mul

__all__ = ["PolyMatrix", "SymPolyMatrix", "mat_mul"]
