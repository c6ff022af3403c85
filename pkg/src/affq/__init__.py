"""affq: exact arithmetic for affine Hecke algebras, affine q-Schur algebras,
the level-free realization algebra above them, and cyclic-quiver Hall
algebras."""

__version__ = "0.1.0"
