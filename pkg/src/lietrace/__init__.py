"""Exact computer algebra for Casimir spectra and trace identities of simple Lie algebras."""

from .cartan import AlgebraId, algebra_data, parse_algebra

__version__ = "0.1.0"

__all__ = ["AlgebraId", "algebra_data", "parse_algebra", "__version__"]
