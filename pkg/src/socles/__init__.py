"""Socles of powers of squarefree monomial ideals: exact oracle and combinatorial deciders."""

__version__ = "0.1.0"
