"""Uniquely 2-colourable 4-cycle decompositions: constructions and certification."""

__version__ = "0.1.0"
