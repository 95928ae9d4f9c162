"""Exact cochain-level Chern-Dold character on finite simplicial models."""

__version__ = "0.1.0"
