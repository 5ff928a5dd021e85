"""Crossings of graphs embedded uniformly at random in convex position."""

__version__ = "0.1.0"
