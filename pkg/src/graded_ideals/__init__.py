"""Graded weakly S-primary ideals of finite graded rings."""

__version__ = "0.1.0"
