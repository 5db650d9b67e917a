"""Euler characteristics of simple quiver moduli by cycle counting and torus localization."""

__version__ = "0.1.0"
