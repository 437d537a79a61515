"""Exact workbench for trivial ring extensions of finite-dimensional
algebras over prime fields: module conversions, resolutions, and
Gorenstein projective/injective/flat deciders."""

__version__ = "0.1.0"
