"""Exact constructions for generalised Coxeter graphs and the groups K_n."""

__version__ = "0.1.0"
