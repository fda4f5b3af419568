"""Exact finite checks for products of normal subsets and derangements."""

__version__ = "0.1.0"
