"""Finitely presented groups for multi-virtual braid groups and their kernels."""
