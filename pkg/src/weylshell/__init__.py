"""Zeros of Bessel cross-products, eigenvalue counting, and Weyl remainders
for balls and spherical shells in R^d."""

__version__ = "0.1.0"
