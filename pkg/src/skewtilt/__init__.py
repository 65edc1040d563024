"""Exact combinatorics of skew-curves and pseudo-triangulations on the
marked cylinder with an order-2 involution, with the tilting-sheaf
dictionary, flips, and constructive flip paths."""

__version__ = "0.1.0"
