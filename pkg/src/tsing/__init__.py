"""Exact computations with T-singularities on stable surfaces."""
