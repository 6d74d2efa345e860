"""Exact matrix calculus for polynomial maps and multilinear maps."""
