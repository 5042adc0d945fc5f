"""Signed Roman domination: exact solvers, constructions and checks."""
