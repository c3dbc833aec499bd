"""Quadrinomial factorization toolkit."""
