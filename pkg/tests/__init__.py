"""Madan Sara test suite."""
