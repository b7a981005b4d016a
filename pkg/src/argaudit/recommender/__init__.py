"""Deterministic reference recommender used as the demo system under audit."""
