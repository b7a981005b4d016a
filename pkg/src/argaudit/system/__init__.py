"""Opaque view of the system under audit: inputs, outputs, evaluation and similarity."""
