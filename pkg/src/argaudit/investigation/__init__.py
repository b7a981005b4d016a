"""Investigator and suspect agents, belief-checking and interrogation verdicts."""
