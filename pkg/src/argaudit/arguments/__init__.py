"""Black-box arguments, topics, attacks and the argument generator."""
