"""Abstract argumentation graphs, semantics, the brute-force oracle and APX/DOT formats."""
