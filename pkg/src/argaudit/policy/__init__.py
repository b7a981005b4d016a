from argaudit.policy.engine import is_consistent, least_model
from argaudit.policy.models import Atom, Clause, Program
from argaudit.policy.parser import load_policy, parse_policy

__all__ = ["Atom", "Clause", "Program", "is_consistent", "least_model", "load_policy", "parse_policy"]
