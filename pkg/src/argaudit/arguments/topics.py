"""Topics: an input class T_X paired with a descriptor set T_P.

Input classes are conjunctions of feature predicates over the catalog columns,
written in config files as::

    <column> == "<literal>"
    <column> contains "<literal>"

``contains`` tests membership for the pipe-separated columns (genres, keywords)
and substring match for the scalar ones. The empty conjunction is the whole
input space.
"""

from __future__ import annotations

import re
from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field

from argaudit.errors import ConfigError
from argaudit.policy.models import Atom
from argaudit.recommender.catalog import MOVIES_HEADER, MovieRecord

_SET_COLUMNS = frozenset({"genres", "keywords"})
_PREDICATE = re.compile(r'^\s*(?P<column>[A-Za-z_]+)\s+(?P<operator>==|contains)\s+"(?P<value>[^"]*)"\s*$')


class Operator(StrEnum):
    EQUALS = "equals"
    CONTAINS = "contains"


class FeaturePredicate(BaseModel):
    model_config = ConfigDict(frozen=True)

    column: str
    operator: Operator
    value: str

    @classmethod
    def parse(cls, text: str) -> FeaturePredicate:
        match = _PREDICATE.match(text)
        if match is None:
            raise ConfigError(f'cannot parse predicate {text!r}; expected <column> == "<literal>" or contains')
        column = match["column"]
        if column not in MOVIES_HEADER:
            raise ConfigError(f"unknown column {column!r} in predicate {text!r}")
        operator = Operator.EQUALS if match["operator"] == "==" else Operator.CONTAINS
        return cls(column=column, operator=operator, value=match["value"])

    def matches(self, movie: MovieRecord) -> bool:
        field = getattr(movie, self.column)
        if self.column in _SET_COLUMNS:
            if self.operator is Operator.CONTAINS:
                return self.value in field
            return field == frozenset({self.value})
        text = str(field)
        if self.operator is Operator.CONTAINS:
            return self.value in text
        return text == self.value

    def __str__(self) -> str:
        symbol = "==" if self.operator is Operator.EQUALS else "contains"
        return f'{self.column} {symbol} "{self.value}"'


class InputClassSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    predicates: tuple[FeaturePredicate, ...] = ()

    def matches(self, movie: MovieRecord) -> bool:
        return all(predicate.matches(movie) for predicate in self.predicates)

    def refines(self, other: InputClassSpec) -> bool:
        """True if this class is a strict syntactic refinement (predicate superset) of ``other``."""
        return set(self.predicates) > set(other.predicates)

    def __str__(self) -> str:
        return " and ".join(str(p) for p in self.predicates) or "*"


class Topic(BaseModel):
    model_config = ConfigDict(frozen=True)

    input_class: InputClassSpec
    descriptors: frozenset[Atom] = Field(min_length=1)
    label: str

    @property
    def sorted_descriptors(self) -> list[Atom]:
        return sorted(self.descriptors, key=str)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "input_class": [
                {"column": p.column, "operator": p.operator.value, "value": p.value}
                for p in self.input_class.predicates
            ],
            "descriptors": [str(atom) for atom in self.sorted_descriptors],
        }
