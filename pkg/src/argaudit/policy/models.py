from __future__ import annotations

import re

from pydantic import BaseModel, ConfigDict, field_validator

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _scan_term(text: str, pos: int) -> int | None:
    """Return the end offset of the term starting at ``pos``, or None if malformed."""
    match = _IDENT.match(text, pos)
    if match is None:
        return None
    pos = match.end()
    if pos >= len(text) or text[pos] != "(":
        return pos
    pos += 1
    while True:
        end = _scan_term(text, pos)
        if end is None or end >= len(text):
            return None
        if text[end] == ",":
            pos = end + 1
            continue
        if text[end] == ")":
            return end + 1
        return None


def is_atom_text(text: str) -> bool:
    return bool(text) and _scan_term(text, 0) == len(text)


class Atom(BaseModel):
    """A propositional atom; functor terms such as ``director(x)`` are opaque text.

    ``negated`` marks strong negation (written ``~`` in policy files). The logic
    engine treats ``~a`` as an atom distinct from ``a`` and only compares the two
    when checking consistency.
    """

    model_config = ConfigDict(frozen=True)

    text: str
    negated: bool = False

    @field_validator("text")
    @classmethod
    def _canonical_text(cls, value: str) -> str:
        value = "".join(value.split())
        if not is_atom_text(value):
            raise ValueError(f"not an atom: {value!r}")
        return value

    @classmethod
    def parse(cls, raw: str) -> Atom:
        raw = "".join(raw.split())
        if raw.startswith("~"):
            return cls(text=raw[1:], negated=True)
        return cls(text=raw)

    def complement(self) -> Atom:
        return Atom(text=self.text, negated=not self.negated)

    def __str__(self) -> str:
        return f"~{self.text}" if self.negated else self.text


class Clause(BaseModel):
    model_config = ConfigDict(frozen=True)

    head: Atom
    # Source order is kept so serialization round-trips; semantics treat it as a set.
    body: tuple[Atom, ...] = ()

    @property
    def is_fact(self) -> bool:
        return not self.body

    def __str__(self) -> str:
        if self.is_fact:
            return f"{self.head}."
        return f"{self.head} <- {', '.join(str(atom) for atom in self.body)}."


class Program(BaseModel):
    model_config = ConfigDict(frozen=True)

    clauses: tuple[Clause, ...] = ()

    @property
    def language(self) -> frozenset[Atom]:
        """Every atom occurring in a clause head or body."""
        atoms: set[Atom] = set()
        for clause in self.clauses:
            atoms.add(clause.head)
            atoms.update(clause.body)
        return frozenset(atoms)

    def with_facts(self, atoms) -> Program:
        facts = tuple(Clause(head=atom) for atom in sorted(atoms, key=str))
        return Program(clauses=self.clauses + facts)

    def serialize(self) -> str:
        """One clause per line, body atoms comma-space separated, terminating period."""
        return "".join(f"{clause}\n" for clause in self.clauses)
