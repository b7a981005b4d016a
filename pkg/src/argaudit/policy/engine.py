from __future__ import annotations

from collections import defaultdict, deque
from collections.abc import Iterable

from argaudit.policy.models import Atom, Program


def least_model(program: Program) -> frozenset[Atom]:
    """Least fixpoint of forward chaining; ``~a`` is a fresh atom distinct from ``a``.

    Each clause keeps a count of body atoms not yet derived, so every clause
    fires at most once and the whole run is linear in the program size.
    """
    pending: list[set[Atom]] = [set(clause.body) for clause in program.clauses]
    watchers: dict[Atom, list[int]] = defaultdict(list)
    for index, body in enumerate(pending):
        for atom in body:
            watchers[atom].append(index)

    agenda = deque(clause.head for clause in program.clauses if clause.is_fact)
    model: set[Atom] = set()
    while agenda:
        atom = agenda.popleft()
        if atom in model:
            continue
        model.add(atom)
        for index in watchers.get(atom, ()):
            body = pending[index]
            body.discard(atom)
            if not body:
                agenda.append(program.clauses[index].head)
    return frozenset(model)


def complementary_pairs(model: Iterable[Atom]) -> list[tuple[Atom, Atom]]:
    atoms = set(model)
    return sorted(
        ((atom, atom.complement()) for atom in atoms if not atom.negated and atom.complement() in atoms),
        key=lambda pair: pair[0].text,
    )


def is_consistent(program: Program, extra_atoms: Iterable[Atom] = ()) -> bool:
    """True iff ``program`` plus ``extra_atoms`` as facts derives no pair {a, ~a}."""
    return not complementary_pairs(least_model(program.with_facts(extra_atoms)))
