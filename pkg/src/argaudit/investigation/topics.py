"""Topic generator q.

Each clause ``h <- b1, ..., bk`` yields one topic per non-empty subset S of its
body: the input class is the conjunction of the predicates bound to S and the
descriptors are the head's descriptor group (or the head alone in ``head_only``
mode). Topics are ordered by clause, then subset size, then subset position.
A fact yields a single topic over the whole input space.
"""

from __future__ import annotations

import logging
from itertools import combinations

from argaudit.arguments.topics import InputClassSpec, Topic
from argaudit.errors import MissingBindingError, MissingDescriptorGroupError
from argaudit.investigation.agents import DescriptorMode, InvestigatorAgent
from argaudit.policy.models import Atom, Clause

logger = logging.getLogger(__name__)


def _descriptors(agent: InvestigatorAgent, head: Atom) -> tuple[frozenset[Atom], str]:
    strategy = agent.strategy
    group = strategy.descriptor_groups.get(head)
    if group is None:
        raise MissingDescriptorGroupError(str(head))
    if strategy.descriptor_mode is DescriptorMode.HEAD_ONLY:
        return frozenset({head}), str(head)
    return strategy.group_members(group), group


def topics_for_clause(agent: InvestigatorAgent, clause: Clause) -> list[Topic]:
    descriptors, suffix = _descriptors(agent, clause.head)
    body = list(dict.fromkeys(clause.body))
    bindings = agent.strategy.bindings
    for atom in body:
        if atom not in bindings:
            raise MissingBindingError(str(atom))
    if not body:
        return [Topic(input_class=InputClassSpec(), descriptors=descriptors, label=f"* / {suffix}")]
    topics = []
    for size in range(1, len(body) + 1):
        for subset in combinations(body, size):
            input_class = InputClassSpec(predicates=tuple(bindings[atom] for atom in subset))
            label = " & ".join(str(atom) for atom in subset) + f" / {suffix}"
            topics.append(Topic(input_class=input_class, descriptors=descriptors, label=label))
    return topics


def generate_topics(agent: InvestigatorAgent) -> list[Topic]:
    topics = [topic for clause in agent.policy.clauses for topic in topics_for_clause(agent, clause)]
    logger.info("Generated %d topics from %d clauses", len(topics), len(agent.policy.clauses))
    return topics
