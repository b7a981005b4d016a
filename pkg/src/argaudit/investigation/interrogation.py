"""Belief-checking per topic and the interrogation verdict over all topics."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import StrEnum

from argaudit.af.graph import ArgGraph, Extension
from argaudit.af.semantics import DEFAULT_MAX_EXTENSIONS, Semantics, solve
from argaudit.arguments.topics import Topic
from argaudit.dialogue.engine import run_dialogue
from argaudit.dialogue.extraction import extract_af
from argaudit.dialogue.models import Dialogue
from argaudit.investigation.acceptance import Acceptance, TopicStatus, classify_topic
from argaudit.investigation.agents import InvestigatorAgent, SuspectAgent
from argaudit.investigation.topics import generate_topics
from argaudit.policy.engine import is_consistent
from argaudit.system.similarity import SimilaritySpec

logger = logging.getLogger(__name__)


class BeliefMode(StrEnum):
    SCEPTICAL = "sceptical"
    CREDULOUS = "credulous"
    EMPTY = "empty"


class VerdictValue(StrEnum):
    STRONG_BELIEF = "strong_belief"
    CREDULOUS_BELIEF = "credulous_belief"
    STRONG_DISBELIEF = "strong_disbelief"
    MIXED = "mixed"


_BELIEF_OF = {
    Acceptance.SCEPTICAL: BeliefMode.SCEPTICAL,
    Acceptance.CREDULOUS: BeliefMode.CREDULOUS,
    Acceptance.REJECTED: BeliefMode.EMPTY,
}


@dataclass(frozen=True)
class TopicOutcome:
    topic: Topic
    dialogue: Dialogue
    graph: ArgGraph
    extensions: list[Extension]
    status: TopicStatus
    consistent: bool
    coverage: float


@dataclass(frozen=True)
class Verdict:
    value: VerdictValue
    semantics: Semantics
    outcomes: tuple[TopicOutcome, ...]

    @property
    def per_topic(self) -> list[tuple[Topic, TopicStatus]]:
        return [(outcome.topic, outcome.status) for outcome in self.outcomes]

    @property
    def consistency(self) -> list[tuple[Topic, bool]]:
        return [(outcome.topic, outcome.consistent) for outcome in self.outcomes]


def examine_topic(
    investigator: InvestigatorAgent,
    suspect: SuspectAgent,
    topic: Topic,
    semantics: Semantics,
    similarity: SimilaritySpec,
    *,
    max_extensions: int = DEFAULT_MAX_EXTENSIONS,
) -> TopicOutcome:
    dialogue = run_dialogue(investigator, suspect, topic)
    graph = extract_af(dialogue, similarity, suspect.catalog)
    extensions = solve(graph, semantics, max_extensions=max_extensions)
    status = classify_topic(extensions, graph.conclusion_of, topic)
    consistent = is_consistent(investigator.policy, topic.descriptors)
    logger.info(
        "Topic %s: %d arguments, %d attacks, %d %s extensions, %s",
        topic.label,
        len(graph),
        len(graph.attack_pairs),
        len(extensions),
        semantics,
        status.value,
    )
    return TopicOutcome(
        topic=topic,
        dialogue=dialogue,
        graph=graph,
        extensions=extensions,
        status=status,
        consistent=consistent,
        coverage=suspect.sample(topic).coverage,
    )


def argues_status(
    suspect: SuspectAgent,
    investigator: InvestigatorAgent,
    topic: Topic,
    semantics: Semantics,
    similarity: SimilaritySpec | None = None,
) -> BeliefMode:
    outcome = examine_topic(investigator, suspect, topic, Semantics(semantics), similarity or SimilaritySpec())
    return _BELIEF_OF[outcome.status.value]


def decide(outcomes: list[TopicOutcome]) -> VerdictValue:
    """No topics means no evidence for compliance, which is read as strong disbelief."""
    if not outcomes:
        return VerdictValue.STRONG_DISBELIEF
    statuses = {outcome.status.value for outcome in outcomes}
    consistent = all(outcome.consistent for outcome in outcomes)
    if consistent and statuses == {Acceptance.SCEPTICAL}:
        return VerdictValue.STRONG_BELIEF
    if consistent and Acceptance.REJECTED not in statuses:
        return VerdictValue.CREDULOUS_BELIEF
    if consistent and statuses == {Acceptance.REJECTED}:
        return VerdictValue.STRONG_DISBELIEF
    return VerdictValue.MIXED


def interrogate(
    investigator: InvestigatorAgent,
    suspect: SuspectAgent,
    semantics: Semantics,
    similarity: SimilaritySpec | None = None,
    *,
    max_extensions: int = DEFAULT_MAX_EXTENSIONS,
    workers: int = 1,
) -> Verdict:
    semantics = Semantics(semantics)
    similarity = similarity or SimilaritySpec()
    topics = generate_topics(investigator)

    def _examine(topic: Topic) -> TopicOutcome:
        return examine_topic(investigator, suspect, topic, semantics, similarity, max_extensions=max_extensions)

    if workers > 1 and len(topics) > 1:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="argaudit-topic") as pool:
            outcomes = list(pool.map(_examine, topics))
    else:
        outcomes = [_examine(topic) for topic in topics]
    value = decide(outcomes)
    logger.info("Interrogation over %d topics under %s semantics: %s", len(outcomes), semantics, value)
    return Verdict(value=value, semantics=semantics, outcomes=tuple(outcomes))
