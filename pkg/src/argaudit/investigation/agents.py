"""The two parties of an audit.

The investigator holds the policy and a topic strategy (how clause-body atoms
are grounded to input classes and which descriptors a clause head stands for).
The suspect holds the system under audit, a description map from outputs to
descriptor atoms, and the argument generator with its sampling limits.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum

from pydantic import BaseModel, ConfigDict

from argaudit.arguments.generator import (
    DescriptionMap,
    InputSample,
    SamplingLimits,
    generate_arguments,
    sample_inputs,
)
from argaudit.arguments.models import BlackBoxArgument
from argaudit.arguments.topics import FeaturePredicate, Topic
from argaudit.dialogue.models import AgentId, Role
from argaudit.policy.models import Atom, Program
from argaudit.recommender.catalog import Catalog, RatingTable
from argaudit.system.suspect import SuspectSystem


class DescriptorMode(StrEnum):
    """What T_P a clause contributes: the head's whole descriptor group, or the head atom alone."""

    GROUP = "group"
    HEAD_ONLY = "head_only"


class TopicStrategy(BaseModel):
    model_config = ConfigDict(frozen=True)

    bindings: dict[Atom, FeaturePredicate] = {}
    descriptor_groups: dict[Atom, str] = {}
    descriptor_mode: DescriptorMode = DescriptorMode.GROUP

    def group_members(self, group: str) -> frozenset[Atom]:
        return frozenset(atom for atom, name in self.descriptor_groups.items() if name == group)


@dataclass(frozen=True)
class InvestigatorAgent:
    policy: Program
    strategy: TopicStrategy
    # Topic generation never queries the system; listing topics runs without one.
    system: SuspectSystem | None = None
    agent_id: AgentId = AgentId(name="investigator", role=Role.INVESTIGATOR)


@dataclass(frozen=True)
class SuspectAgent:
    policy: Program
    system: SuspectSystem
    describe: DescriptionMap
    catalog: Catalog
    ratings: RatingTable
    sampling: SamplingLimits = SamplingLimits()
    generator: Callable[..., list[BlackBoxArgument]] = generate_arguments
    agent_id: AgentId = AgentId(name="suspect", role=Role.SUSPECT)

    def sample(self, topic: Topic) -> InputSample:
        return sample_inputs(topic, self.catalog, self.ratings, self.sampling)

    def arguments_for(self, topic: Topic) -> list[BlackBoxArgument]:
        return self.generator(self.system, self.describe, topic, self.catalog, self.ratings, self.sampling)
