"""Acceptance of a topic over the extensions of its dialogue's graph.

A topic is sceptically accepted when every descriptor in T_P is concluded by
some argument of every extension, credulously accepted when every descriptor is
concluded somewhere in the union of the extensions, and rejected otherwise. An
empty family of extensions rejects the topic.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from enum import StrEnum

from pydantic import BaseModel, ConfigDict

from argaudit.af.graph import ArgId, Extension, canonical_extension
from argaudit.arguments.topics import Topic
from argaudit.policy.models import Atom


class Acceptance(StrEnum):
    SCEPTICAL = "sceptical"
    CREDULOUS = "credulous"
    REJECTED = "rejected"


class TopicStatus(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: Acceptance
    # Conclusions drawn in every extension / in some extension.
    sceptical_conclusions: frozenset[Atom] = frozenset()
    credulous_conclusions: frozenset[Atom] = frozenset()
    # Arguments in every extension / in some extension.
    sceptical_arguments: Extension = ()
    credulous_arguments: Extension = ()

    def credulous_holds(self, topic: Topic) -> bool:
        return topic.descriptors <= self.credulous_conclusions


def classify_topic(extensions: Sequence[Extension], conclusion_of: Mapping[ArgId, Atom], topic: Topic) -> TopicStatus:
    if not extensions:
        return TopicStatus(value=Acceptance.REJECTED)
    concluded = [frozenset(conclusion_of[a] for a in extension) for extension in extensions]
    in_every = frozenset.intersection(*concluded)
    in_some = frozenset.union(*concluded)
    members = [frozenset(extension) for extension in extensions]
    if topic.descriptors <= in_every:
        value = Acceptance.SCEPTICAL
    elif topic.descriptors <= in_some:
        value = Acceptance.CREDULOUS
    else:
        value = Acceptance.REJECTED
    return TopicStatus(
        value=value,
        sceptical_conclusions=in_every,
        credulous_conclusions=in_some,
        sceptical_arguments=canonical_extension(frozenset.intersection(*members)),
        credulous_arguments=canonical_extension(frozenset.union(*members)),
    )
