from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, model_validator

from argaudit.arguments.models import BlackBoxArgument
from argaudit.arguments.topics import Topic


class Role(StrEnum):
    INVESTIGATOR = "investigator"
    SUSPECT = "suspect"


class MoveKind(StrEnum):
    OPEN = "open"
    ASSERT = "assert"
    CLOSE = "close"


class AgentId(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    role: Role


class Move(BaseModel):
    """``<sender, open, topic>``, ``<sender, assert, argument>`` or ``<sender, close>``."""

    model_config = ConfigDict(frozen=True)

    sender: AgentId
    kind: MoveKind
    topic: Topic | None = None
    argument: BlackBoxArgument | None = None

    @model_validator(mode="after")
    def _payload_matches_kind(self) -> Move:
        if (self.topic is not None) != (self.kind is MoveKind.OPEN):
            raise ValueError("a topic is carried by open moves and only by them")
        if (self.argument is not None) != (self.kind is MoveKind.ASSERT):
            raise ValueError("an argument is carried by assert moves and only by them")
        return self

    @classmethod
    def open(cls, sender: AgentId, topic: Topic) -> Move:
        return cls(sender=sender, kind=MoveKind.OPEN, topic=topic)

    @classmethod
    def assert_(cls, sender: AgentId, argument: BlackBoxArgument) -> Move:
        return cls(sender=sender, kind=MoveKind.ASSERT, argument=argument)

    @classmethod
    def close(cls, sender: AgentId) -> Move:
        return cls(sender=sender, kind=MoveKind.CLOSE)


class Dialogue(BaseModel):
    """Participants I and the ordered moves; indices are 1-based everywhere outside this class."""

    model_config = ConfigDict(frozen=True)

    participants: tuple[AgentId, ...]
    moves: tuple[Move, ...] = ()

    @model_validator(mode="after")
    def _senders_participate(self) -> Dialogue:
        names = [agent.name for agent in self.participants]
        if len(set(names)) != len(names):
            raise ValueError("participant names must be unique")
        for index, move in enumerate(self.moves, start=1):
            if move.sender not in self.participants:
                raise ValueError(f"move {index} is sent by {move.sender.name}, who does not participate")
        return self

    @property
    def topic(self) -> Topic | None:
        if self.moves and self.moves[0].kind is MoveKind.OPEN:
            return self.moves[0].topic
        return None

    @property
    def asserted(self) -> list[tuple[int, BlackBoxArgument]]:
        """(move index, argument) for every assert, in move order."""
        return [(i, m.argument) for i, m in enumerate(self.moves, start=1) if m.kind is MoveKind.ASSERT]
