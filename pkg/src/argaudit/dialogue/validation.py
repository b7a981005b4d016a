"""Well-formedness of information-seeking dialogues.

For a dialogue of t moves among the participants I:

  1. the first move opens a topic;
  2. moves 2 .. t-|I| are asserts;
  3. every asserted argument is related to the opened topic;
  4. the last |I| moves are closes;
  5. the last move is sent by whoever sent the first.

Every violation is reported, not only the first one.
"""

from __future__ import annotations

from enum import IntEnum

from pydantic import BaseModel, ConfigDict

from argaudit.arguments.attacks import related_to
from argaudit.dialogue.models import Dialogue, MoveKind
from argaudit.errors import DialogueError, UnknownInputError
from argaudit.recommender.catalog import Catalog


class Condition(IntEnum):
    OPENS_TOPIC = 1
    ASSERTS_IN_BODY = 2
    RELATED_TO_TOPIC = 3
    CLOSES_AT_END = 4
    OPENER_CLOSES_LAST = 5


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    condition: Condition
    message: str

    def __str__(self) -> str:
        return f"move {self.index}: condition {self.condition.value} ({self.condition.name.lower()}): {self.message}"


def validate_dialogue(dialogue: Dialogue, catalog: Catalog) -> list[Violation]:
    """Return every violated condition; an empty list means the dialogue is well-formed."""
    moves = dialogue.moves
    total = len(moves)
    closing = len(dialogue.participants)
    violations: list[Violation] = []
    if not moves:
        return [Violation(index=1, condition=Condition.OPENS_TOPIC, message="dialogue has no moves")]

    if moves[0].kind is not MoveKind.OPEN:
        violations.append(
            Violation(index=1, condition=Condition.OPENS_TOPIC, message=f"first move is {moves[0].kind.value}")
        )
    for index in range(2, total - closing + 1):
        if moves[index - 1].kind is not MoveKind.ASSERT:
            violations.append(
                Violation(
                    index=index,
                    condition=Condition.ASSERTS_IN_BODY,
                    message=f"expected assert, found {moves[index - 1].kind.value}",
                )
            )
    topic = dialogue.topic
    if topic is not None:
        for index, argument in dialogue.asserted:
            try:
                related = related_to(argument, topic, catalog)
            except UnknownInputError as exc:
                violations.append(Violation(index=index, condition=Condition.RELATED_TO_TOPIC, message=str(exc)))
                continue
            if not related:
                violations.append(
                    Violation(
                        index=index,
                        condition=Condition.RELATED_TO_TOPIC,
                        message=f"{argument} is not related to topic {topic.label}",
                    )
                )
    for index in range(max(1, total - closing + 1), total + 1):
        if moves[index - 1].kind is not MoveKind.CLOSE:
            violations.append(
                Violation(
                    index=index,
                    condition=Condition.CLOSES_AT_END,
                    message=f"expected close, found {moves[index - 1].kind.value}",
                )
            )
    if moves[-1].sender != moves[0].sender:
        violations.append(
            Violation(
                index=total,
                condition=Condition.OPENER_CLOSES_LAST,
                message=f"last move sent by {moves[-1].sender.name}, dialogue opened by {moves[0].sender.name}",
            )
        )
    return violations


def is_self_reflective(dialogue: Dialogue) -> bool:
    if not dialogue.participants:
        raise DialogueError("a dialogue without participants is never well-formed")
    return len(dialogue.participants) == 1
