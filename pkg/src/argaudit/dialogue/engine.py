"""Running dialogues between agents.

The two-agent protocol is the information-seeking exchange: the investigator
opens a topic, the suspect asserts every related argument it can generate and
closes, the investigator closes last. The self-reflective protocol has a single
agent playing both parts.

All arguments are generated before the first move is built, so a failing
system never leaves a partial dialogue behind.
"""

from __future__ import annotations

from typing import Protocol

from argaudit.arguments.models import BlackBoxArgument
from argaudit.arguments.topics import Topic
from argaudit.audit_log import log_move
from argaudit.dialogue.models import AgentId, Dialogue, Move


class Participant(Protocol):
    agent_id: AgentId


class Arguer(Participant, Protocol):
    def arguments_for(self, topic: Topic) -> list[BlackBoxArgument]: ...


def _log(dialogue: Dialogue) -> None:
    label = dialogue.topic.label if dialogue.topic is not None else "-"
    for index, move in enumerate(dialogue.moves, start=1):
        detail = str(move.argument) if move.argument is not None else None
        log_move(dialogue=label, index=index, sender=move.sender.name, kind=move.kind.value, detail=detail)


def run_dialogue(investigator: Participant, suspect: Arguer, topic: Topic) -> Dialogue:
    arguments = suspect.arguments_for(topic)
    moves = [Move.open(investigator.agent_id, topic)]
    moves.extend(Move.assert_(suspect.agent_id, argument) for argument in arguments)
    moves.append(Move.close(suspect.agent_id))
    moves.append(Move.close(investigator.agent_id))
    dialogue = Dialogue(participants=(investigator.agent_id, suspect.agent_id), moves=tuple(moves))
    _log(dialogue)
    return dialogue


def run_self_reflective_dialogue(agent: Arguer, topic: Topic) -> Dialogue:
    arguments = agent.arguments_for(topic)
    moves = [Move.open(agent.agent_id, topic)]
    moves.extend(Move.assert_(agent.agent_id, argument) for argument in arguments)
    moves.append(Move.close(agent.agent_id))
    dialogue = Dialogue(participants=(agent.agent_id,), moves=tuple(moves))
    _log(dialogue)
    return dialogue
