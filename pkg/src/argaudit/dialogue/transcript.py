"""Transcript JSON for dialogues.

Field order is fixed (participants, then moves with index, sender, kind and
the kind's payload) so transcripts are byte-stable across runs.
"""

from __future__ import annotations

from pathlib import Path

from argaudit.arguments.models import BlackBoxArgument
from argaudit.arguments.topics import FeaturePredicate, InputClassSpec, Operator, Topic
from argaudit.data import dump_document, validate_document
from argaudit.dialogue.models import AgentId, Dialogue, Move, MoveKind, Role
from argaudit.policy.models import Atom
from argaudit.system.models import InputPoint

SCHEMA = "transcript"


def _argument_json(argument: BlackBoxArgument) -> dict:
    return {
        "support": {"user_id": argument.support.user_id, "movie_id": argument.support.movie_id},
        "conclusion": str(argument.conclusion),
    }


def _move_json(index: int, move: Move) -> dict:
    payload: dict = {"index": index, "sender": move.sender.name, "kind": move.kind.value}
    if move.topic is not None:
        payload["topic"] = move.topic.to_json()
    if move.argument is not None:
        payload["argument"] = _argument_json(move.argument)
    return payload


def transcript_json(dialogue: Dialogue) -> dict:
    document = {
        "participants": [{"name": agent.name, "role": agent.role.value} for agent in dialogue.participants],
        "moves": [_move_json(index, move) for index, move in enumerate(dialogue.moves, start=1)],
    }
    validate_document(document, SCHEMA)
    return document


def _topic_from_json(data: dict) -> Topic:
    predicates = tuple(
        FeaturePredicate(column=p["column"], operator=Operator(p["operator"]), value=p["value"])
        for p in data["input_class"]
    )
    return Topic(
        input_class=InputClassSpec(predicates=predicates),
        descriptors=frozenset(Atom.parse(d) for d in data["descriptors"]),
        label=data["label"],
    )


def dialogue_from_json(document: dict) -> Dialogue:
    validate_document(document, SCHEMA)
    agents = {p["name"]: AgentId(name=p["name"], role=Role(p["role"])) for p in document["participants"]}
    moves = []
    for entry in document["moves"]:
        sender = agents[entry["sender"]]
        kind = MoveKind(entry["kind"])
        if kind is MoveKind.OPEN:
            moves.append(Move.open(sender, _topic_from_json(entry["topic"])))
        elif kind is MoveKind.ASSERT:
            raw = entry["argument"]
            support = InputPoint(user_id=raw["support"]["user_id"], movie_id=raw["support"]["movie_id"])
            argument = BlackBoxArgument(support=support, conclusion=Atom.parse(raw["conclusion"]))
            moves.append(Move.assert_(sender, argument))
        else:
            moves.append(Move.close(sender))
    return Dialogue(participants=tuple(agents.values()), moves=tuple(moves))


def write_transcript(path: Path, dialogue: Dialogue) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_document(transcript_json(dialogue)), encoding="utf-8")
