"""Structured audit trail of dialogue moves.

One line per move: which dialogue, the move index, the sender and the move
kind, plus the asserted argument when there is one. Output values of the
system under audit are never logged, only their descriptors.
"""

from __future__ import annotations

import logging

logger = logging.getLogger("argaudit.audit")


def log_move(*, dialogue: str, index: int, sender: str, kind: str, detail: str | None = None) -> None:
    """Emit a single structured audit line for one dialogue move."""
    logger.info(
        "move dialogue=%s index=%s sender=%s kind=%s detail=%s",
        dialogue,
        index,
        sender,
        kind,
        detail,
        extra={
            "audit": True,
            "dialogue": dialogue,
            "index": index,
            "sender": sender,
            "kind": kind,
            "detail": detail,
        },
    )
