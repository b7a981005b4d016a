from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from argaudit.policy.models import Atom
from argaudit.system.models import InputPoint


class BlackBoxArgument(BaseModel):
    """The claim that the system's output on ``support`` is described by ``conclusion``."""

    model_config = ConfigDict(frozen=True)

    support: InputPoint
    conclusion: Atom

    def __str__(self) -> str:
        return f"<{self.support}, {self.conclusion}>"
