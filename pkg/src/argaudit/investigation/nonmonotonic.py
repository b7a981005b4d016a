"""Status changes between related topics of one interrogation.

Two readings are reported side by side:

  * descriptor mode: T_P of the first topic is a strict subset of the
    second's, and the statuses differ. Only this list sets ``non_monotonic``.
  * input-refinement mode: equal T_P, the second topic's input class adds
    predicates to the first's, and the statuses differ.
"""

from __future__ import annotations

from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict

from argaudit.arguments.topics import Topic
from argaudit.investigation.acceptance import Acceptance


class Witness(BaseModel):
    model_config = ConfigDict(frozen=True)

    coarser: str
    finer: str
    coarser_status: Acceptance
    finer_status: Acceptance

    def to_json(self) -> dict:
        return {
            "coarser": self.coarser,
            "finer": self.finer,
            "coarser_status": self.coarser_status.value,
            "finer_status": self.finer_status.value,
        }


class NonMonotonicityReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    descriptor_mode: tuple[Witness, ...] = ()
    input_refinement_mode: tuple[Witness, ...] = ()

    @property
    def non_monotonic(self) -> bool:
        return bool(self.descriptor_mode)

    def to_json(self) -> dict:
        return {
            "non_monotonic": self.non_monotonic,
            "descriptor_mode": [w.to_json() for w in self.descriptor_mode],
            "input_refinement_mode": [w.to_json() for w in self.input_refinement_mode],
        }


def check_nonmonotonicity(statuses: Sequence[tuple[Topic, Acceptance]]) -> NonMonotonicityReport:
    descriptor_mode: list[Witness] = []
    input_refinement_mode: list[Witness] = []
    for first, first_status in statuses:
        for second, second_status in statuses:
            if first_status == second_status:
                continue
            witness = Witness(
                coarser=first.label, finer=second.label, coarser_status=first_status, finer_status=second_status
            )
            if first.descriptors < second.descriptors:
                descriptor_mode.append(witness)
            elif first.descriptors == second.descriptors and second.input_class.refines(first.input_class):
                input_refinement_mode.append(witness)
    return NonMonotonicityReport(
        descriptor_mode=tuple(descriptor_mode), input_refinement_mode=tuple(input_refinement_mode)
    )
