"""The system under audit, seen only through its evaluate function.

Within one audit session every input is evaluated at most once: the first
answer is cached and replayed, so a non-deterministic system still yields a
reproducible transcript. Cache reads are lock-free; fills are serialized.
"""

from __future__ import annotations

import logging
import threading
from collections.abc import Callable, Sequence
from typing import Generic, TypeVar

from argaudit.errors import ArgauditError, EvaluationError
from argaudit.system.models import InputPoint

logger = logging.getLogger(__name__)

Output = TypeVar("Output")


class SuspectSystem(Generic[Output]):
    def __init__(self, evaluate: Callable[[InputPoint], Output], input_dataset: Sequence[InputPoint] = ()) -> None:
        self._evaluate = evaluate
        self.input_dataset: tuple[InputPoint, ...] = tuple(input_dataset)
        self._cache: dict[InputPoint, Output] = {}
        self._fill_lock = threading.Lock()
        self.calls = 0

    def evaluate(self, point: InputPoint) -> Output:
        try:
            return self._cache[point]
        except KeyError:
            pass
        with self._fill_lock:
            if point in self._cache:
                return self._cache[point]
            self.calls += 1
            try:
                output = self._evaluate(point)
            except ArgauditError as exc:
                raise EvaluationError(point, exc) from exc
            except Exception as exc:
                logger.exception("System under audit failed on %s", point)
                raise EvaluationError(point, exc) from exc
            self._cache[point] = output
            return output


def evaluate(system: SuspectSystem[Output], point: InputPoint) -> Output:
    return system.evaluate(point)
