"""Extension-based semantics over ArgGraph.

Grounded is computed by iterating the characteristic function from the empty
set. Complete and stable extensions are enumerated by iterative backtracking over
three-valued labellings (IN, OUT, UNDEC) with constraint propagation; every leaf
is re-checked against the full labelling conditions before it is accepted.
Preferred extensions are the subset-maximal complete ones.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator
from enum import StrEnum

from argaudit.af.graph import ArgGraph, ArgId, Extension, canonical_extension, canonical_extensions
from argaudit.errors import ExtensionOverflowError

logger = logging.getLogger(__name__)

DEFAULT_MAX_EXTENSIONS = 10_000


class Semantics(StrEnum):
    GROUNDED = "grounded"
    STABLE = "stable"
    COMPLETE = "complete"
    PREFERRED = "preferred"


class Label(StrEnum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"


def conflict_free(members: Iterable[ArgId], graph: ArgGraph) -> bool:
    chosen = set(members)
    return not any(attacker in chosen and target in chosen for attacker, target in graph.attack_pairs)


def defends(graph: ArgGraph, members: Iterable[ArgId], arg_id: ArgId) -> bool:
    chosen = set(members)
    return all(
        any(defender in chosen for defender in graph.attackers_of(attacker)) for attacker in graph.attackers_of(arg_id)
    )


def grounded(graph: ArgGraph) -> Extension:
    current: frozenset[ArgId] = frozenset()
    while True:
        following = frozenset(a for a in graph.arg_ids if defends(graph, current, a))
        if following == current:
            return canonical_extension(current)
        current = following


class _LabellingSearch:
    """Depth-first search over labellings with an explicit stack.

    One labels dict is shared by every branch; each assignment is recorded on a
    trail and undone on backtrack, so depth is bounded by memory rather than the
    interpreter's recursion limit.
    """

    def __init__(self, graph: ArgGraph, *, allow_undec: bool, max_extensions: int) -> None:
        self.graph = graph
        self.allow_undec = allow_undec
        self.max_extensions = max_extensions
        self.found: list[Extension] = []
        self.labels: dict[ArgId, Label] = {}
        self.trail: list[ArgId] = []

    def run(self) -> list[Extension]:
        if not self._propagate(deque(self.graph.arg_ids)):
            return []
        frames: list[tuple[ArgId, Iterator[Label], int]] = []
        descend = True
        while True:
            if descend:
                pending = next((a for a in self.graph.arg_ids if a not in self.labels), None)
                if pending is None:
                    self._accept()
                else:
                    frames.append((pending, iter(self._choices()), len(self.trail)))
            descend = False
            while frames and not descend:
                pending, choices, mark = frames[-1]
                self._undo(mark)
                label = next(choices, None)
                if label is None:
                    frames.pop()
                    continue
                self.labels[pending] = label
                self.trail.append(pending)
                descend = self._propagate(deque([pending, *self.graph.targets_of(pending)]))
            if not descend:
                return canonical_extensions(self.found)

    def _choices(self) -> tuple[Label, ...]:
        return (Label.IN, Label.OUT, Label.UNDEC) if self.allow_undec else (Label.IN, Label.OUT)

    def _accept(self) -> None:
        if not self._legal():
            return
        self.found.append(canonical_extension(a for a, label in self.labels.items() if label is Label.IN))
        if len(self.found) > self.max_extensions:
            raise ExtensionOverflowError(self.max_extensions)

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            del self.labels[self.trail.pop()]

    def _assign(self, arg_id: ArgId, label: Label, queue: deque) -> bool:
        current = self.labels.get(arg_id)
        if current is not None:
            return current is label
        if label is Label.UNDEC and not self.allow_undec:
            return False
        self.labels[arg_id] = label
        self.trail.append(arg_id)
        queue.append(arg_id)
        queue.extend(self.graph.targets_of(arg_id))
        return True

    def _propagate(self, queue: deque) -> bool:
        """Apply forced labels until fixpoint; False on a contradiction."""
        labels = self.labels
        while queue:
            arg_id = queue.popleft()
            attackers = self.graph.attackers_of(arg_id)
            attacker_labels = [labels.get(b) for b in attackers]
            if Label.IN in attacker_labels:
                forced = Label.OUT
            elif all(label is Label.OUT for label in attacker_labels):
                forced = Label.IN
            else:
                forced = None
            if forced is not None and not self._assign(arg_id, forced, queue):
                return False

            current = labels.get(arg_id)
            if current is Label.IN:
                for attacker in attackers:
                    if not self._assign(attacker, Label.OUT, queue):
                        return False
            elif current is Label.OUT:
                candidates = [b for b, label in zip(attackers, attacker_labels) if label in (None, Label.IN)]
                if not candidates:
                    return False
                if len(candidates) == 1 and not self._assign(candidates[0], Label.IN, queue):
                    return False
            elif current is Label.UNDEC:
                open_attackers = [b for b, label in zip(attackers, attacker_labels) if label is not Label.OUT]
                if len(open_attackers) == 1 and not self._assign(open_attackers[0], Label.UNDEC, queue):
                    return False
        return True

    def _legal(self) -> bool:
        labels = self.labels
        for arg_id, label in labels.items():
            attacker_labels = [labels[b] for b in self.graph.attackers_of(arg_id)]
            if label is Label.IN and any(a is not Label.OUT for a in attacker_labels):
                return False
            if label is Label.OUT and Label.IN not in attacker_labels:
                return False
            if label is Label.UNDEC and (Label.IN in attacker_labels or all(a is Label.OUT for a in attacker_labels)):
                return False
        return True


def complete(graph: ArgGraph, *, max_extensions: int = DEFAULT_MAX_EXTENSIONS) -> list[Extension]:
    return _LabellingSearch(graph, allow_undec=True, max_extensions=max_extensions).run()


def stable(graph: ArgGraph, *, max_extensions: int = DEFAULT_MAX_EXTENSIONS) -> list[Extension]:
    return _LabellingSearch(graph, allow_undec=False, max_extensions=max_extensions).run()


def maximal(extensions: list[Extension]) -> list[Extension]:
    sets = [frozenset(ext) for ext in extensions]
    return canonical_extensions(s for s in sets if not any(s < other for other in sets))


def preferred(graph: ArgGraph, *, max_extensions: int = DEFAULT_MAX_EXTENSIONS) -> list[Extension]:
    # The cap bounds the complete extensions enumerated on the way.
    return maximal(complete(graph, max_extensions=max_extensions))


def solve(graph: ArgGraph, semantics: Semantics, *, max_extensions: int = DEFAULT_MAX_EXTENSIONS) -> list[Extension]:
    semantics = Semantics(semantics)
    if semantics is Semantics.GROUNDED:
        extensions = [grounded(graph)]
    elif semantics is Semantics.STABLE:
        extensions = stable(graph, max_extensions=max_extensions)
    elif semantics is Semantics.COMPLETE:
        extensions = complete(graph, max_extensions=max_extensions)
    else:
        extensions = preferred(graph, max_extensions=max_extensions)
    logger.debug("%s: %d arguments, %d extensions", semantics, len(graph), len(extensions))
    return extensions
