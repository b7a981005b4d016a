"""Exhaustive subset enumeration, used to cross-check the labelling solver."""

from __future__ import annotations

from argaudit.af.graph import ArgGraph, Extension, canonical_extensions
from argaudit.af.semantics import Semantics, maximal
from argaudit.errors import TooLargeError

BRUTE_FORCE_CAP = 20


def brute_force(graph: ArgGraph, semantics: Semantics) -> list[Extension]:
    size = len(graph)
    if size > BRUTE_FORCE_CAP:
        raise TooLargeError(size, BRUTE_FORCE_CAP)
    ids = graph.arg_ids
    bit = {arg_id: 1 << i for i, arg_id in enumerate(ids)}
    attackers = [sum(bit[b] for b in graph.attackers_of(a)) for a in ids]
    targets = [sum(bit[t] for t in graph.targets_of(a)) for a in ids]
    full = (1 << size) - 1

    complete_masks: list[int] = []
    stable_masks: list[int] = []
    for mask in range(1 << size):
        if any(mask >> i & 1 and attackers[i] & mask for i in range(size)):
            continue
        attacked = 0
        for i in range(size):
            if mask >> i & 1:
                attacked |= targets[i]
        if mask | attacked == full:
            stable_masks.append(mask)
        defended = sum(1 << i for i in range(size) if attackers[i] & ~attacked == 0)
        if defended == mask:
            complete_masks.append(mask)

    def members(mask: int) -> list:
        return [ids[i] for i in range(size) if mask >> i & 1]

    semantics = Semantics(semantics)
    if semantics is Semantics.STABLE:
        return canonical_extensions(members(m) for m in stable_masks)
    complete_exts = canonical_extensions(members(m) for m in complete_masks)
    if semantics is Semantics.COMPLETE:
        return complete_exts
    if semantics is Semantics.PREFERRED:
        return maximal(complete_exts)
    # The grounded extension is the complete extension contained in all others.
    least = min(complete_masks, key=lambda m: bin(m).count("1"))
    return canonical_extensions([members(least)])
