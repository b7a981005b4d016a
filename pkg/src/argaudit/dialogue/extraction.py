from __future__ import annotations

from argaudit.af.graph import ArgGraph
from argaudit.arguments.attacks import attacks
from argaudit.dialogue.models import Dialogue
from argaudit.recommender.catalog import Catalog
from argaudit.system.similarity import SimilaritySpec


def extract_af(dialogue: Dialogue, spec: SimilaritySpec, catalog: Catalog) -> ArgGraph:
    """The argumentation graph of a well-formed dialogue.

    Arguments are named by their assert ordinal (1, 2, ...); the move index that
    asserted each one is kept in ``move_index_of``.
    """
    asserted = dialogue.asserted
    arguments = {ordinal: argument for ordinal, (_, argument) in enumerate(asserted, start=1)}
    pairs = [
        (i, j)
        for i, a in arguments.items()
        for j, b in arguments.items()
        if i != j and attacks(a, b, spec, catalog)
    ]
    return ArgGraph.build(
        arguments,
        pairs,
        conclusion_of={ordinal: argument.conclusion for ordinal, argument in arguments.items()},
        move_index_of={ordinal: index for ordinal, (index, _) in enumerate(asserted, start=1)},
    )
