from __future__ import annotations

from argaudit.arguments.models import BlackBoxArgument
from argaudit.arguments.topics import Topic
from argaudit.recommender.catalog import Catalog
from argaudit.system.similarity import SimilaritySpec, similar


def related_to(argument: BlackBoxArgument, topic: Topic, catalog: Catalog) -> bool:
    movie = catalog.movie(argument.support.movie_id)
    return topic.input_class.matches(movie) and argument.conclusion in topic.descriptors


def attacks(a1: BlackBoxArgument, a2: BlackBoxArgument, spec: SimilaritySpec, catalog: Catalog) -> bool:
    # similar() resolves both supports, so unknown movies raise even for equal conclusions.
    if not similar(spec, a1.support, a2.support, catalog):
        return False
    return a1.conclusion != a2.conclusion
