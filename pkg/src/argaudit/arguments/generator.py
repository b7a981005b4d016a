"""Argument generator g: from a topic to every related black-box argument.

The input class T_X is grounded on the rated pairs: for every catalog movie
matching the class, the users who rated it (ascending, at most
``max_users_per_movie``) form the sampled inputs.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field

from argaudit.arguments.models import BlackBoxArgument
from argaudit.arguments.topics import Topic
from argaudit.policy.models import Atom
from argaudit.recommender.catalog import Catalog, RatingTable
from argaudit.system.models import InputPoint
from argaudit.system.suspect import SuspectSystem

logger = logging.getLogger(__name__)

DescriptionMap = Callable[[object], frozenset[Atom]]


class SamplingLimits(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_users_per_movie: int = Field(default=5, ge=1)


@dataclass(frozen=True)
class InputSample:
    points: tuple[InputPoint, ...]
    matching: int

    @property
    def coverage(self) -> float:
        """Share of matching rated pairs that were sampled; 1.0 when nothing matches."""
        if self.matching == 0:
            return 1.0
        return len(self.points) / self.matching


def sample_inputs(topic: Topic, catalog: Catalog, ratings: RatingTable, sampling: SamplingLimits) -> InputSample:
    points: list[InputPoint] = []
    matching = 0
    for movie in catalog:
        if not topic.input_class.matches(movie):
            continue
        raters = ratings.raters_of(movie.movie_id)
        matching += len(raters)
        points.extend(
            InputPoint(user_id=user_id, movie_id=movie.movie_id) for user_id in raters[: sampling.max_users_per_movie]
        )
    return InputSample(points=tuple(points), matching=matching)


def generate_arguments(
    system: SuspectSystem,
    describe: DescriptionMap,
    topic: Topic,
    catalog: Catalog,
    ratings: RatingTable,
    sampling: SamplingLimits,
) -> list[BlackBoxArgument]:
    sample = sample_inputs(topic, catalog, ratings, sampling)
    arguments: list[BlackBoxArgument] = []
    for point in sample.points:
        descriptors = describe(system.evaluate(point)) & topic.descriptors
        for conclusion in sorted(descriptors, key=str):
            arguments.append(BlackBoxArgument(support=point, conclusion=conclusion))
    logger.debug(
        "Topic %s: %d inputs sampled of %d, %d arguments",
        topic.label,
        len(sample.points),
        sample.matching,
        len(arguments),
    )
    return arguments
