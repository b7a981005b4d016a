"""Description map d: translates a recommendation into policy descriptor atoms.

The variety descriptors partition the distinct-genre count g of the 10
recommended movies:

    g >= high_min_genres              -> highVariety(x)
    g <= low_max_genres               -> lowVariety(x)
    otherwise                         -> mediumVariety(x)

The default high threshold (10) follows the policy's "at least 10 different
genres"; the suspect's own description says "more than 10", which is
``high_min_genres = 11``.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator

from argaudit.policy.models import Atom
from argaudit.recommender.catalog import Catalog
from argaudit.system.models import Recommendation

HIGH_VARIETY = Atom(text="highVariety(x)")
MEDIUM_VARIETY = Atom(text="mediumVariety(x)")
LOW_VARIETY = Atom(text="lowVariety(x)")
VARIETY_DESCRIPTORS = frozenset({HIGH_VARIETY, MEDIUM_VARIETY, LOW_VARIETY})


class DescriptorThresholds(BaseModel):
    model_config = ConfigDict(frozen=True)

    high_min_genres: int = 10
    low_max_genres: int = 5

    @model_validator(mode="after")
    def _ordered(self) -> DescriptorThresholds:
        if self.low_max_genres >= self.high_min_genres:
            raise ValueError("low_max_genres must be below high_min_genres")
        return self


def genre_count(catalog: Catalog, output: Recommendation) -> int:
    return len({genre for movie_id in output.movie_ids for genre in catalog.movie(movie_id).genres})


def describe_output(catalog: Catalog, output: Recommendation, thresholds: DescriptorThresholds) -> Atom:
    count = genre_count(catalog, output)
    if count >= thresholds.high_min_genres:
        return HIGH_VARIETY
    if count <= thresholds.low_max_genres:
        return LOW_VARIETY
    return MEDIUM_VARIETY


def variety_description_map(catalog: Catalog, thresholds: DescriptorThresholds):
    """The general contract d: Y -> 2^L; this demo map always returns a singleton."""

    def describe(output: Recommendation) -> frozenset[Atom]:
        return frozenset({describe_output(catalog, output, thresholds)})

    return describe
