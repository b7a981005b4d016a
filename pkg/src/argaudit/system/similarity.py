"""Similarity maps over inputs.

Two kinds are supported:

  * ``same_user_keyword_cosine``: same user, and the keyword cosine of the two
    movies reaches the threshold (default 0.8);
  * ``same_class``: both inputs fall on the same side of every class predicate.

Both are reflexive on catalog inputs (given threshold <= 1) and symmetric, which
makes the derived attack relation symmetric too.
"""

from __future__ import annotations

import math
from enum import StrEnum

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

from argaudit.arguments.topics import FeaturePredicate
from argaudit.recommender.catalog import Catalog
from argaudit.system.models import InputPoint

DEFAULT_THRESHOLD = 0.8


class SimilarityKind(StrEnum):
    SAME_USER_KEYWORD_COSINE = "same_user_keyword_cosine"
    SAME_CLASS = "same_class"


class SimilaritySpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: SimilarityKind = SimilarityKind.SAME_USER_KEYWORD_COSINE
    threshold: float = Field(default=DEFAULT_THRESHOLD, ge=0.0, le=1.0)
    class_predicates: tuple[FeaturePredicate, ...] = ()


def cosine_similarity(v1: ArrayLike, v2: ArrayLike) -> float:
    """<v1,v2> / (|v1| |v2|); 0 when either vector is zero.

    Computed as dot / sqrt(|v1|^2 |v2|^2) so integer overlaps of binary vectors
    land exactly on rational thresholds such as 4/5.
    """
    a = np.asarray(v1, dtype=np.float64)
    b = np.asarray(v2, dtype=np.float64)
    squared = float(np.dot(a, a)) * float(np.dot(b, b))
    if squared == 0.0:
        return 0.0
    return float(np.dot(a, b)) / math.sqrt(squared)


def similar(spec: SimilaritySpec, x1: InputPoint, x2: InputPoint, catalog: Catalog) -> bool:
    movie1 = catalog.movie(x1.movie_id)
    movie2 = catalog.movie(x2.movie_id)
    if spec.kind is SimilarityKind.SAME_CLASS:
        return all(p.matches(movie1) == p.matches(movie2) for p in spec.class_predicates)
    if x1.user_id != x2.user_id:
        return False
    score = cosine_similarity(catalog.keyword_vector(x1.movie_id), catalog.keyword_vector(x2.movie_id))
    return score >= spec.threshold
