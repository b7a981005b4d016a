"""Two-step hybrid recommender, deterministic at desk scale.

Step 1 scores every other movie by keyword cosine to the query movie and keeps
the 20 best (score desc, movie_id asc). Step 2 ranks those by mean rating over
all users (desc, unrated = 0, movie_id asc) and returns the top 10. The user id
is accepted but does not personalize the ranking.
"""

from __future__ import annotations

from argaudit.errors import InsufficientCatalogError
from argaudit.recommender.catalog import Catalog, RatingTable
from argaudit.system.models import RECOMMENDATION_SIZE, InputPoint, Recommendation
from argaudit.system.suspect import SuspectSystem

CANDIDATE_POOL = 20


def recommend(catalog: Catalog, ratings: RatingTable, user_id: int, movie_id: int) -> Recommendation:
    if len(catalog) < RECOMMENDATION_SIZE + 1:
        raise InsufficientCatalogError(len(catalog), RECOMMENDATION_SIZE + 1)
    scores = catalog.keyword_scores(movie_id)
    others = sorted((m for m in catalog.movie_ids if m != movie_id), key=lambda m: (-scores[m], m))
    candidates = others[:CANDIDATE_POOL]
    ranked = sorted(candidates, key=lambda m: (-ratings.mean_rating(m), m))
    return Recommendation(movie_ids=tuple(ranked[:RECOMMENDATION_SIZE]))


def recommender_system(catalog: Catalog, ratings: RatingTable) -> SuspectSystem[Recommendation]:
    """Wrap the recommender as a suspect system whose input dataset is every rated pair."""
    dataset = [InputPoint(user_id=r.user_id, movie_id=r.movie_id) for r in ratings]

    def _evaluate(point: InputPoint) -> Recommendation:
        return recommend(catalog, ratings, point.user_id, point.movie_id)

    return SuspectSystem(_evaluate, dataset)
