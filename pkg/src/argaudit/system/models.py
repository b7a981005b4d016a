from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator

RECOMMENDATION_SIZE = 10


class InputPoint(BaseModel):
    """One query to the system under audit: a user asking about a movie."""

    model_config = ConfigDict(frozen=True)

    user_id: int
    movie_id: int

    def __str__(self) -> str:
        return f"(user {self.user_id}, movie {self.movie_id})"


class Recommendation(BaseModel):
    """Output of the reference recommender: exactly 10 distinct movie ids in rank order."""

    model_config = ConfigDict(frozen=True)

    movie_ids: tuple[int, ...]

    @model_validator(mode="after")
    def _ten_distinct(self) -> Recommendation:
        if len(self.movie_ids) != RECOMMENDATION_SIZE or len(set(self.movie_ids)) != RECOMMENDATION_SIZE:
            raise ValueError(f"a recommendation holds exactly {RECOMMENDATION_SIZE} distinct movie ids")
        return self
