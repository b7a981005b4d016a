"""Movie catalog and rating table ingestion.

``movies.csv`` header, exactly::

    movie_id,title,genres,keywords,director_gender,production_type

``genres`` and ``keywords`` are pipe-separated (``Action|Drama``),
``director_gender`` is one of F/M/U and ``production_type`` one of
independent/studio. ``ratings.csv`` header, exactly::

    user_id,movie_id,rating

with ratings in [0.5, 5.0]. Both files are UTF-8, comma-separated, header
first. Rows are validated through the pydantic records below; every failure is
reported as a DataFormatError carrying the file line number.
"""

from __future__ import annotations

import csv
import io
import logging
import math
from collections import defaultdict
from collections.abc import Iterable, Iterator
from enum import StrEnum
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from argaudit.errors import DataFormatError, DuplicateKeyError, EmptyCatalogError, UnknownMovieError

logger = logging.getLogger(__name__)

MOVIES_HEADER = ("movie_id", "title", "genres", "keywords", "director_gender", "production_type")
RATINGS_HEADER = ("user_id", "movie_id", "rating")


class DirectorGender(StrEnum):
    FEMALE = "F"
    MALE = "M"
    UNKNOWN = "U"


class ProductionType(StrEnum):
    INDEPENDENT = "independent"
    STUDIO = "studio"


class MovieRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    movie_id: int
    title: str
    genres: frozenset[str] = Field(min_length=1)
    keywords: frozenset[str] = Field(min_length=1)
    director_gender: DirectorGender
    production_type: ProductionType


class RatingRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    user_id: int
    movie_id: int
    rating: float = Field(ge=0.5, le=5.0)


class Catalog:
    """Movies by id plus their binary keyword vectors over the catalog vocabulary."""

    def __init__(self, movies: Iterable[MovieRecord]) -> None:
        self._movies = {movie.movie_id: movie for movie in sorted(movies, key=lambda m: m.movie_id)}
        keywords = {kw for movie in self._movies.values() for kw in movie.keywords}
        self.vocabulary: tuple[str, ...] = tuple(sorted(keywords))
        column = {keyword: i for i, keyword in enumerate(self.vocabulary)}
        self._row = {movie_id: i for i, movie_id in enumerate(self._movies)}
        self._matrix = np.zeros((len(self._movies), len(self.vocabulary)), dtype=np.float64)
        for movie_id, movie in self._movies.items():
            for keyword in movie.keywords:
                self._matrix[self._row[movie_id], column[keyword]] = 1.0
        self._matrix.setflags(write=False)

    def __len__(self) -> int:
        return len(self._movies)

    def __contains__(self, movie_id: object) -> bool:
        return movie_id in self._movies

    def __iter__(self) -> Iterator[MovieRecord]:
        return iter(self._movies.values())

    @property
    def movie_ids(self) -> tuple[int, ...]:
        return tuple(self._movies)

    def movie(self, movie_id: int) -> MovieRecord:
        try:
            return self._movies[movie_id]
        except KeyError:
            raise UnknownMovieError(movie_id) from None

    def keyword_vector(self, movie_id: int) -> np.ndarray:
        self.movie(movie_id)
        return self._matrix[self._row[movie_id]]

    def keyword_scores(self, movie_id: int) -> dict[int, float]:
        """Keyword cosine of ``movie_id`` against every catalog movie (itself included)."""
        query = self.keyword_vector(movie_id)
        dots = self._matrix @ query
        norms = self._matrix.sum(axis=1) * float(query.sum())
        scores = np.divide(dots, np.sqrt(norms), out=np.zeros_like(dots), where=norms > 0)
        return {other: float(scores[row]) for other, row in self._row.items()}


class RatingTable:
    def __init__(self, records: Iterable[RatingRecord]) -> None:
        self._records = {(r.user_id, r.movie_id): r for r in records}
        by_movie: dict[int, list[RatingRecord]] = defaultdict(list)
        for record in self._records.values():
            by_movie[record.movie_id].append(record)
        self._raters = {
            movie_id: tuple(sorted(r.user_id for r in rows)) for movie_id, rows in sorted(by_movie.items())
        }
        # fsum is exactly rounded, so means do not depend on file row order.
        self._means = {
            movie_id: math.fsum(r.rating for r in rows) / len(rows) for movie_id, rows in by_movie.items()
        }

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[RatingRecord]:
        return iter(sorted(self._records.values(), key=lambda r: (r.movie_id, r.user_id)))

    @property
    def user_ids(self) -> tuple[int, ...]:
        return tuple(sorted({user_id for user_id, _ in self._records}))

    def mean_rating(self, movie_id: int) -> float:
        """Mean over all users; an unrated movie has mean 0."""
        return self._means.get(movie_id, 0.0)

    def raters_of(self, movie_id: int) -> tuple[int, ...]:
        return self._raters.get(movie_id, ())


def _rows(source: str, header: tuple[str, ...], name: str) -> Iterator[tuple[int, list[str]]]:
    reader = csv.reader(io.StringIO(source))
    first = next(reader, None)
    if first is None or tuple(cell.strip() for cell in first) != header:
        raise DataFormatError(f"{name} header must be exactly {','.join(header)}", row=1)
    for cells in reader:
        if not cells:
            continue
        if len(cells) != len(header):
            raise DataFormatError(f"expected {len(header)} columns, found {len(cells)}", row=reader.line_num)
        yield reader.line_num, [cell.strip() for cell in cells]


def _split(value: str) -> frozenset[str]:
    return frozenset(part.strip() for part in value.split("|") if part.strip())


def _validation_message(exc: ValidationError) -> str:
    error = exc.errors()[0]
    location = ".".join(str(part) for part in error["loc"])
    return f"{location}: {error['msg']}"


def parse_movies(source: str) -> list[MovieRecord]:
    movies: dict[int, MovieRecord] = {}
    for line, cells in _rows(source, MOVIES_HEADER, "movies"):
        raw = dict(zip(MOVIES_HEADER, cells, strict=True))
        try:
            movie = MovieRecord(
                movie_id=raw["movie_id"],
                title=raw["title"],
                genres=_split(raw["genres"]),
                keywords=_split(raw["keywords"]),
                director_gender=raw["director_gender"],
                production_type=raw["production_type"],
            )
        except ValidationError as exc:
            raise DataFormatError(_validation_message(exc), row=line) from exc
        if movie.movie_id in movies:
            raise DuplicateKeyError(f"duplicate movie_id {movie.movie_id}", row=line)
        movies[movie.movie_id] = movie
    if not movies:
        raise EmptyCatalogError("movies file has no rows")
    return list(movies.values())


def parse_ratings(source: str, catalog: Catalog) -> list[RatingRecord]:
    ratings: dict[tuple[int, int], RatingRecord] = {}
    for line, cells in _rows(source, RATINGS_HEADER, "ratings"):
        raw = dict(zip(RATINGS_HEADER, cells, strict=True))
        try:
            record = RatingRecord(**raw)
        except ValidationError as exc:
            raise DataFormatError(_validation_message(exc), row=line) from exc
        if record.movie_id not in catalog:
            raise DataFormatError(f"rating references unknown movie_id {record.movie_id}", row=line)
        key = (record.user_id, record.movie_id)
        if key in ratings:
            raise DuplicateKeyError(f"duplicate rating for user {key[0]}, movie {key[1]}", row=line)
        ratings[key] = record
    return list(ratings.values())


def load_catalog(movies_source: str, ratings_source: str) -> tuple[Catalog, RatingTable]:
    """Validate both CSV sources and build the catalog and rating table."""
    catalog = Catalog(parse_movies(movies_source))
    ratings = RatingTable(parse_ratings(ratings_source, catalog))
    logger.info("Loaded catalog: %d movies, %d ratings, %d users", len(catalog), len(ratings), len(ratings.user_ids))
    return catalog, ratings


def _read_csv(path: Path) -> str:
    data = path.read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        row = data.count(b"\n", 0, exc.start) + 1
        raise DataFormatError(f"{path.name} is not UTF-8 (byte 0x{data[exc.start]:02x})", row=row) from exc


def load_catalog_files(movies_path: Path, ratings_path: Path) -> tuple[Catalog, RatingTable]:
    return load_catalog(_read_csv(movies_path), _read_csv(ratings_path))
