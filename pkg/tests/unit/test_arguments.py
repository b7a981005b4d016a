import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from argaudit.arguments.attacks import attacks, related_to
from argaudit.arguments.generator import SamplingLimits, generate_arguments, sample_inputs
from argaudit.arguments.models import BlackBoxArgument
from argaudit.arguments.topics import FeaturePredicate, InputClassSpec, Operator, Topic
from argaudit.errors import ConfigError, UnknownInputError
from argaudit.policy.models import Atom
from argaudit.recommender.describe import HIGH_VARIETY, LOW_VARIETY, MEDIUM_VARIETY, VARIETY_DESCRIPTORS
from argaudit.system.models import InputPoint
from argaudit.system.similarity import SimilarityKind, SimilaritySpec, cosine_similarity, similar

WOMAN = FeaturePredicate.parse('director_gender == "F"')
INDEPENDENT = FeaturePredicate.parse('production_type == "independent"')
ACTION = FeaturePredicate.parse('genres contains "Action"')


def point(user_id, movie_id):
    return InputPoint(user_id=user_id, movie_id=movie_id)


def argument(user_id, movie_id, conclusion):
    return BlackBoxArgument(support=point(user_id, movie_id), conclusion=conclusion)


def topic(*predicates, descriptors=VARIETY_DESCRIPTORS, label="t"):
    return Topic(input_class=InputClassSpec(predicates=predicates), descriptors=descriptors, label=label)


@pytest.mark.parametrize(
    "v1, v2, expected",
    [
        ((1, 0, 1), (1, 0, 1), 1.0),
        ((1, 0), (0, 1), 0.0),
        ((1, 1, 0), (1, 0, 0), 1 / math.sqrt(2)),
        ((0, 0), (1, 1), 0.0),
    ],
)
def test_cosine_similarity(v1, v2, expected):
    assert cosine_similarity(v1, v2) == pytest.approx(expected, abs=1e-9)


vectors = st.lists(st.integers(min_value=0, max_value=5), min_size=4, max_size=4)


@settings(max_examples=100, derandomize=True)
@given(vectors, vectors, st.integers(min_value=1, max_value=7))
def test_cosine_symmetric_and_scale_invariant(v1, v2, alpha):
    assert cosine_similarity(v1, v2) == pytest.approx(cosine_similarity(v2, v1))
    assert cosine_similarity([alpha * x for x in v1], v2) == pytest.approx(cosine_similarity(v1, v2))
    assert 0.0 <= cosine_similarity(v1, v2) <= 1.0 + 1e-12


def test_similar_requires_same_user(catalog):
    spec = SimilaritySpec()
    assert similar(spec, point(1, 1), point(1, 1), catalog)
    assert similar(spec, point(1, 1), point(1, 2), catalog)
    assert not similar(spec, point(1, 1), point(2, 1), catalog)
    assert not similar(spec, point(1, 1), point(1, 4), catalog)


def test_similar_threshold_below_cosine(catalog):
    assert not similar(SimilaritySpec(threshold=0.81), point(1, 1), point(1, 2), catalog)
    assert similar(SimilaritySpec(threshold=0.2), point(1, 1), point(1, 4), catalog)


def test_similar_by_class(catalog):
    spec = SimilaritySpec(kind=SimilarityKind.SAME_CLASS, class_predicates=(WOMAN,))
    assert similar(spec, point(1, 1), point(7, 3), catalog)
    assert not similar(spec, point(1, 1), point(1, 4), catalog)


def test_similar_unknown_movie(catalog):
    with pytest.raises(UnknownInputError):
        similar(SimilaritySpec(), point(1, 1), point(1, 999), catalog)


def test_similarity_threshold_range():
    with pytest.raises(ValueError):
        SimilaritySpec(threshold=1.5)


@pytest.mark.parametrize(
    "text, column, operator, value",
    [
        ('director_gender == "F"', "director_gender", Operator.EQUALS, "F"),
        ('  genres   contains "Action" ', "genres", Operator.CONTAINS, "Action"),
        ('title contains "Heist"', "title", Operator.CONTAINS, "Heist"),
    ],
)
def test_feature_predicate_parse(text, column, operator, value):
    predicate = FeaturePredicate.parse(text)
    assert (predicate.column, predicate.operator, predicate.value) == (column, operator, value)


@pytest.mark.parametrize("text", ['budget == "1"', "genres contains Action", 'genres ~= "Action"'])
def test_feature_predicate_parse_errors(text):
    with pytest.raises(ConfigError):
        FeaturePredicate.parse(text)


def test_feature_predicate_matching(catalog):
    assert ACTION.matches(catalog.movie(1))
    assert not ACTION.matches(catalog.movie(3))
    assert FeaturePredicate.parse('genres == "Action"').matches(catalog.movie(5))
    assert not FeaturePredicate.parse('genres == "Action"').matches(catalog.movie(1))
    assert FeaturePredicate.parse('title contains "Heist"').matches(catalog.movie(2))


def test_input_class_refinement():
    coarse = InputClassSpec(predicates=(WOMAN,))
    fine = InputClassSpec(predicates=(WOMAN, ACTION))
    assert fine.refines(coarse)
    assert not coarse.refines(fine)
    assert not coarse.refines(coarse)
    assert str(InputClassSpec()) == "*"


def test_related_to(catalog):
    woman_topic = topic(WOMAN, descriptors=frozenset({HIGH_VARIETY}))
    assert related_to(argument(1, 1, HIGH_VARIETY), woman_topic, catalog)
    assert not related_to(argument(1, 1, MEDIUM_VARIETY), woman_topic, catalog)
    assert not related_to(argument(7, 4, HIGH_VARIETY), woman_topic, catalog)
    with pytest.raises(UnknownInputError):
        related_to(argument(1, 999, HIGH_VARIETY), woman_topic, catalog)


def test_attacks(catalog):
    spec = SimilaritySpec()
    assert attacks(argument(1, 1, HIGH_VARIETY), argument(1, 1, MEDIUM_VARIETY), spec, catalog)
    assert attacks(argument(1, 1, HIGH_VARIETY), argument(1, 2, MEDIUM_VARIETY), spec, catalog)
    assert not attacks(argument(1, 1, HIGH_VARIETY), argument(1, 2, HIGH_VARIETY), spec, catalog)
    assert not attacks(argument(1, 1, HIGH_VARIETY), argument(2, 2, MEDIUM_VARIETY), spec, catalog)
    with pytest.raises(UnknownInputError):
        attacks(argument(1, 1, HIGH_VARIETY), argument(1, 999, HIGH_VARIETY), spec, catalog)


fixture_arguments = st.builds(
    argument,
    st.integers(min_value=1, max_value=12),
    st.integers(min_value=1, max_value=30),
    st.sampled_from(sorted(VARIETY_DESCRIPTORS, key=str)),
)


@settings(max_examples=200, derandomize=True, deadline=None)
@given(fixture_arguments, fixture_arguments)
def test_attacks_symmetric_and_irreflexive(catalog, a1, a2):
    spec = SimilaritySpec()
    assert attacks(a1, a2, spec, catalog) == attacks(a2, a1, spec, catalog)
    assert not attacks(a1, a1, spec, catalog)


def test_sample_inputs_caps_users_per_movie(catalog, ratings):
    sample = sample_inputs(topic(WOMAN), catalog, ratings, SamplingLimits(max_users_per_movie=2))
    assert sample.points == (point(1, 1), point(2, 1), point(1, 2), point(2, 2), point(1, 3), point(4, 3))
    assert sample.matching == 10
    assert sample.coverage == 0.6


def test_generate_arguments_for_woman_topic(system, describe, catalog, ratings):
    arguments = generate_arguments(system, describe, topic(WOMAN), catalog, ratings, SamplingLimits())
    assert [(a.support.user_id, a.support.movie_id) for a in arguments] == [
        (1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2), (1, 3), (4, 3), (6, 3),
    ]
    assert [a.conclusion for a in arguments] == [HIGH_VARIETY] * 2 + [MEDIUM_VARIETY] * 5 + [LOW_VARIETY] * 3


def test_generate_arguments_filters_to_topic_descriptors(system, describe, catalog, ratings):
    only_high = topic(WOMAN, descriptors=frozenset({HIGH_VARIETY}))
    arguments = generate_arguments(system, describe, only_high, catalog, ratings, SamplingLimits())
    assert arguments == [argument(1, 1, HIGH_VARIETY), argument(2, 1, HIGH_VARIETY)]
    assert all(related_to(a, only_high, catalog) for a in arguments)


def test_generate_arguments_empty_class(system, describe, catalog, ratings):
    nothing = topic(FeaturePredicate.parse('genres contains "Opera"'))
    assert generate_arguments(system, describe, nothing, catalog, ratings, SamplingLimits()) == []


def test_topic_json_lists_sorted_descriptors():
    data = topic(WOMAN, label="woman").to_json()
    assert data == {
        "label": "woman",
        "input_class": [{"column": "director_gender", "operator": "equals", "value": "F"}],
        "descriptors": ["highVariety(x)", "lowVariety(x)", "mediumVariety(x)"],
    }
    assert Atom.parse(data["descriptors"][0]) == HIGH_VARIETY
