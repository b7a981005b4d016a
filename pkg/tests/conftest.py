from pathlib import Path

import pytest

from argaudit.af.graph import ArgGraph
from argaudit.config import load_audit_config
from argaudit.data import MOVIES_CSV, RATINGS_CSV, RUNNING_EXAMPLE_CONFIG, RUNNING_EXAMPLE_POLICY
from argaudit.investigation.agents import InvestigatorAgent, SuspectAgent
from argaudit.investigation.topics import generate_topics
from argaudit.policy.parser import load_policy
from argaudit.recommender.catalog import load_catalog_files
from argaudit.recommender.describe import variety_description_map
from argaudit.recommender.recommend import recommender_system

GOLDEN_DIR = Path(__file__).parent / "golden"

# Undirected edges of the ten-argument running-example graph; every edge attacks both ways.
RUNNING_EXAMPLE_EDGES = [(2, 3), (2, 6), (2, 8), (2, 9), (3, 6), (3, 8), (4, 6), (6, 8), (8, 10)]


def symmetric_graph(arg_ids, edges) -> ArgGraph:
    pairs = [(a, b) for a, b in edges] + [(b, a) for a, b in edges]
    return ArgGraph.build(arg_ids, pairs)


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture(scope="session")
def running_example_graph() -> ArgGraph:
    return symmetric_graph(range(1, 11), RUNNING_EXAMPLE_EDGES)


@pytest.fixture(scope="session")
def catalog_and_ratings():
    return load_catalog_files(MOVIES_CSV, RATINGS_CSV)


@pytest.fixture(scope="session")
def catalog(catalog_and_ratings):
    return catalog_and_ratings[0]


@pytest.fixture(scope="session")
def ratings(catalog_and_ratings):
    return catalog_and_ratings[1]


@pytest.fixture(scope="session")
def policy():
    return load_policy(RUNNING_EXAMPLE_POLICY)


@pytest.fixture(scope="session")
def audit_config():
    return load_audit_config(RUNNING_EXAMPLE_CONFIG)


@pytest.fixture
def system(catalog, ratings):
    return recommender_system(catalog, ratings)


@pytest.fixture
def describe(catalog, audit_config):
    return variety_description_map(catalog, audit_config.thresholds)


@pytest.fixture
def investigator(policy, audit_config, system):
    return InvestigatorAgent(policy=policy, strategy=audit_config.topic_strategy(), system=system)


@pytest.fixture
def suspect(policy, system, describe, catalog, ratings, audit_config):
    return SuspectAgent(
        policy=policy,
        system=system,
        describe=describe,
        catalog=catalog,
        ratings=ratings,
        sampling=audit_config.sampling,
    )


@pytest.fixture
def topics(investigator):
    return generate_topics(investigator)
