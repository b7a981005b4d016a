import logging

import pytest

from argaudit.af.semantics import DEFAULT_MAX_EXTENSIONS, Semantics
from argaudit.config import Settings, load_audit_config, logging_config, parse_audit_config
from argaudit.errors import ConfigError, MissingBindingError, MissingDescriptorGroupError, UndeclaredDescriptorError
from argaudit.investigation.agents import DescriptorMode
from argaudit.policy import Atom, parse_policy
from argaudit.recommender.describe import HIGH_VARIETY, VARIETY_DESCRIPTORS
from argaudit.system.similarity import SimilarityKind


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("ARGAUDIT_LOG_LEVEL", "ARGAUDIT_MAX_EXTENSIONS", "ARGAUDIT_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


def test_settings_defaults(clean_env):
    assert Settings.from_env() == Settings(log_level="INFO", max_extensions=DEFAULT_MAX_EXTENSIONS, workers=1)


def test_settings_from_env(clean_env):
    clean_env.setenv("ARGAUDIT_LOG_LEVEL", "debug")
    clean_env.setenv("ARGAUDIT_MAX_EXTENSIONS", "50")
    clean_env.setenv("ARGAUDIT_WORKERS", "4")
    assert Settings.from_env() == Settings(log_level="DEBUG", max_extensions=50, workers=4)


@pytest.mark.parametrize(
    "name, value",
    [
        ("ARGAUDIT_LOG_LEVEL", "verbose"),
        ("ARGAUDIT_MAX_EXTENSIONS", "many"),
        ("ARGAUDIT_MAX_EXTENSIONS", "0"),
        ("ARGAUDIT_WORKERS", "-2"),
    ],
)
def test_settings_rejects_bad_values(clean_env, name, value):
    clean_env.setenv(name, value)
    with pytest.raises(ConfigError, match=name):
        Settings.from_env()


def test_logging_goes_to_stderr():
    config = logging_config("WARNING")
    assert config["handlers"]["console"]["stream"] == "ext://sys.stderr"
    assert config["root"]["level"] == "WARNING"


def test_running_example_config(audit_config):
    assert audit_config.similarity.kind is SimilarityKind.SAME_USER_KEYWORD_COSINE
    assert audit_config.similarity.threshold == 0.8
    assert audit_config.declared_descriptors == VARIETY_DESCRIPTORS
    assert set(audit_config.descriptor_groups.values()) == {"variety"}
    assert str(audit_config.bindings[Atom.parse("action(genre(x))")]) == 'genres contains "Action"'
    assert audit_config.thresholds.high_min_genres == 10
    assert audit_config.sampling.max_users_per_movie == 5
    assert audit_config.semantics is Semantics.STABLE
    assert audit_config.descriptor_mode is DescriptorMode.GROUP


def test_empty_config_uses_defaults():
    config = parse_audit_config("")
    assert config.semantics is Semantics.STABLE
    assert config.similarity.threshold == 0.8
    assert config.bindings == {}


def test_same_class_similarity():
    config = parse_audit_config(
        '[similarity]\nkind = same_class\nclass_predicates = director_gender == "F"; genres contains "Action"\n'
    )
    assert config.similarity.kind is SimilarityKind.SAME_CLASS
    assert [p.column for p in config.similarity.class_predicates] == ["director_gender", "genres"]


def test_options_sections():
    config = parse_audit_config("[semantics]\ndefault = preferred\n[topics]\ndescriptor_mode = head_only\n")
    assert config.semantics is Semantics.PREFERRED
    assert config.descriptor_mode is DescriptorMode.HEAD_ONLY


@pytest.mark.parametrize(
    "text, message",
    [
        ("[extras]\na = b\n", "unknown section"),
        ("[sampling]\nmax_movies = 3\n", "unknown keys: max_movies"),
        ("[sampling]\nmax_users_per_movie = 0\n", "max_users_per_movie"),
        ("[thresholds]\nhigh_min_genres = 4\n", "low_max_genres must be below"),
        ("[similarity]\nthreshold = 2\n", "threshold"),
        ("[semantics]\ndefault = ideal\n", "semantics"),
        ("[bindings]\n1bad = genres contains \"Action\"\n", "not a policy atom"),
        ("[bindings]\nwoman(director(x)) = director is \"F\"\n", "cannot parse predicate"),
        ("[descriptors]\nhighVariety(x) =\n", "empty group name"),
        ("no section header\n", "section"),
    ],
)
def test_config_errors(text, message):
    with pytest.raises(ConfigError, match=message):
        parse_audit_config(text, origin="audit.cfg")


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read config"):
        load_audit_config(tmp_path / "missing.cfg")


def test_config_file_must_be_utf8(tmp_path):
    path = tmp_path / "latin1.cfg"
    path.write_bytes("[semantics]\n# café\ndefault = stable\n".encode("latin-1"))
    with pytest.raises(ConfigError, match="is not UTF-8"):
        load_audit_config(path)


def test_check_against_policy(audit_config, policy):
    audit_config.check_against(policy)
    with pytest.raises(MissingBindingError):
        audit_config.check_against(parse_policy("highVariety(x) <- foreign(x)."))
    with pytest.raises(MissingDescriptorGroupError):
        audit_config.check_against(parse_policy("popular(x) <- woman(director(x))."))


def test_check_vocabulary(audit_config):
    audit_config.check_vocabulary(VARIETY_DESCRIPTORS)
    narrow = parse_audit_config("[descriptors]\nhighVariety(x) = variety\nlowVariety(x) = variety\n")
    with pytest.raises(UndeclaredDescriptorError, match=r"mediumVariety\(x\)") as excinfo:
        narrow.check_vocabulary(VARIETY_DESCRIPTORS)
    assert excinfo.value.atom == "mediumVariety(x)"


def test_unused_bindings_are_reported(audit_config, caplog):
    with caplog.at_level(logging.WARNING, logger="argaudit.config"):
        audit_config.check_against(parse_policy("highVariety(x) <- woman(director(x))."))
    assert "action(genre(x)), independent(type(x))" in caplog.text
    assert HIGH_VARIETY in audit_config.descriptor_groups
