"""Process settings, logging configuration and the audit config file.

Process settings come from the environment (``.env`` files are loaded by the
CLI before ``Settings.from_env`` runs)::

    ARGAUDIT_LOG_LEVEL       logging level name, default INFO
    ARGAUDIT_MAX_EXTENSIONS  enumeration cap for the semantics, default 10000
    ARGAUDIT_WORKERS         topics examined in parallel by ``audit``, default 1

The audit config file is INI-style, ``key = value`` under ``[section]`` headers.
Keys are kept verbatim since most of them are policy atoms::

    [similarity]
    kind = same_user_keyword_cosine
    threshold = 0.8

    [descriptors]
    highVariety(x) = variety

    [bindings]
    woman(director(x)) = director_gender == "F"

    [thresholds]
    high_min_genres = 10
    low_max_genres = 5

    [sampling]
    max_users_per_movie = 5

    [semantics]
    default = stable

    [topics]
    descriptor_mode = group

For ``kind = same_class`` the ``class_predicates`` key lists predicates
separated by ``;``.
"""

from __future__ import annotations

import configparser
import logging
import logging.config
import os
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

from pydantic import BaseModel, ConfigDict, ValidationError

from argaudit.af.semantics import DEFAULT_MAX_EXTENSIONS, Semantics
from argaudit.arguments.generator import SamplingLimits
from argaudit.arguments.topics import FeaturePredicate
from argaudit.errors import ConfigError, MissingBindingError, MissingDescriptorGroupError, UndeclaredDescriptorError
from argaudit.investigation.agents import DescriptorMode, TopicStrategy
from argaudit.policy.models import Atom, Program
from argaudit.recommender.describe import DescriptorThresholds
from argaudit.system.similarity import SimilaritySpec

logger = logging.getLogger(__name__)

LOG_FORMAT = "[%(asctime)s] [%(levelname)s] [%(name)s.%(funcName)s] %(message)s"
_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


def _positive_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{name} must be at least 1, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    log_level: str = "INFO"
    max_extensions: int = DEFAULT_MAX_EXTENSIONS
    workers: int = 1

    @classmethod
    def from_env(cls) -> Settings:
        log_level = os.environ.get("ARGAUDIT_LOG_LEVEL", "INFO").strip().upper() or "INFO"
        if log_level not in _LEVELS:
            raise ConfigError(f"ARGAUDIT_LOG_LEVEL must be one of {', '.join(_LEVELS)}, got {log_level!r}")
        return cls(
            log_level=log_level,
            max_extensions=_positive_int("ARGAUDIT_MAX_EXTENSIONS", DEFAULT_MAX_EXTENSIONS),
            workers=_positive_int("ARGAUDIT_WORKERS", 1),
        )


def logging_config(level: str) -> dict:
    # stdout carries command output; all log records go to stderr.
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "simple": {"format": LOG_FORMAT},
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "stream": "ext://sys.stderr",
                "formatter": "simple",
            },
        },
        "root": {
            "handlers": ["console"],
            "level": level,
        },
    }


def configure_logging(settings: Settings) -> None:
    logging.config.dictConfig(logging_config(settings.log_level))


class AuditConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    similarity: SimilaritySpec = SimilaritySpec()
    descriptor_groups: dict[Atom, str] = {}
    bindings: dict[Atom, FeaturePredicate] = {}
    thresholds: DescriptorThresholds = DescriptorThresholds()
    sampling: SamplingLimits = SamplingLimits()
    semantics: Semantics = Semantics.STABLE
    descriptor_mode: DescriptorMode = DescriptorMode.GROUP

    @property
    def declared_descriptors(self) -> frozenset[Atom]:
        return frozenset(self.descriptor_groups)

    def topic_strategy(self) -> TopicStrategy:
        return TopicStrategy(
            bindings=self.bindings,
            descriptor_groups=self.descriptor_groups,
            descriptor_mode=self.descriptor_mode,
        )

    def check_against(self, program: Program) -> None:
        """Every clause head needs a descriptor group and every body atom a binding."""
        for clause in program.clauses:
            if clause.head not in self.descriptor_groups:
                raise MissingDescriptorGroupError(str(clause.head))
            for atom in clause.body:
                if atom not in self.bindings:
                    raise MissingBindingError(str(atom))
        unused = sorted(str(atom) for atom in set(self.bindings) - program.language)
        if unused:
            logger.warning("Bindings for atoms outside the policy are ignored: %s", ", ".join(unused))

    def check_vocabulary(self, produced: Iterable[Atom]) -> None:
        """Every descriptor the description map can produce must be declared."""
        for atom in sorted(produced, key=str):
            if atom not in self.declared_descriptors:
                raise UndeclaredDescriptorError(str(atom))


_SECTIONS = {
    "similarity": {"kind", "threshold", "class_predicates"},
    "descriptors": None,
    "bindings": None,
    "thresholds": {"high_min_genres", "low_max_genres"},
    "sampling": {"max_users_per_movie"},
    "semantics": {"default"},
    "topics": {"descriptor_mode"},
}


def _atom(section: str, key: str) -> Atom:
    try:
        return Atom.parse(key)
    except ValidationError:
        raise ConfigError(f"[{section}] {key!r} is not a policy atom") from None


def _section_model(section: str, model: type[BaseModel], values: dict) -> BaseModel:
    try:
        return model(**values)
    except ValidationError as exc:
        details = "; ".join(f"{'.'.join(str(p) for p in err['loc']) or section}: {err['msg']}" for err in exc.errors())
        raise ConfigError(f"[{section}] {details}") from exc


def parse_audit_config(text: str, *, origin: str | None = None) -> AuditConfig:
    where = f"{origin}: " if origin else ""
    parser = configparser.ConfigParser(delimiters=("=",), interpolation=None, comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        parser.read_string(text, source=origin or "<config>")
    except configparser.Error as exc:
        raise ConfigError(f"{where}{exc}") from exc

    for section in parser.sections():
        if section not in _SECTIONS:
            raise ConfigError(f"{where}unknown section [{section}]")
        allowed = _SECTIONS[section]
        if allowed is not None:
            unknown = sorted(set(parser[section]) - allowed)
            if unknown:
                raise ConfigError(f"{where}[{section}] unknown keys: {', '.join(unknown)}")

    def section(name: str) -> dict[str, str]:
        return dict(parser[name]) if parser.has_section(name) else {}

    similarity_values: dict = section("similarity")
    raw_predicates = similarity_values.pop("class_predicates", "")
    similarity_values["class_predicates"] = tuple(
        FeaturePredicate.parse(p) for p in raw_predicates.split(";") if p.strip()
    )
    bindings = {_atom("bindings", key): FeaturePredicate.parse(value) for key, value in section("bindings").items()}
    descriptor_groups = {}
    for key, value in section("descriptors").items():
        if not value.strip():
            raise ConfigError(f"{where}[descriptors] {key} has an empty group name")
        descriptor_groups[_atom("descriptors", key)] = value.strip()

    options: dict = {}
    if "default" in section("semantics"):
        options["semantics"] = section("semantics")["default"].strip()
    if "descriptor_mode" in section("topics"):
        options["descriptor_mode"] = section("topics")["descriptor_mode"].strip()
    try:
        return AuditConfig(
            similarity=_section_model("similarity", SimilaritySpec, similarity_values),
            descriptor_groups=descriptor_groups,
            bindings=bindings,
            thresholds=_section_model("thresholds", DescriptorThresholds, section("thresholds")),
            sampling=_section_model("sampling", SamplingLimits, section("sampling")),
            **options,
        )
    except ValidationError as exc:
        details = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors())
        raise ConfigError(f"{where}{details}") from exc


def load_audit_config(path: Path) -> AuditConfig:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise ConfigError(f"config {path} is not UTF-8: {exc.reason}") from exc
    return parse_audit_config(text, origin=str(path))
