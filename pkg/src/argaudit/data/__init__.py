"""Bundled fixture dataset, running-example policy and config, and JSON schemas."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

from jsonschema import validators

DATA_DIR = Path(str(resources.files(__name__)))
MOVIES_CSV = DATA_DIR / "movies.csv"
RATINGS_CSV = DATA_DIR / "ratings.csv"
RUNNING_EXAMPLE_POLICY = DATA_DIR / "running_example.pol"
RUNNING_EXAMPLE_CONFIG = DATA_DIR / "audit.cfg"


@lru_cache
def load_schema(name: str) -> dict:
    return json.loads((DATA_DIR / "schema" / f"{name}.json").read_text(encoding="utf-8"))


def validate_document(instance: dict, schema_name: str) -> None:
    """Raise ``jsonschema.ValidationError`` unless ``instance`` matches the bundled schema."""
    schema = load_schema(schema_name)
    validator_cls = validators.validator_for(schema)
    validator_cls.check_schema(schema)
    validator_cls(schema).validate(instance)


def dump_document(document: dict) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
