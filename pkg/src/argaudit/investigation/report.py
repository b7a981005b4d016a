"""Audit output: per-topic transcripts and graphs, and the verdict report.

Layout under the output directory::

    report.json
    transcripts/topic-01.json
    af/topic-01.apx
    af/topic-01.dot

Paths inside report.json are relative to the output directory. In the DOT
files the arguments accepted in every extension are filled.
"""

from __future__ import annotations

import logging
from pathlib import Path

from argaudit.af.formats import emit_apx, emit_dot
from argaudit.data import dump_document, validate_document
from argaudit.dialogue.transcript import write_transcript
from argaudit.investigation.interrogation import TopicOutcome, Verdict
from argaudit.investigation.nonmonotonic import NonMonotonicityReport, check_nonmonotonicity

logger = logging.getLogger(__name__)

SCHEMA = "verdict"
REPORT_NAME = "report.json"


def topic_paths(position: int) -> dict[str, str]:
    stem = f"topic-{position:02d}"
    return {"transcript": f"transcripts/{stem}.json", "af": f"af/{stem}.apx", "dot": f"af/{stem}.dot"}


def _topic_json(outcome: TopicOutcome, paths: dict[str, str]) -> dict:
    return {
        "label": outcome.topic.label,
        "status": outcome.status.value.value,
        "consistent": outcome.consistent,
        "num_arguments": len(outcome.graph),
        "num_extensions": len(outcome.extensions),
        "transcript": paths["transcript"],
        "af": paths["af"],
        "dot": paths["dot"],
        "coverage": outcome.coverage,
        "sceptical_arguments": list(outcome.status.sceptical_arguments),
        "credulous_arguments": list(outcome.status.credulous_arguments),
    }


def report_json(verdict: Verdict, non_monotonicity: NonMonotonicityReport) -> dict:
    document = {
        "verdict": verdict.value.value,
        "semantics": verdict.semantics.value,
        "topics": [
            _topic_json(outcome, topic_paths(position)) for position, outcome in enumerate(verdict.outcomes, start=1)
        ],
        "non_monotonicity": non_monotonicity.to_json(),
    }
    validate_document(document, SCHEMA)
    return document


def write_audit(out_dir: Path, verdict: Verdict) -> dict:
    """Write every audit artefact and return the report document."""
    non_monotonicity = check_nonmonotonicity([(topic, status.value) for topic, status in verdict.per_topic])
    document = report_json(verdict, non_monotonicity)
    for position, outcome in enumerate(verdict.outcomes, start=1):
        paths = topic_paths(position)
        write_transcript(out_dir / paths["transcript"], outcome.dialogue)
        af_path = out_dir / paths["af"]
        af_path.parent.mkdir(parents=True, exist_ok=True)
        af_path.write_text(emit_apx(outcome.graph), encoding="utf-8")
        dot = emit_dot(outcome.graph, highlight=outcome.status.sceptical_arguments)
        (out_dir / paths["dot"]).write_text(dot, encoding="utf-8")
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / REPORT_NAME).write_text(dump_document(document), encoding="utf-8")
    logger.info("Wrote %d topics and %s to %s", len(verdict.outcomes), REPORT_NAME, out_dir)
    return document
