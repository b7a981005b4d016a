"""Run a full audit of the reference recommender against a policy."""

from __future__ import annotations

import argparse
import logging
from collections import Counter
from pathlib import Path

from argaudit.af.semantics import Semantics
from argaudit.cli.base import EXIT_OK, BaseCommand
from argaudit.config import load_audit_config
from argaudit.investigation.agents import InvestigatorAgent, SuspectAgent
from argaudit.investigation.interrogation import interrogate
from argaudit.investigation.report import REPORT_NAME, write_audit
from argaudit.policy.parser import load_policy
from argaudit.recommender.catalog import load_catalog_files
from argaudit.recommender.describe import VARIETY_DESCRIPTORS, variety_description_map
from argaudit.recommender.recommend import recommender_system

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    name = "audit"
    help = "Interrogate the recommender on every topic of the policy and write the verdict report."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--policy", type=Path, required=True, help="Policy file (.pol).")
        parser.add_argument("--movies", type=Path, required=True, help="movies.csv catalog.")
        parser.add_argument("--ratings", type=Path, required=True, help="ratings.csv table.")
        parser.add_argument("--config", type=Path, required=True, help="Audit config file.")
        parser.add_argument(
            "--semantics",
            choices=[s.value for s in Semantics],
            default=None,
            help="Argumentation semantics; defaults to [semantics] default in the config.",
        )
        parser.add_argument(
            "--out", type=Path, required=True, help="Directory for transcripts, graphs and report.json."
        )
        parser.add_argument(
            "--workers",
            type=int,
            default=None,
            help="Topics examined in parallel (default: ARGAUDIT_WORKERS, else 1).",
        )

    def handle(self, options: argparse.Namespace) -> int:
        program = load_policy(options.policy)
        catalog, ratings = load_catalog_files(options.movies, options.ratings)
        config = load_audit_config(options.config)
        config.check_against(program)
        config.check_vocabulary(VARIETY_DESCRIPTORS)
        semantics = Semantics(options.semantics) if options.semantics else config.semantics
        workers = max(1, options.workers or self.settings.workers)

        system = recommender_system(catalog, ratings)
        investigator = InvestigatorAgent(policy=program, strategy=config.topic_strategy(), system=system)
        suspect = SuspectAgent(
            policy=program,
            system=system,
            describe=variety_description_map(catalog, config.thresholds),
            catalog=catalog,
            ratings=ratings,
            sampling=config.sampling,
        )
        verdict = interrogate(
            investigator,
            suspect,
            semantics,
            config.similarity,
            max_extensions=self.settings.max_extensions,
            workers=workers,
        )
        write_audit(options.out, verdict)
        logger.info("System evaluated on %d distinct inputs", system.calls)

        counts = Counter(outcome.status.value.value for outcome in verdict.outcomes)
        self.stdout.write(
            f"verdict: {verdict.value.value} ({len(verdict.outcomes)} topics, {semantics.value}; "
            f"sceptical={counts['sceptical']} credulous={counts['credulous']} rejected={counts['rejected']}) "
            f"-> {options.out / REPORT_NAME}"
        )
        return EXIT_OK
