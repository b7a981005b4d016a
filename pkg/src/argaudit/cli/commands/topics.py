"""List the topics the investigator would open, without querying any system."""

from __future__ import annotations

import argparse
from pathlib import Path

from argaudit.cli.base import EXIT_OK, BaseCommand
from argaudit.config import load_audit_config
from argaudit.investigation.agents import InvestigatorAgent
from argaudit.investigation.topics import generate_topics
from argaudit.policy.parser import load_policy


class Command(BaseCommand):
    name = "topics"
    help = "List generated topics with their input class and descriptor set."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--policy", type=Path, required=True, help="Policy file (.pol).")
        parser.add_argument("--config", type=Path, required=True, help="Audit config file.")

    def handle(self, options: argparse.Namespace) -> int:
        program = load_policy(options.policy)
        config = load_audit_config(options.config)
        config.check_against(program)
        investigator = InvestigatorAgent(policy=program, strategy=config.topic_strategy())
        for position, topic in enumerate(generate_topics(investigator), start=1):
            descriptors = ", ".join(str(atom) for atom in topic.sorted_descriptors)
            self.stdout.write(f"topic-{position:02d}\t{topic.label}\tT_X: {topic.input_class}\tT_P: {descriptors}")
        return EXIT_OK
