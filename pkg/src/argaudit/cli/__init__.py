"""``argaudit`` command line: ``audit``, ``solve`` and ``topics``."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from dotenv import load_dotenv

from argaudit import __version__
from argaudit.cli.base import EXIT_CONFIG, BaseCommand
from argaudit.cli.commands import audit, solve, topics
from argaudit.config import Settings, configure_logging
from argaudit.errors import ConfigError

COMMANDS: tuple[type[BaseCommand], ...] = (audit.Command, solve.Command, topics.Command)


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="argaudit", description="Argumentation-based black-box compliance audits.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command_cls in COMMANDS:
        command = command_cls(settings)
        subparser = subparsers.add_parser(command.name, help=command.help, description=command.help)
        command.add_arguments(subparser)
        subparser.set_defaults(handler=command)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    load_dotenv()
    try:
        settings = Settings.from_env()
    except ConfigError as exc:
        sys.stderr.write(f"argaudit: error: {exc}\n")
        return EXIT_CONFIG
    configure_logging(settings)
    options = build_parser(settings).parse_args(argv)
    return options.handler.execute(options)
