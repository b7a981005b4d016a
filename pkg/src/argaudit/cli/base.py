"""Command scaffolding: one class per subcommand with ``help``, ``add_arguments`` and ``handle``."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import TextIO

from argaudit.config import Settings
from argaudit.errors import (
    ConfigError,
    DataFormatError,
    EvaluationError,
    InsufficientCatalogError,
    ParseError,
    SolverError,
    UnknownInputError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_SYNTAX = 2
EXIT_DATA = 3
EXIT_CONFIG = 4
EXIT_SOLVER = 5
EXIT_OVERFLOW = 6


class OutputWrapper:
    """Line-oriented writer: every ``write`` ends with a newline."""

    def __init__(self, stream: TextIO) -> None:
        self._stream = stream

    def write(self, message: str = "") -> None:
        self._stream.write(message if message.endswith("\n") else message + "\n")


class BaseCommand:
    name: str = ""
    help: str = ""
    solver_exit_code: int = EXIT_SOLVER

    def __init__(self, settings: Settings, stdout: TextIO | None = None, stderr: TextIO | None = None) -> None:
        self.settings = settings
        self.stdout = OutputWrapper(stdout or sys.stdout)
        self.stderr = OutputWrapper(stderr or sys.stderr)

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        pass

    def handle(self, options: argparse.Namespace) -> int:
        raise NotImplementedError

    def _fail(self, code: int, exc: BaseException) -> int:
        self.stderr.write(f"argaudit {self.name}: error: {exc}")
        return code

    def execute(self, options: argparse.Namespace) -> int:
        try:
            return self.handle(options)
        except ParseError as exc:
            return self._fail(EXIT_SYNTAX, exc)
        except (DataFormatError, UnknownInputError, InsufficientCatalogError) as exc:
            return self._fail(EXIT_DATA, exc)
        except ConfigError as exc:
            return self._fail(EXIT_CONFIG, exc)
        except (SolverError, EvaluationError) as exc:
            logger.debug("%s failed", self.name, exc_info=True)
            return self._fail(self.solver_exit_code, exc)
        except OSError as exc:
            return self._fail(EXIT_IO, exc)
