"""Solve a standalone APX graph."""

from __future__ import annotations

import argparse
from pathlib import Path

from argaudit.af.formats import emit_dot, load_apx
from argaudit.af.graph import Extension
from argaudit.af.semantics import Semantics, grounded, solve
from argaudit.cli.base import EXIT_OK, EXIT_OVERFLOW, BaseCommand


def format_extension(extension: Extension) -> str:
    return "[" + ",".join(str(arg_id) for arg_id in extension) + "]"


class Command(BaseCommand):
    name = "solve"
    help = "Print the extensions of an APX graph, one per line, in canonical order."
    solver_exit_code = EXIT_OVERFLOW

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--af", type=Path, required=True, help="Graph in APX format.")
        parser.add_argument(
            "--semantics", choices=[s.value for s in Semantics], default=Semantics.GROUNDED.value, help="Semantics."
        )
        parser.add_argument(
            "--dot",
            type=Path,
            default=None,
            help="Also write the graph as DOT, highlighting the grounded or first extension.",
        )

    def handle(self, options: argparse.Namespace) -> int:
        graph = load_apx(options.af)
        semantics = Semantics(options.semantics)
        extensions = solve(graph, semantics, max_extensions=self.settings.max_extensions)
        for extension in extensions:
            self.stdout.write(format_extension(extension))
        if options.dot is not None:
            if semantics is Semantics.GROUNDED:
                highlight = grounded(graph)
            else:
                highlight = extensions[0] if extensions else ()
            options.dot.write_text(emit_dot(graph, highlight=highlight), encoding="utf-8")
        return EXIT_OK
