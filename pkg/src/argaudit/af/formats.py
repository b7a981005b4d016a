"""APX and DOT interchange.

APX is the line format used by argumentation solver competitions::

    arg(a).
    att(a,b).

Ids made only of digits are read as ints unless they carry a leading zero, so
``01`` and ``1`` stay distinct; anything else is a string. Blank
lines and ``%`` comments are ignored. ``emit_apx`` writes arguments in id order
then attacks in lexicographic order, one statement per line.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from pathlib import Path

from argaudit.af.graph import ArgGraph, ArgId
from argaudit.errors import ApxSyntaxError, UndeclaredArgumentError

_ID = r"[A-Za-z0-9_]+"
_ARG = re.compile(rf"^arg\(\s*(?P<id>{_ID})\s*\)\.$")
_ATT = re.compile(rf"^att\(\s*(?P<source>{_ID})\s*,\s*(?P<target>{_ID})\s*\)\.$")
_DOT_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _arg_id(token: str) -> ArgId:
    if token.isdigit() and (token == "0" or not token.startswith("0")):
        return int(token)
    return token


def parse_apx(text: str, *, origin: str | None = None) -> ArgGraph:
    arg_ids: dict[ArgId, None] = {}
    attacks: list[tuple[ArgId, ArgId, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        column = raw.index(line[0]) + 1
        if match := _ARG.match(line):
            arg_ids.setdefault(_arg_id(match["id"]))
        elif match := _ATT.match(line):
            attacks.append((_arg_id(match["source"]), _arg_id(match["target"]), line_no))
        else:
            raise ApxSyntaxError(
                f"expected arg(<id>). or att(<id>,<id>). but found {line!r}", line=line_no, column=column, source=origin
            )
    for source, target, line_no in attacks:
        for arg_id in (source, target):
            if arg_id not in arg_ids:
                raise UndeclaredArgumentError(
                    f"att names undeclared argument {arg_id}", line=line_no, column=1, source=origin
                )
    return ArgGraph.build(arg_ids, ((s, t) for s, t, _ in attacks))


def load_apx(path: Path) -> ArgGraph:
    data = path.read_bytes()
    try:
        source = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ApxSyntaxError.from_decode_error(exc, source=str(path)) from exc
    return parse_apx(source, origin=str(path))


def emit_apx(graph: ArgGraph) -> str:
    lines = [f"arg({a})." for a in graph.arg_ids]
    lines.extend(f"att({a},{b})." for a, b in graph.sorted_attacks())
    return "".join(f"{line}\n" for line in lines)


def _dot_id(arg_id: ArgId) -> str:
    text = str(arg_id)
    if isinstance(arg_id, int) or _DOT_NAME.match(text):
        return text
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(graph: ArgGraph, highlight: Iterable[ArgId] | None = None) -> str:
    if not graph.arg_ids:
        return "digraph af { }\n"
    highlighted = set(highlight or ())
    lines = ["digraph af {"]
    for arg_id in graph.arg_ids:
        attrs = []
        if arg_id in graph.conclusion_of:
            attrs.append(f'label="{arg_id}: {graph.conclusion_of[arg_id]}"')
        if arg_id in highlighted:
            attrs.append("style=filled")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_dot_id(arg_id)}{suffix};")
    lines.extend(f"  {_dot_id(a)} -> {_dot_id(b)};" for a, b in graph.sorted_attacks())
    lines.append("}")
    return "\n".join(lines) + "\n"
