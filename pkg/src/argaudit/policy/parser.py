"""Concrete syntax for policies written as extended definite logic programs.

Grammar (``%`` starts a comment that runs to the end of the line)::

    clause   := atom "." | atom "<-" body "."
    body     := atom ("," atom)*
    atom     := ["~"] ident ["(" termlist ")"]
    termlist := term ("," term)*
    term     := ident ["(" termlist ")"]
    ident    := [A-Za-z_][A-Za-z0-9_]*

Atoms are propositional: ``woman(director(x))`` is parsed for well-formedness and
then kept as the opaque canonical text ``woman(director(x))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from argaudit.errors import PolicySyntaxError
from argaudit.policy.models import Atom, Clause, Program

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
    | (?P<comment>%[^\n]*)
    | (?P<arrow><-)
    | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<badident>[0-9][A-Za-z0-9_]*)
    | (?P<punct>[().,~])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    value: str
    line: int
    column: int


def _tokenize(source: str, origin: str | None) -> list[_Token]:
    tokens: list[_Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(source):
        match = _TOKEN.match(source, pos)
        column = pos - line_start + 1
        if match is None:
            raise PolicySyntaxError(f"unexpected character {source[pos]!r}", line=line, column=column, source=origin)
        kind = match.lastgroup
        text = match.group()
        if kind == "badident":
            raise PolicySyntaxError(f"bad identifier {text!r}", line=line, column=column, source=origin)
        if kind == "punct":
            tokens.append(_Token(text, text, line, column))
        elif kind in ("ident", "arrow"):
            tokens.append(_Token(kind, text, line, column))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        pos = match.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], origin: str | None) -> None:
        self._tokens = tokens
        self._pos = 0
        self._origin = origin

    def _peek(self) -> _Token:
        return self._tokens[self._pos]

    def _advance(self) -> _Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _error(self, message: str, token: _Token) -> PolicySyntaxError:
        return PolicySyntaxError(message, line=token.line, column=token.column, source=self._origin)

    def _expect(self, kind: str, what: str) -> _Token:
        token = self._peek()
        if token.kind != kind:
            found = "end of input" if token.kind == "eof" else repr(token.value)
            raise self._error(f"expected {what}, found {found}", token)
        return self._advance()

    def program(self) -> Program:
        clauses = []
        while self._peek().kind != "eof":
            clauses.append(self._clause())
        return Program(clauses=tuple(clauses))

    def _clause(self) -> Clause:
        head = self._atom()
        token = self._peek()
        if token.kind == ".":
            self._advance()
            return Clause(head=head)
        if token.kind != "arrow":
            if token.kind == "eof":
                raise self._error("unterminated clause, expected '.'", token)
            raise self._error(f"expected '.' or '<-', found {token.value!r}", token)
        self._advance()
        body = [self._atom()]
        while self._peek().kind == ",":
            self._advance()
            body.append(self._atom())
        token = self._peek()
        if token.kind != ".":
            if token.kind == "eof":
                raise self._error("unterminated clause, expected '.'", token)
            raise self._error(f"expected ',' or '.', found {token.value!r}", token)
        self._advance()
        return Clause(head=head, body=tuple(body))

    def _atom(self) -> Atom:
        negated = False
        if self._peek().kind == "~":
            self._advance()
            negated = True
        return Atom(text=self._term(), negated=negated)

    def _term(self) -> str:
        name = self._expect("ident", "an identifier").value
        if self._peek().kind != "(":
            return name
        opening = self._advance()
        args = [self._term()]
        while self._peek().kind == ",":
            self._advance()
            args.append(self._term())
        token = self._peek()
        if token.kind != ")":
            raise self._error(f"unbalanced parentheses: '(' at {opening.line}:{opening.column} is never closed", token)
        self._advance()
        return f"{name}({','.join(args)})"


def parse_policy(source: str, *, origin: str | None = None) -> Program:
    """Parse policy text into a Program; raises PolicySyntaxError with line/column."""
    return _Parser(_tokenize(source, origin), origin).program()


def load_policy(path: Path) -> Program:
    data = path.read_bytes()
    try:
        source = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise PolicySyntaxError.from_decode_error(exc, source=str(path)) from exc
    return parse_policy(source, origin=str(path))
