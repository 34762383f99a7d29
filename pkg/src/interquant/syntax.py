"""Proposition language: parsing, rendering, categorial typechecking, KB files.

Concrete syntax of a statement::

    ['~'] quantifier '(' Term ')' '(' Term ')'

Terms start with an uppercase Roman letter followed by letters, digits or
underscores. Quantifiers are the lowercase surface names of ``algebra``.
A knowledge-base file holds one statement per line; blank lines and lines
starting with ``#`` are skipped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Optional, Union

from .algebra import (
    FIVE,
    NotInSystem,
    QuantifierSymbol,
    QuantitySystem,
    UnknownQuantifier,
    lookup,
)

TERM_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z", re.ASCII)
QUANTIFIER_RE = re.compile(r"[a-z][a-z0-9_]*\Z", re.ASCII)


def is_term(text: str) -> bool:
    return bool(TERM_RE.match(text))


class ParseError(ValueError):
    """Rejected input. ``kind`` is a stable machine-readable error class."""

    def __init__(self, kind: str, message: str, column: Optional[int] = None):
        self.kind = kind
        self.column = column
        where = f" at column {column + 1}" if column is not None else ""
        super().__init__(f"{kind}: {message}{where}")


@dataclass(frozen=True)
class Statement:
    negated: bool
    quantifier: QuantifierSymbol
    subject: str
    predicate: str

    def __post_init__(self) -> None:
        for t in (self.subject, self.predicate):
            if not is_term(t):
                raise ParseError("bad-term", f"{t!r} is not a term")

    @property
    def pair(self) -> tuple[str, str]:
        return (self.subject, self.predicate)

    def negate(self) -> "Statement":
        return replace(self, negated=not self.negated)

    def with_quantifier(self, q: QuantifierSymbol) -> "Statement":
        return replace(self, quantifier=q)

    def __str__(self) -> str:
        return render(self)


def render(s: Statement) -> str:
    neg = "~" if s.negated else ""
    return f"{neg}{s.quantifier.surface_name}({s.subject})({s.predicate})"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise ParseError("malformed-delimiters", f"expected {ch!r}, got {got!r}", self.pos)
        self.pos += 1

    def word(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in "()~" \
                and not self.text[self.pos].isspace():
            self.pos += 1
        return self.text[start:self.pos], start

    def bracketed_term(self) -> str:
        self.expect("(")
        start = self.pos
        close = self.text.find(")", start)
        if close < 0:
            raise ParseError("malformed-delimiters", "unclosed '('", start - 1)
        inner = self.text[start:close]
        if "(" in inner:
            raise ParseError("malformed-delimiters", "nested '('", start + inner.index("("))
        term = inner.strip()
        if not term:
            raise ParseError("bad-term", "empty term", start)
        if not is_term(term):
            raise ParseError("bad-term", f"{term!r} is not a term "
                             "(uppercase initial, then letters, digits, '_')", start)
        self.pos = close + 1
        return term


def parse(text: str, sys: QuantitySystem = FIVE) -> Statement:
    sc = _Scanner(text)
    negated = False
    if sc.peek() == "~":
        negated = True
        sc.pos += 1
    if sc.peek() == "":
        raise ParseError("malformed-delimiters", "missing quantifier", sc.pos)
    name, col = sc.word()
    if not name:
        raise ParseError("unknown-quantifier", f"expected a quantifier, got {sc.peek()!r}", col)
    if not QUANTIFIER_RE.match(name):
        raise ParseError("unknown-quantifier", f"{name!r} is not a quantifier", col)
    try:
        q = lookup(sys, name)
    except UnknownQuantifier as e:
        raise ParseError("unknown-quantifier", str(e), col) from None
    except NotInSystem as e:
        raise ParseError("not-in-system", str(e), col) from None
    subject = sc.bracketed_term()
    predicate = sc.bracketed_term()
    rest = sc.peek()
    if rest:
        kind = "malformed-delimiters" if rest in "()" else "trailing-garbage"
        raise ParseError(kind, f"unexpected {sc.text[sc.pos:]!r}", sc.pos)
    return Statement(negated, q, subject, predicate)


# -- categorial grammar ------------------------------------------------------

@dataclass(frozen=True)
class Category:
    """Atomic (``Pp``, ``Pr``) or a right-seeking functor ``result/argument``."""

    atom: Optional[str] = None
    result: Optional["Category"] = None
    argument: Optional["Category"] = None

    @property
    def is_functor(self) -> bool:
        return self.atom is None

    def __truediv__(self, other: "Category") -> "Category":
        return Category(result=self, argument=other)

    def __str__(self) -> str:
        if self.atom is not None:
            return self.atom

        def wrap(c: Category) -> str:
            return f"({c})" if c.is_functor else str(c)

        return f"{wrap(self.result)}/{wrap(self.argument)}"


PP = Category("Pp")
PR = Category("Pr")
QUANTIFIER_CATEGORY = (PP / PR) / PR


class CategoryError(TypeError):
    pass


@dataclass(frozen=True)
class Leaf:
    token: str
    category: Category


@dataclass(frozen=True)
class Application:
    functor: "Derivation"
    argument: "Derivation"
    category: Category


Derivation = Union[Leaf, Application]


def forward_apply(functor: Derivation, argument: Derivation) -> Application:
    """X/Y applied to Y gives X."""
    fc = functor.category
    if not fc.is_functor or fc.argument != argument.category:
        raise CategoryError(f"cannot apply {fc} to {argument.category}")
    return Application(functor, argument, fc.result)


def typecheck(s: Statement) -> Application:
    if s.quantifier.surface_name not in _QUANTIFIER_NAMES:
        raise CategoryError(f"no category assigned to {s.quantifier.surface_name!r}")
    q = Leaf(s.quantifier.surface_name, QUANTIFIER_CATEGORY)
    x = Leaf(f"({s.subject})", PR)
    y = Leaf(f"({s.predicate})", PR)
    return forward_apply(forward_apply(q, x), y)


_QUANTIFIER_NAMES = {q.surface_name for q in FIVE.symbols}


def format_derivation(d: Derivation) -> list[str]:
    """Tree lines, root first, e.g. ``Pp`` over ``Pp/Pr`` over the leaves."""
    lines: list[str] = []

    def walk(node: Derivation, prefix: str, tail: str) -> None:
        if isinstance(node, Leaf):
            lines.append(f"{prefix}{node.token} : {node.category}")
            return
        lines.append(f"{prefix}{node.category}  (>)")
        kids = [node.functor, node.argument]
        for i, kid in enumerate(kids):
            last = i == len(kids) - 1
            walk(kid, tail + ("`- " if last else "|- "), tail + ("   " if last else "|  "))

    walk(d, "", "")
    return lines


# -- knowledge bases ----------------------------------------------------------

@dataclass(frozen=True)
class LineError:
    line: int
    text: str
    error: ParseError

    def __str__(self) -> str:
        return f"line {self.line}: {self.error}"


@dataclass(frozen=True)
class KnowledgeBase:
    statements: tuple[Statement, ...]
    system: QuantitySystem = FIVE
    lines: tuple[int, ...] = ()
    errors: tuple[LineError, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        for s in self.statements:
            if s.quantifier not in self.system:
                raise NotInSystem(f"{render(s)} uses a quantifier outside "
                                  f"the {self.system.n}-quantity system")

    @classmethod
    def of(cls, statements: Iterable[Statement], system: QuantitySystem = FIVE) -> "KnowledgeBase":
        unique = tuple(dict.fromkeys(statements))
        return cls(unique, system)

    @property
    def terms(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for s in self.statements:
            seen.setdefault(s.subject)
            seen.setdefault(s.predicate)
        return tuple(seen)

    def __iter__(self) -> Iterator[Statement]:
        return iter(self.statements)

    def __len__(self) -> int:
        return len(self.statements)

    def __contains__(self, s: object) -> bool:
        return s in self.statements


def parse_kb(text: str, sys: QuantitySystem = FIVE) -> KnowledgeBase:
    """Load a KB; bad lines are collected in ``errors``, good lines still load."""
    found: dict[Statement, int] = {}
    errors = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            s = parse(line, sys)
        except ParseError as e:
            errors.append(LineError(lineno, line, e))
            continue
        found.setdefault(s, lineno)
    return KnowledgeBase(tuple(found), sys, tuple(found.values()), tuple(errors))
