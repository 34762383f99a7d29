"""Finite-model semantics and exhaustive countermodel search.

A statement q(X)(Y) is judged on the proportion r = |X & Y| / |X| against a
threshold f with 1/2 < f < 1::

    all        r = 1          no         r = 0
    almost_all r > f          few        r < 1 - f
    most       r > 1/2        most_not   r <= 1/2
    many       r >= 1 - f     many_not   r <= f
    some       r > 0          some_not   r < 1

Every term denotes a nonempty set, which gives existential import to both
subject and predicate. With this choice each quantifier and its
contradictory are exact complements and both chains are sound.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from . import kernels
from .algebra import LETTER_CODES, FIVE, QuantitySystem
from .engine import saturate
from .syntax import KnowledgeBase, Statement

DEFAULT_F = Fraction(3, 4)
DEFAULT_MAX_UNIVERSE = 5
DEFAULT_MAX_TERMS = 4


class UnknownTerm(KeyError):
    pass


class TooManyTerms(ValueError):
    pass


@dataclass(frozen=True)
class Semantics:
    f: Fraction = DEFAULT_F

    def __post_init__(self) -> None:
        f = Fraction(self.f)
        object.__setattr__(self, "f", f)
        if not Fraction(1, 2) < f < 1:
            raise ValueError(f"threshold must satisfy 1/2 < f < 1, got {f}")

    def letter_holds(self, letter: str, r: Fraction) -> bool:
        f = self.f
        half = Fraction(1, 2)
        return {
            "A": lambda: r == 1,
            "P": lambda: r > f,
            "T": lambda: r > half,
            "K": lambda: r >= 1 - f,
            "I": lambda: r > 0,
            "E": lambda: r == 0,
            "B": lambda: r < 1 - f,
            "D": lambda: r <= half,
            "G": lambda: r <= f,
            "O": lambda: r < 1,
        }[letter]()


DEFAULT_SEMANTICS = Semantics()


@dataclass(frozen=True)
class FiniteModel:
    universe_size: int
    extensions: Mapping[str, frozenset]

    def __post_init__(self) -> None:
        if self.universe_size < 1:
            raise ValueError("universe must have at least one element")
        ext = {t: frozenset(v) for t, v in self.extensions.items()}
        for t, v in ext.items():
            if not v:
                raise ValueError(f"term {t} has an empty extension")
            if not all(0 <= e < self.universe_size for e in v):
                raise ValueError(f"extension of {t} leaves the universe")
        object.__setattr__(self, "extensions", ext)

    @classmethod
    def from_masks(cls, m: int, terms: Sequence[str], masks: Sequence[int]) -> "FiniteModel":
        return cls(m, {t: frozenset(i for i in range(m) if mask >> i & 1)
                       for t, mask in zip(terms, masks)})

    def __hash__(self) -> int:
        return hash((self.universe_size, tuple(sorted(
            (t, tuple(sorted(v))) for t, v in self.extensions.items()))))

    def describe(self) -> str:
        parts = [f"{t}={{{', '.join(map(str, sorted(v)))}}}" for t, v in self.extensions.items()]
        return f"m={self.universe_size}: " + ", ".join(parts)


def ratio(model: FiniteModel, subject: str, predicate: str) -> Fraction:
    try:
        x = model.extensions[subject]
        y = model.extensions[predicate]
    except KeyError as e:
        raise UnknownTerm(f"model has no extension for {e.args[0]}") from None
    return Fraction(len(x & y), len(x))


def eval_statement(model: FiniteModel, s: Statement, sem: Semantics = DEFAULT_SEMANTICS) -> bool:
    value = sem.letter_holds(s.quantifier.letter, ratio(model, s.subject, s.predicate))
    return value != s.negated


def _terms(statements: Iterable[Statement]) -> list[str]:
    seen: dict[str, None] = {}
    for s in statements:
        seen.setdefault(s.subject)
        seen.setdefault(s.predicate)
    return list(seen)


def _rows(statements: Iterable[Statement], index: Mapping[str, int]) -> list[tuple[int, int, int, int]]:
    return [(LETTER_CODES[s.quantifier.letter], index[s.subject], index[s.predicate], int(s.negated))
            for s in statements]


def find_countermodel(premises: Sequence[Statement], conclusion: Statement,
                      sem: Semantics = DEFAULT_SEMANTICS,
                      max_universe: int = DEFAULT_MAX_UNIVERSE,
                      max_terms: int = DEFAULT_MAX_TERMS) -> Optional[FiniteModel]:
    """First model (smallest universe, then lexicographic extensions in
    first-mention term order) where the premises hold and the conclusion fails."""
    if max_universe < 1:
        raise ValueError("max_universe must be >= 1")
    terms = _terms([*premises, conclusion])
    if len(terms) > max_terms:
        raise TooManyTerms(f"{len(terms)} distinct terms exceed the cap of {max_terms}")
    index = {t: i for i, t in enumerate(terms)}
    hit = kernels.first_countermodel(len(terms), _rows(premises, index),
                                     _rows([conclusion], index)[0], max_universe,
                                     sem.f.numerator, sem.f.denominator)
    if hit is None:
        return None
    m, masks = hit
    return FiniteModel.from_masks(m, terms, masks)


def entails(premises: Sequence[Statement], conclusion: Statement,
            sem: Semantics = DEFAULT_SEMANTICS,
            max_universe: int = DEFAULT_MAX_UNIVERSE,
            max_terms: int = DEFAULT_MAX_TERMS) -> bool:
    return find_countermodel(premises, conclusion, sem, max_universe, max_terms) is None


# -- mood tables --------------------------------------------------------------

MOOD_TERMS = ("Alpha", "Beta", "Gamma")
_ALPHA, _BETA, _GAMMA = 0, 1, 2

# (first premise, second premise, conclusion) as (subject, predicate) indices
FIGURES: dict[int, tuple[tuple[int, int], tuple[int, int], tuple[int, int]]] = {
    1: ((_BETA, _ALPHA), (_GAMMA, _BETA), (_GAMMA, _ALPHA)),
    2: ((_BETA, _ALPHA), (_GAMMA, _ALPHA), (_GAMMA, _BETA)),
    3: ((_GAMMA, _ALPHA), (_GAMMA, _BETA), (_BETA, _ALPHA)),
    4: ((_ALPHA, _BETA), (_BETA, _GAMMA), (_GAMMA, _ALPHA)),
}


def figure_statements(figure: int, q1, q2, qc) -> tuple[Statement, Statement, Statement]:
    """The two premises and the conclusion of a mood, over Alpha/Beta/Gamma."""
    layout = FIGURES[figure]
    return tuple(Statement(False, q, MOOD_TERMS[s], MOOD_TERMS[p])
                 for q, (s, p) in zip((q1, q2, qc), layout))


@dataclass(frozen=True)
class MoodRow:
    figure: int
    q_p1: str
    q_p2: str
    q_c: str
    valid: bool
    derivable: bool

    @property
    def mismatch(self) -> bool:
        return self.valid != self.derivable


@dataclass(frozen=True)
class MoodTable:
    system: QuantitySystem
    figure: int
    rows: tuple[MoodRow, ...] = field(repr=False)

    @property
    def unsound_rows(self) -> list[MoodRow]:
        return [r for r in self.rows if r.derivable and not r.valid]

    @property
    def underivable_rows(self) -> list[MoodRow]:
        return [r for r in self.rows if r.valid and not r.derivable]

    @property
    def sound(self) -> bool:
        return not self.unsound_rows

    @property
    def complete(self) -> bool:
        return not self.underivable_rows

    def valid_moods(self) -> set[tuple[str, str, str]]:
        return {(r.q_p1, r.q_p2, r.q_c) for r in self.rows if r.valid}

    def derivable_moods(self) -> set[tuple[str, str, str]]:
        return {(r.q_p1, r.q_p2, r.q_c) for r in self.rows if r.derivable}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["figure", "q_p1", "q_p2", "q_c", "valid", "derivable"])
        for r in self.rows:
            w.writerow([r.figure, r.q_p1, r.q_p2, r.q_c, int(r.valid), int(r.derivable)])
        return buf.getvalue()

    def to_text(self, only_interesting: bool = False) -> str:
        header = ("figure", "q_p1", "q_p2", "q_c", "valid", "derivable", "")
        body = []
        for r in self.rows:
            if only_interesting and not (r.valid or r.derivable):
                continue
            body.append((str(r.figure), r.q_p1, r.q_p2, r.q_c,
                         "yes" if r.valid else "no", "yes" if r.derivable else "no",
                         "<-- MISMATCH" if r.mismatch else ""))
        widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
                 for row in [header, *body]]
        return "\n".join(lines) + "\n"


def enumerate_valid_moods(sys: QuantitySystem = FIVE, figure: int = 1,
                          sem: Semantics = DEFAULT_SEMANTICS,
                          max_universe: int = DEFAULT_MAX_UNIVERSE) -> MoodTable:
    """Cross-tabulate semantic validity against engine derivability.

    Validity comes from one batched pass of the model enumeration kernel
    that records, per premise-quantifier pair, which conclusions hold in every
    model satisfying both premises.
    """
    if figure not in FIGURES:
        raise ValueError(f"figure must be 1..4, got {figure}")
    valid, seen = kernels.mood_table(FIGURES[figure], max_universe,
                                     sem.f.numerator, sem.f.denominator)
    rows = []
    qs = sys.symbols
    for q1 in qs:
        for q2 in qs:
            p1, p2, _ = figure_statements(figure, q1, q2, q1)
            closure = saturate(KnowledgeBase.of([p1, p2], sys))
            key = q1.code * 10 + q2.code
            for qc in qs:
                conclusion = figure_statements(figure, q1, q2, qc)[2]
                rows.append(MoodRow(figure, q1.surface_name, q2.surface_name, qc.surface_name,
                                    bool(valid[key] >> qc.code & 1),
                                    conclusion in closure))
    return MoodTable(sys, figure, tuple(rows))
