"""Quantifier symbols, the two ordered chains, and the square operators.

Affirmative chain, strongest first: all, almost_all, most, many, some.
Negative chain, strongest first: no, few, most_not, many_not, some_not.

A symbol's ``index`` is its rank in its own chain inside a given quantity
system, so the same letter may carry different indices in the 2- and
5-quantity systems (``some`` is index 4 in one and index 1 in the other).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache


class Polarity(enum.Enum):
    AFFIRMATIVE = "affirmative"
    NEGATIVE = "negative"

    @property
    def opposite(self) -> "Polarity":
        if self is Polarity.AFFIRMATIVE:
            return Polarity.NEGATIVE
        return Polarity.AFFIRMATIVE


class AlgebraError(ValueError):
    """Base class for lexicon and system-membership errors."""


class UnknownQuantifier(AlgebraError):
    pass


class NotInSystem(AlgebraError):
    pass


# letter -> (surface name, polarity, rank in the 5-quantity chain)
LEXICON: dict[str, tuple[str, Polarity, int]] = {
    "A": ("all", Polarity.AFFIRMATIVE, 0),
    "P": ("almost_all", Polarity.AFFIRMATIVE, 1),
    "T": ("most", Polarity.AFFIRMATIVE, 2),
    "K": ("many", Polarity.AFFIRMATIVE, 3),
    "I": ("some", Polarity.AFFIRMATIVE, 4),
    "E": ("no", Polarity.NEGATIVE, 0),
    "B": ("few", Polarity.NEGATIVE, 1),
    "D": ("most_not", Polarity.NEGATIVE, 2),
    "G": ("many_not", Polarity.NEGATIVE, 3),
    "O": ("some_not", Polarity.NEGATIVE, 4),
}

SURFACE_TO_LETTER = {name: letter for letter, (name, _, _) in LEXICON.items()}

# Stable integer codes shared with the model-checking kernels.
LETTER_CODES = {letter: i for i, letter in enumerate("APTKIEBDGO")}

_CHAINS = {
    5: ("APTKI", "EBDGO"),
    2: ("AI", "EO"),
}


@dataclass(frozen=True)
class QuantifierSymbol:
    letter: str
    surface_name: str
    polarity: Polarity
    index: int

    @property
    def affirmative(self) -> bool:
        return self.polarity is Polarity.AFFIRMATIVE

    @property
    def code(self) -> int:
        return LETTER_CODES[self.letter]

    def __str__(self) -> str:
        return self.surface_name


@dataclass(frozen=True)
class QuantitySystem:
    n: int
    affirmative_chain: tuple[QuantifierSymbol, ...]
    negative_chain: tuple[QuantifierSymbol, ...]

    @property
    def symbols(self) -> tuple[QuantifierSymbol, ...]:
        return self.affirmative_chain + self.negative_chain

    def chain(self, polarity: Polarity) -> tuple[QuantifierSymbol, ...]:
        if polarity is Polarity.AFFIRMATIVE:
            return self.affirmative_chain
        return self.negative_chain

    def __contains__(self, q: object) -> bool:
        return isinstance(q, QuantifierSymbol) and q in self.symbols

    def __getitem__(self, name: str) -> QuantifierSymbol:
        return lookup(self, name)

    def __repr__(self) -> str:
        return f"QuantitySystem(n={self.n})"


@lru_cache(maxsize=None)
def quantity_system(n: int = 5) -> QuantitySystem:
    """Build the 2- or 5-quantity system. Systems are cached singletons."""
    if n not in _CHAINS:
        raise ValueError(f"only 2- and 5-quantity systems exist, got n={n}")
    aff, neg = _CHAINS[n]

    def build(letters: str) -> tuple[QuantifierSymbol, ...]:
        return tuple(
            QuantifierSymbol(letter, LEXICON[letter][0], LEXICON[letter][1], i)
            for i, letter in enumerate(letters)
        )

    return QuantitySystem(n, build(aff), build(neg))


FIVE = quantity_system(5)
TWO = quantity_system(2)


def lookup(sys: QuantitySystem, name: str) -> QuantifierSymbol:
    """Find a quantifier by surface name ("most") or letter ("T")."""
    letter = name if name in LEXICON else SURFACE_TO_LETTER.get(name)
    if letter is None:
        raise UnknownQuantifier(f"unknown quantifier {name!r}")
    for q in sys.symbols:
        if q.letter == letter:
            return q
    raise NotInSystem(f"quantifier {name!r} is not in the {sys.n}-quantity system")


def _check(sys: QuantitySystem, *qs: QuantifierSymbol) -> None:
    for q in qs:
        if q not in sys:
            raise NotInSystem(f"{q.surface_name} ({q.letter}, index {q.index}) "
                              f"is not in the {sys.n}-quantity system")


def contrary(sys: QuantitySystem, q: QuantifierSymbol) -> QuantifierSymbol:
    """Same rank, opposite polarity (all <-> no, almost_all <-> few, ...)."""
    _check(sys, q)
    return sys.chain(q.polarity.opposite)[q.index]


def mirror(sys: QuantitySystem, q: QuantifierSymbol) -> QuantifierSymbol:
    """Reflect about the centre of q's chain; works for odd and even n."""
    _check(sys, q)
    return sys.chain(q.polarity)[sys.n - 1 - q.index]


def contradictory(sys: QuantitySystem, q: QuantifierSymbol) -> QuantifierSymbol:
    return mirror(sys, contrary(sys, q))


def implies(sys: QuantitySystem, q1: QuantifierSymbol, q2: QuantifierSymbol) -> bool:
    """q1(X)(Y) implies q2(X)(Y): same chain and q1 no weaker than q2."""
    _check(sys, q1, q2)
    return q1.polarity is q2.polarity and q1.index <= q2.index


def weaker_or_equal(sys: QuantitySystem, q: QuantifierSymbol) -> tuple[QuantifierSymbol, ...]:
    """Every q_j with implies(q, q_j), q itself first."""
    _check(sys, q)
    return sys.chain(q.polarity)[q.index:]


def stronger_or_equal(sys: QuantitySystem, q: QuantifierSymbol) -> tuple[QuantifierSymbol, ...]:
    """Every q_j with implies(q_j, q), strongest first."""
    _check(sys, q)
    return sys.chain(q.polarity)[: q.index + 1]
