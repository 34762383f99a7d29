"""Syllogistic deduction with intermediate quantifiers."""

from .algebra import (
    FIVE,
    TWO,
    Polarity,
    QuantifierSymbol,
    QuantitySystem,
    contradictory,
    contrary,
    implies,
    lookup,
    mirror,
    quantity_system,
)
from .engine import Closure, ProofStep, Rule, infer_once, metaresult, prove, saturate, triggers_of
from .models import (
    FiniteModel,
    Semantics,
    entails,
    enumerate_valid_moods,
    eval_statement,
    find_countermodel,
)
from .syntax import KnowledgeBase, ParseError, Statement, parse, parse_kb, render, typecheck

__version__ = "0.1.0"
