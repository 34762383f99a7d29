"""Forward-chaining saturation with rule-labelled proof steps.

Figure rules only consume non-negated statements and only produce
non-negated ones; negated statements enter through CONTRA_POS and spread
through ExI.E. ``all(B)(A)`` and ``no(B)(A)`` double as the subset and
disjointness triggers ``B <= A`` and ``B <= ~A``. The three term variables
of a figure rule must be bound to pairwise distinct terms.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .algebra import (
    QuantitySystem,
    contradictory,
    contrary,
    implies,
    mirror,
    stronger_or_equal,
    weaker_or_equal,
)
from .syntax import KnowledgeBase, Statement, render

MAX_ALTERNATES = 3


class Rule(str, enum.Enum):
    I_A = "I.A"
    I_E = "I.E"
    II_A = "II.A"
    II_E = "II.E"
    III_A = "III.A"
    III_E = "III.E"
    IV_A = "IV.A"
    IV_AE = "IV.Æ"
    IV_E = "IV.E"
    CONTRA_POS = "CONTRA_POS"
    CONTRA_NEG = "CONTRA_NEG"
    EXI_A = "ExI.A"
    EXI_E = "ExI.E"
    META = "META"
    PREMISE = "PREMISE"

    def __str__(self) -> str:
        return self.value


FIGURE_RULES = frozenset({
    Rule.I_A, Rule.I_E, Rule.II_A, Rule.II_E, Rule.III_A,
    Rule.III_E, Rule.IV_A, Rule.IV_AE, Rule.IV_E,
})


class TriggerKind(enum.Enum):
    SUBSET = "subset"
    DISJOINT = "disjoint"


@dataclass(frozen=True)
class Trigger:
    kind: TriggerKind
    left: str
    right: str
    source: Statement

    def __str__(self) -> str:
        neg = "~" if self.kind is TriggerKind.DISJOINT else ""
        return f"{self.left} <= {neg}{self.right}"


@dataclass(frozen=True)
class ProofStep:
    conclusion: Statement
    rule: Rule
    premises: tuple[Statement, ...] = ()


class StepLimitExceeded(RuntimeError):
    pass


class NotInClosure(ValueError):
    pass


def triggers_of(kb: Iterable[Statement]) -> list[Trigger]:
    out = []
    for s in kb:
        if s.negated:
            continue
        if s.quantifier.letter == "A":
            out.append(Trigger(TriggerKind.SUBSET, s.subject, s.predicate, s))
        elif s.quantifier.letter == "E":
            out.append(Trigger(TriggerKind.DISJOINT, s.subject, s.predicate, s))
    return out


def _distinct(*terms: str) -> bool:
    return len(set(terms)) == len(terms)


def rule_applications(statements: Iterable[Statement], sys: QuantitySystem) -> Iterator[ProofStep]:
    """Every single-rule consequence of ``statements``, present or not.

    Yields one ProofStep per rule instance; the same conclusion may appear
    several times under different rules or premises.
    """
    statements = list(statements)
    pos = [s for s in statements if not s.negated]
    neg = [s for s in statements if s.negated]
    A, E, I, O = (sys[x] for x in "AEIO")

    subset_by_left: dict[str, list[Statement]] = defaultdict(list)
    subset_by_right: dict[str, list[Statement]] = defaultdict(list)
    disjoint_by_left: dict[str, list[Statement]] = defaultdict(list)
    disjoint_by_right: dict[str, list[Statement]] = defaultdict(list)
    for t in triggers_of(pos):
        if t.kind is TriggerKind.SUBSET:
            subset_by_left[t.left].append(t.source)
            subset_by_right[t.right].append(t.source)
        else:
            disjoint_by_left[t.left].append(t.source)
            disjoint_by_right[t.right].append(t.source)

    aff_by_subject: dict[str, list[Statement]] = defaultdict(list)
    for s in pos:
        if s.quantifier.affirmative:
            aff_by_subject[s.subject].append(s)

    def make(rule: Rule, q, subj: str, pred: str, *premises: Statement,
             negated: bool = False) -> ProofStep:
        return ProofStep(Statement(negated, q, subj, pred), rule, premises)

    for s in pos:
        q, x, y = s.quantifier, s.subject, s.predicate
        if q.affirmative:
            # I.A / I.E: q(gamma)(beta) with beta <= alpha / beta <= ~alpha
            gamma, beta = x, y
            for t in subset_by_left.get(beta, ()):
                if _distinct(gamma, beta, t.predicate):
                    yield make(Rule.I_A, q, gamma, t.predicate, s, t)
            for t in disjoint_by_left.get(beta, ()):
                if _distinct(gamma, beta, t.predicate):
                    yield make(Rule.I_E, contrary(sys, q), gamma, t.predicate, s, t)
            # II.E: q2(gamma)(alpha), beta <= ~alpha
            gamma, alpha = x, y
            for t in disjoint_by_right.get(alpha, ()):
                if _distinct(gamma, alpha, t.subject):
                    yield make(Rule.II_E, contrary(sys, q), gamma, t.subject, s, t)
            # III.A: q1(gamma)(alpha), q2(gamma)(beta)
            for s2 in aff_by_subject.get(gamma, ()):
                beta = s2.predicate
                if _distinct(gamma, alpha, beta) and implies(sys, s2.quantifier, mirror(sys, q)):
                    yield make(Rule.III_A, I, beta, alpha, s, s2)
            # IV.A: q1(alpha)(beta), beta <= gamma
            alpha, beta = x, y
            for t in subset_by_left.get(beta, ()):
                if _distinct(alpha, beta, t.predicate):
                    yield make(Rule.IV_A, I, t.predicate, alpha, s, t)
        else:
            # II.A: q1(gamma)(alpha), beta <= alpha
            gamma, alpha = x, y
            for t in subset_by_right.get(alpha, ()):
                if _distinct(gamma, alpha, t.subject):
                    yield make(Rule.II_A, q, gamma, t.subject, s, t)
            # III.E: q1(gamma)(alpha) negative, q2(gamma)(beta) affirmative
            bound = mirror(sys, contrary(sys, q))
            for s2 in aff_by_subject.get(gamma, ()):
                beta = s2.predicate
                if _distinct(gamma, alpha, beta) and implies(sys, s2.quantifier, bound):
                    yield make(Rule.III_E, O, beta, alpha, s, s2)

        if q == A:
            # IV.AE: alpha <= beta, beta <= ~gamma
            alpha, beta = x, y
            for t in disjoint_by_left.get(beta, ()):
                if _distinct(alpha, beta, t.predicate):
                    yield make(Rule.IV_AE, E, t.predicate, alpha, s, t)
        elif q == E:
            # IV.E: alpha <= ~beta, q2(beta)(gamma) affirmative
            alpha, beta = x, y
            for s2 in aff_by_subject.get(beta, ()):
                if _distinct(alpha, beta, s2.predicate):
                    yield make(Rule.IV_E, O, s2.predicate, alpha, s, s2)

        yield make(Rule.CONTRA_POS, contradictory(sys, q), x, y, s, negated=True)
        for qj in weaker_or_equal(sys, q)[1:]:
            yield make(Rule.EXI_A, qj, x, y, s)

    for s in neg:
        q, x, y = s.quantifier, s.subject, s.predicate
        yield make(Rule.CONTRA_NEG, contradictory(sys, q), x, y, s)
        for qj in stronger_or_equal(sys, q)[:-1]:
            yield make(Rule.EXI_E, qj, x, y, s, negated=True)


def infer_once(kb: KnowledgeBase) -> list[tuple[Statement, ProofStep]]:
    """New statements reachable by one rule application, first derivation each."""
    present = set(kb.statements)
    out: dict[Statement, ProofStep] = {}
    for step in rule_applications(kb.statements, kb.system):
        if step.conclusion not in present and step.conclusion not in out:
            out[step.conclusion] = step
    return list(out.items())


@dataclass(frozen=True)
class Closure:
    system: QuantitySystem
    steps: dict[Statement, ProofStep]
    alternates: dict[Statement, tuple[ProofStep, ...]] = field(default_factory=dict)
    fixpoint_reached: bool = True
    inconsistencies: tuple[tuple[Statement, Statement], ...] = ()

    @property
    def statements(self) -> tuple[Statement, ...]:
        return tuple(self.steps)

    @property
    def inconsistent(self) -> bool:
        return bool(self.inconsistencies)

    def index(self) -> dict[Statement, int]:
        """1-based position of each statement in derivation order."""
        return {s: i for i, s in enumerate(self.steps, start=1)}

    def __contains__(self, s: object) -> bool:
        return s in self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Statement]:
        return iter(self.steps)


def saturate(kb: KnowledgeBase, max_steps: Optional[int] = None) -> Closure:
    """Least fixpoint of ``infer_once`` containing ``kb``.

    ``max_steps`` caps the number of statements in the closure; exceeding it
    raises StepLimitExceeded.
    """
    sys = kb.system
    steps: dict[Statement, ProofStep] = {s: ProofStep(s, Rule.PREMISE) for s in kb.statements}
    alternates: dict[Statement, list[ProofStep]] = defaultdict(list)
    if max_steps is not None and len(steps) > max_steps:
        raise StepLimitExceeded(f"{len(steps)} premises exceed max_steps={max_steps}")

    while True:
        snapshot = list(steps)
        fresh: dict[Statement, ProofStep] = {}
        for step in rule_applications(snapshot, sys):
            c = step.conclusion
            if c in steps or c in fresh:
                first = steps.get(c) or fresh[c]
                alts = alternates[c]
                if step != first and step not in alts and len(alts) < MAX_ALTERNATES:
                    alts.append(step)
            else:
                fresh[c] = step
        if not fresh:
            break
        if max_steps is not None and len(steps) + len(fresh) > max_steps:
            raise StepLimitExceeded(
                f"closure exceeds max_steps={max_steps} before reaching a fixpoint")
        steps.update(fresh)

    clashes = tuple((s, s.negate()) for s in steps if not s.negated and s.negate() in steps)
    return Closure(sys, steps, {k: tuple(v) for k, v in alternates.items() if v},
                   True, clashes)


@dataclass(frozen=True)
class ProofTree:
    statement: Statement
    rule: Rule
    children: tuple["ProofTree", ...] = ()

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)

    def rules(self) -> list[Rule]:
        out = [self.rule]
        for c in self.children:
            out.extend(c.rules())
        return out

    def lines(self, indent: str = "  ") -> list[str]:
        out: list[str] = []

        def walk(node: ProofTree, depth: int) -> None:
            out.append(f"{indent * depth}{render(node.statement)}  [{node.rule}]")
            for c in node.children:
                walk(c, depth + 1)

        walk(self, 0)
        return out


def proof_tree(closure: Closure, goal: Statement) -> ProofTree:
    step = closure.steps[goal]
    kids = tuple(proof_tree(closure, p) for p in step.premises)
    return ProofTree(goal, step.rule, kids)


def prove(kb: KnowledgeBase, goal: Statement, closure: Optional[Closure] = None) -> Optional[ProofTree]:
    """Proof tree for ``goal`` if it is in the closure of ``kb``, else None."""
    closure = closure if closure is not None else saturate(kb)
    if goal not in closure:
        return None
    return proof_tree(closure, goal)


def metaresult(kb: KnowledgeBase, derived: Statement,
               closure: Optional[Closure] = None) -> list[Statement]:
    """Negations of every q_x at or before the contradictory of ``derived``."""
    if derived.negated:
        raise NotInClosure(f"{render(derived)} is negated; the metaresult takes a derived affirmation")
    closure = closure if closure is not None else saturate(kb)
    if derived not in closure:
        raise NotInClosure(f"{render(derived)} is not derivable from the knowledge base")
    sys = kb.system
    qc = contradictory(sys, derived.quantifier)
    return [Statement(True, qx, derived.subject, derived.predicate)
            for qx in stronger_or_equal(sys, qc)]


def meta_steps(kb: KnowledgeBase, derived: Statement,
               closure: Optional[Closure] = None) -> list[ProofStep]:
    return [ProofStep(s, Rule.META, (derived,)) for s in metaresult(kb, derived, closure)]
