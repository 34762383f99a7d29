"""Command-line interface.

Exit codes:
  0  success (statement derivable, table sound, file parsed cleanly)
  1  negative result: parse failures (``parse``), countermodel found
     (``prove``), unsound or incomplete mood table (``moods``)
  2  ``prove`` only: not derivable and no countermodel up to the bound
  3  usage or input error
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .algebra import (
    AlgebraError,
    QuantitySystem,
    contradictory,
    contrary,
    lookup,
    mirror,
    quantity_system,
    stronger_or_equal,
    weaker_or_equal,
)
from .engine import StepLimitExceeded, prove, saturate
from .models import (
    DEFAULT_F,
    DEFAULT_MAX_TERMS,
    DEFAULT_MAX_UNIVERSE,
    Semantics,
    TooManyTerms,
    enumerate_valid_moods,
    find_countermodel,
)
from .syntax import KnowledgeBase, ParseError, format_derivation, parse, parse_kb, render, typecheck

EXIT_OK, EXIT_NEGATIVE, EXIT_UNDECIDED, EXIT_USAGE = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    system: int = 5
    threshold_f: Fraction = DEFAULT_F
    max_universe: int = DEFAULT_MAX_UNIVERSE
    max_steps: Optional[int] = None
    structured: bool = False

    def __post_init__(self) -> None:
        if not Fraction(1, 2) < self.threshold_f < 1:
            raise ValueError(f"--threshold-f must lie strictly between 1/2 and 1, got {self.threshold_f}")
        if self.max_universe < 1:
            raise ValueError("--max-universe must be >= 1")
        if self.system not in (2, 5):
            raise ValueError("--system must be 2 or 5")

    @property
    def quantity_system(self) -> QuantitySystem:
        return quantity_system(self.system)

    @property
    def semantics(self) -> Semantics:
        return Semantics(self.threshold_f)


class UsageError(Exception):
    pass


def _emit(record: dict) -> None:
    print(json.dumps(record, ensure_ascii=False))


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load_kb(path: str, cfg: RunConfig) -> KnowledgeBase:
    kb = parse_kb(_read(path), cfg.quantity_system)
    if kb.errors:
        for e in kb.errors:
            _err(f"{path}:{e.line}: {e.error}")
        raise UsageError(f"{len(kb.errors)} line(s) of {path} failed to parse")
    return kb


def cmd_parse(path: str, cfg: RunConfig) -> int:
    kb = parse_kb(_read(path), cfg.quantity_system)
    for s, line in zip(kb.statements, kb.lines):
        tree = typecheck(s)
        if cfg.structured:
            _emit({"line": line, "statement": render(s), "category": str(tree.category),
                   "derivation": format_derivation(tree)})
        else:
            print(f"{line}: {render(s)}")
            for row in format_derivation(tree):
                print(f"    {row}")
    for e in kb.errors:
        _err(f"{path}:{e.line}: {e.error}")
    if not cfg.structured:
        n = len(kb.statements)
        print(f"{n} statement{'' if n == 1 else 's'}")
    return EXIT_NEGATIVE if kb.errors else EXIT_OK


def cmd_saturate(path: str, cfg: RunConfig) -> int:
    kb = _load_kb(path, cfg)
    try:
        closure = saturate(kb, max_steps=cfg.max_steps)
    except StepLimitExceeded as e:
        raise UsageError(str(e)) from None
    idx = closure.index()
    for s, step in closure.steps.items():
        prem = [idx[p] for p in step.premises]
        if cfg.structured:
            _emit({"index": idx[s], "statement": render(s), "rule": str(step.rule),
                   "premises": prem})
        else:
            refs = (" " + ",".join(map(str, prem))) if prem else ""
            print(f"{idx[s]:>4}. {render(s)}  [{step.rule}{refs}]")
    for s, ns in closure.inconsistencies:
        _err(f"warning: inconsistent closure: {render(s)} and {render(ns)} "
             f"(#{idx[s]}, #{idx[ns]})")
    return EXIT_OK


def cmd_prove(path: str, goal_text: str, cfg: RunConfig, max_terms: int = DEFAULT_MAX_TERMS) -> int:
    kb = _load_kb(path, cfg)
    try:
        goal = parse(goal_text, cfg.quantity_system)
    except ParseError as e:
        raise UsageError(f"goal: {e}") from None
    try:
        closure = saturate(kb, max_steps=cfg.max_steps)
    except StepLimitExceeded as e:
        raise UsageError(str(e)) from None
    tree = prove(kb, goal, closure)
    if tree is not None:
        if cfg.structured:
            def walk(node, depth):
                _emit({"depth": depth, "statement": render(node.statement), "rule": str(node.rule),
                       "premises": [render(c.statement) for c in node.children]})
                for c in node.children:
                    walk(c, depth + 1)
            walk(tree, 0)
        else:
            print("\n".join(tree.lines()))
        return EXIT_OK

    try:
        model = find_countermodel(list(kb.statements), goal, cfg.semantics,
                                  cfg.max_universe, max_terms)
    except TooManyTerms as e:
        msg = f"not derivable; countermodel search skipped ({e})"
        if cfg.structured:
            _emit({"goal": render(goal), "result": "undecided", "reason": str(e)})
        else:
            print(msg)
        return EXIT_UNDECIDED
    if model is not None:
        if cfg.structured:
            _emit({"goal": render(goal), "result": "countermodel",
                   "model": {"universe_size": model.universe_size,
                             "extensions": {t: sorted(v) for t, v in model.extensions.items()}}})
        else:
            print("not derivable, countermodel found")
            print(f"  {model.describe()}")
        return EXIT_NEGATIVE
    if cfg.structured:
        _emit({"goal": render(goal), "result": "undecided", "max_universe": cfg.max_universe})
    else:
        print(f"not derivable, no countermodel up to m={cfg.max_universe}")
    return EXIT_UNDECIDED


def cmd_square(name: str, cfg: RunConfig) -> int:
    sys_ = cfg.quantity_system
    try:
        q = lookup(sys_, name)
    except AlgebraError as e:
        raise UsageError(str(e)) from None
    chain = sys_.chain(q.polarity)
    info = {
        "quantifier": q.surface_name,
        "letter": q.letter,
        "polarity": q.polarity.value,
        "position": q.index + 1,
        "chain": [c.surface_name for c in chain],
        "contrary": contrary(sys_, q).surface_name,
        "mirror": mirror(sys_, q).surface_name,
        "contradictory": contradictory(sys_, q).surface_name,
        "implies": [c.surface_name for c in weaker_or_equal(sys_, q)],
        "implied_by": [c.surface_name for c in stronger_or_equal(sys_, q)],
    }
    if cfg.structured:
        _emit(info)
        return EXIT_OK
    shown = " > ".join(f"[{c.surface_name}]" if c == q else c.surface_name for c in chain)
    rows = [
        ("quantifier", f"{q.surface_name} ({q.letter})"),
        ("polarity", q.polarity.value),
        ("chain", f"{shown}   (position {q.index + 1} of {sys_.n})"),
        ("contrary", info["contrary"]),
        ("mirror", info["mirror"]),
        ("contradictory", info["contradictory"]),
        ("implies", ", ".join(info["implies"])),
        ("implied by", ", ".join(info["implied_by"])),
    ]
    for k, v in rows:
        print(f"{k:<14} {v}")
    return EXIT_OK


def cmd_moods(figures: Sequence[int], cfg: RunConfig, csv_out: bool = False,
              all_rows: bool = False) -> int:
    ok = True
    for i, figure in enumerate(figures):
        table = enumerate_valid_moods(cfg.quantity_system, figure, cfg.semantics, cfg.max_universe)
        if cfg.structured:
            for r in table.rows:
                if all_rows or r.valid or r.derivable:
                    _emit({"figure": r.figure, "q_p1": r.q_p1, "q_p2": r.q_p2, "q_c": r.q_c,
                           "valid": r.valid, "derivable": r.derivable})
        elif csv_out:
            text = table.to_csv()
            print(text if i == 0 else text.split("\n", 1)[1], end="")
        else:
            print(f"figure {figure} ({cfg.system}-quantity system, f={cfg.threshold_f}, "
                  f"m<={cfg.max_universe})")
            print(table.to_text(only_interesting=not all_rows))
        if not table.sound:
            ok = False
            _err(f"figure {figure}: {len(table.unsound_rows)} derivable but invalid mood(s)")
        if cfg.system == 2 and not table.complete:
            ok = False
            _err(f"figure {figure}: {len(table.underivable_rows)} valid but underivable mood(s)")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", type=int, choices=(2, 5), default=5,
                        help="quantity system (default: 5)")
    common.add_argument("--threshold-f", type=_fraction, default=DEFAULT_F, metavar="P/Q",
                        help="semantic threshold f, 1/2 < f < 1 (default: 3/4)")
    common.add_argument("--max-universe", type=int, default=DEFAULT_MAX_UNIVERSE, metavar="N",
                        help="largest universe for model search (default: 5)")
    common.add_argument("--max-steps", type=int, default=None, metavar="N",
                        help="cap on closure size")
    common.add_argument("--structured", action="store_true",
                        help="emit one JSON record per line")

    p = _Parser(prog="interquant", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("parse", parents=[common], help="parse and typecheck a KB file")
    sp.add_argument("file")

    sp = sub.add_parser("saturate", parents=[common], help="print the deductive closure")
    sp.add_argument("file")

    sp = sub.add_parser("prove", parents=[common], help="prove a goal or find a countermodel")
    sp.add_argument("file")
    sp.add_argument("goal")
    sp.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS, metavar="N",
                    help="refuse countermodel search beyond N distinct terms (default: 4)")

    sp = sub.add_parser("square", parents=[common], help="operators of one quantifier")
    sp.add_argument("quantifier")

    sp = sub.add_parser("moods", parents=[common], help="validity vs derivability per mood")
    sp.add_argument("--figure", type=int, choices=(1, 2, 3, 4), action="append",
                    help="figure to tabulate (repeatable; default: all four)")
    sp.add_argument("--csv", action="store_true", help="comma-separated output")
    sp.add_argument("--all-rows", action="store_true",
                    help="include moods that are neither valid nor derivable")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.system, args.threshold_f, args.max_universe,
                        args.max_steps, args.structured)
    except ValueError as e:
        _err(f"interquant: error: {e}")
        return EXIT_USAGE
    try:
        if args.command == "parse":
            return cmd_parse(args.file, cfg)
        if args.command == "saturate":
            return cmd_saturate(args.file, cfg)
        if args.command == "prove":
            return cmd_prove(args.file, args.goal, cfg, args.max_terms)
        if args.command == "square":
            return cmd_square(args.quantifier, cfg)
        return cmd_moods(args.figure or [1, 2, 3, 4], cfg, args.csv, args.all_rows)
    except UsageError as e:
        _err(f"interquant: error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
