from hypothesis import settings, strategies as st

from interquant.algebra import FIVE
from interquant.syntax import KnowledgeBase, Statement, parse_kb

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

TERMS = ("X", "Y", "Z", "W")


def kb(text, sys=FIVE):
    out = parse_kb(text, sys)
    assert not out.errors, out.errors
    return out


def statement_strategy(sys=FIVE, terms=TERMS):
    return st.builds(Statement, st.booleans(), st.sampled_from(sys.symbols),
                     st.sampled_from(terms), st.sampled_from(terms))


def kb_strategy(sys=FIVE, terms=TERMS, max_size=6):
    return st.lists(statement_strategy(sys, terms), max_size=max_size).map(
        lambda ss: KnowledgeBase.of(ss, sys))


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    for key, value in report.user_properties:
        if key == "criterion":
            ACCEPTANCE_RESULTS[value] = (report.passed, f"{report.duration:.2f}s")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda n: int(n.split()[0].lstrip("AC"))):
        ok, took = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({took})")
