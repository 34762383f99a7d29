import itertools

import pytest
from hypothesis import given, strategies as st

from interquant.algebra import (
    FIVE,
    TWO,
    NotInSystem,
    Polarity,
    UnknownQuantifier,
    contradictory,
    contrary,
    implies,
    lookup,
    mirror,
    quantity_system,
)

SYSTEMS = [FIVE, TWO]


def letters(chain):
    return "".join(q.letter for q in chain)


class TestSystems:
    def test_five_chains(self):
        assert letters(FIVE.affirmative_chain) == "APTKI"
        assert letters(FIVE.negative_chain) == "EBDGO"

    def test_two_chains(self):
        assert letters(TWO.affirmative_chain) == "AI"
        assert letters(TWO.negative_chain) == "EO"

    @pytest.mark.parametrize("sys", SYSTEMS)
    def test_letter_is_determined_by_polarity_and_index(self, sys):
        keys = {(q.polarity, q.index) for q in sys.symbols}
        assert len(keys) == len(sys.symbols) == 2 * sys.n

    def test_surface_names(self):
        expected = dict(A="all", P="almost_all", T="most", K="many", I="some",
                        E="no", B="few", D="most_not", G="many_not", O="some_not")
        assert {q.letter: q.surface_name for q in FIVE.symbols} == expected

    def test_polarity_sets(self):
        assert {q.letter for q in FIVE.symbols if q.polarity is Polarity.AFFIRMATIVE} == set("APTKI")
        assert {q.letter for q in FIVE.symbols if q.polarity is Polarity.NEGATIVE} == set("EBDGO")

    def test_other_sizes_rejected(self):
        with pytest.raises(ValueError):
            quantity_system(3)


class TestLookup:
    def test_all(self):
        assert lookup(FIVE, "all").letter == "A"

    def test_few(self):
        assert lookup(FIVE, "few").letter == "B"

    def test_letter_accepted(self):
        assert lookup(FIVE, "T").surface_name == "most"

    def test_most_not_in_two_system(self):
        with pytest.raises(NotInSystem):
            lookup(TWO, "most")

    def test_unknown(self):
        with pytest.raises(UnknownQuantifier):
            lookup(FIVE, "several")

    def test_every_is_not_a_surface_form(self):
        with pytest.raises(UnknownQuantifier):
            lookup(FIVE, "every")


def q(name, sys=FIVE):
    return lookup(sys, name)


class TestOperators:
    def test_contrary_examples(self):
        assert contrary(FIVE, q("A")).letter == "E"
        assert contrary(FIVE, q("T")).letter == "D"
        assert contrary(FIVE, contrary(FIVE, q("P"))) == q("P")

    def test_mirror_examples(self):
        assert mirror(FIVE, q("A")).letter == "I"
        assert mirror(FIVE, q("T")).letter == "T"
        assert mirror(FIVE, q("P")).letter == "K"
        assert mirror(TWO, q("E", TWO)).letter == "O"
        assert mirror(TWO, q("A", TWO)).letter == "I"

    def test_contradictory_examples(self):
        assert contradictory(FIVE, q("I")).letter == "E"
        assert contradictory(FIVE, q("A")).letter == "O"
        assert contradictory(FIVE, contradictory(FIVE, q("T"))) == q("T")

    def test_contradictory_tables(self):
        five = {a.letter: contradictory(FIVE, a).letter for a in FIVE.symbols}
        assert five == dict(A="O", O="A", P="G", G="P", T="D", D="T", K="B", B="K", I="E", E="I")
        two = {a.letter: contradictory(TWO, a).letter for a in TWO.symbols}
        assert two == dict(A="O", O="A", I="E", E="I")

    def test_foreign_symbol_rejected(self):
        some5 = q("some")
        with pytest.raises(NotInSystem):
            mirror(TWO, some5)  # index 4 does not exist in the 2-system
        with pytest.raises(NotInSystem):
            contrary(TWO, q("most"))

    @pytest.mark.parametrize("sys", SYSTEMS)
    def test_operator_laws(self, sys):
        for a in sys.symbols:
            c, m, x = contrary(sys, a), mirror(sys, a), contradictory(sys, a)
            assert contrary(sys, c) == a
            assert mirror(sys, m) == a
            assert mirror(sys, contrary(sys, a)) == contrary(sys, mirror(sys, a))
            assert c.polarity is not a.polarity and c.index == a.index
            assert m.polarity is a.polarity and m.index == sys.n - 1 - a.index
            assert x.polarity is not a.polarity and x.index == sys.n - 1 - a.index


class TestImplies:
    def test_examples(self):
        assert implies(FIVE, q("A"), q("T"))
        assert not implies(FIVE, q("T"), q("A"))
        assert not implies(FIVE, q("A"), q("O"))
        assert implies(FIVE, q("K"), q("K"))

    @given(st.sampled_from(FIVE.symbols), st.sampled_from(FIVE.symbols), st.sampled_from(FIVE.symbols))
    def test_total_order_per_chain(self, a, b, c):
        if a.polarity is b.polarity:
            assert implies(FIVE, a, b) or implies(FIVE, b, a)
        if implies(FIVE, a, b) and implies(FIVE, b, a):
            assert a == b
        if implies(FIVE, a, b) and implies(FIVE, b, c):
            assert implies(FIVE, a, c)
        assert implies(FIVE, a, a)

    def test_cross_polarity_always_false(self):
        for a, b in itertools.product(FIVE.affirmative_chain, FIVE.negative_chain):
            assert not implies(FIVE, a, b) and not implies(FIVE, b, a)
