"""Formula syntax: constructors, terms, printer, parser."""

import pytest
from hypothesis import given, settings, strategies as st

from caselogic.errors import ParseError
from caselogic.formulas import (
    And,
    Atom,
    Box,
    Diamond,
    Iff,
    Implies,
    Not,
    Or,
    OutcomeAtom,
    Term,
    big_and,
    big_or,
    bottom,
    conj_formula,
    mk_conj,
    parse_formula,
    print_formula,
    state_term,
    top,
)
from caselogic.models import random_formula
from caselogic.sampling import small_signature
from caselogic.signature import Signature

SIG = Signature(("pi1", "pi2"), ("delta1", "delta2"))


def test_derived_connectives_expand_to_core():
    a, b = Atom("pi1"), Atom("pi2")
    assert Or(a, b) == Not(And(Not(a), Not(b)))
    assert Implies(a, b) == Not(And(a, Not(b)))
    assert Iff(a, b) == And(Implies(a, b), Implies(b, a))
    assert Diamond({"pi1"}, a) == Not(Box(frozenset({"pi1"}), Not(a)))
    assert bottom() == Not(top())


def test_outcome_atom_values():
    for v in (1, 0, "?"):
        assert OutcomeAtom(v).value == v
    with pytest.raises(ValueError):
        OutcomeAtom(2)


def test_big_and_big_or_folds():
    a, b, c = Atom("pi1"), Atom("pi2"), Atom("delta1")
    assert big_and([a, b, c]) == And(And(a, b), c)
    assert big_and([]) == top()
    assert big_or([a, b, c]) == Or(a, Or(b, c))
    assert big_or([]) == bottom()


def test_conj_formula_order_and_error():
    f = conj_formula(SIG, {"pi2", "delta1"}, {"pi1", "pi2", "delta1", "delta2"})
    assert print_formula(f) == "(((pi2 & delta1) & ~pi1) & ~delta2)"
    with pytest.raises(ValueError):
        conj_formula(SIG, {"pi1"}, {"pi2"})


def test_term_invariants_and_operations():
    with pytest.raises(ValueError):
        Term({"pi1"}, {"pi1"})
    t = Term({"pi1"}, {"delta2"})
    assert t.atoms == {"pi1", "delta2"}
    assert t.holds({"pi1", "pi2"})
    assert not t.holds({"pi1", "delta2"})
    assert not t.holds(set())
    assert Term(set(), set()).is_top
    assert Term(set(), set()).holds({"pi1"})
    assert Term({"pi1"}, set()).part_of(t)
    assert not t.part_of(Term({"pi1"}, set()))
    assert t.drop("delta2") == Term({"pi1"}, set())
    assert t.render(SIG) == "pi1 & ~delta2"
    assert Term(set(), set()).render(SIG) == "true"
    assert print_formula(t.to_formula(SIG)) == "(pi1 & ~delta2)"


def test_mk_conj_and_state_term():
    assert mk_conj({"pi1"}, {"pi1", "delta1"}) == Term({"pi1"}, {"delta1"})
    with pytest.raises(ValueError):
        mk_conj({"pi1"}, {"delta1"})
    s = SIG.mask({"pi1", "delta1"})
    atoms = SIG.mask({"pi1", "pi2", "delta1"})
    assert state_term(SIG, s, atoms) == Term({"pi1", "delta1"}, {"pi2"})


def test_print_fixed_forms():
    assert print_formula(Box(frozenset(), OutcomeAtom("?"))) == "[]t(?)"
    assert (
        print_formula(Box(frozenset({"pi2", "pi1"}), Atom("pi1")))
        == "[pi1,pi2]pi1"
    )
    assert print_formula(Not(And(Atom("pi1"), OutcomeAtom(0)))) == "~(pi1 & t(0))"


def test_parser_precedence_and_associativity():
    # & binds tighter than |, | tighter than ->, -> tighter than <->
    f = parse_formula("pi1 | pi2 & delta1", SIG)
    assert f == Or(Atom("pi1"), And(Atom("pi2"), Atom("delta1")))
    f = parse_formula("pi1 -> pi2 -> delta1", SIG)
    assert f == Implies(Atom("pi1"), Implies(Atom("pi2"), Atom("delta1")))
    f = parse_formula("~pi1 & pi2", SIG)
    assert f == And(Not(Atom("pi1")), Atom("pi2"))
    f = parse_formula("[pi1]pi2 & delta1", SIG)
    assert f == And(Box(frozenset({"pi1"}), Atom("pi2")), Atom("delta1"))
    f = parse_formula("<>(t(1) <-> t(0))", SIG)
    assert f == Diamond((), Iff(OutcomeAtom(1), OutcomeAtom(0)))


def test_parser_accepts_greek_aliases():
    assert parse_formula("π1 & δ2", SIG) == And(Atom("pi1"), Atom("delta2"))


def test_parser_whitespace_and_outcome_forms():
    assert parse_formula(" t( 1 ) ", SIG) == OutcomeAtom(1)
    assert parse_formula("t(?)", SIG) == OutcomeAtom("?")


def test_parser_error_positions():
    with pytest.raises(ParseError) as exc:
        parse_formula("pi1 & $", SIG)
    assert exc.value.position == 6
    with pytest.raises(ParseError) as exc:
        parse_formula("pi1 &", SIG)
    assert exc.value.position == 5
    with pytest.raises(ParseError) as exc:
        parse_formula("(pi1 & pi2", SIG)
    assert exc.value.position == 10
    with pytest.raises(ParseError) as exc:
        parse_formula("pi1 pi2", SIG)
    assert exc.value.position == 4
    with pytest.raises(ParseError) as exc:
        parse_formula("unknown_atom", SIG)
    assert exc.value.position == 0
    with pytest.raises(ParseError) as exc:
        parse_formula("[pi1 pi2]t(1)", SIG)
    assert exc.value.position == 5


def test_round_trip_random(rng):
    sig = small_signature(2, 2)
    for _ in range(2000):
        f = random_formula(sig, rng, depth=3)
        assert parse_formula(print_formula(f), sig) == f


@st.composite
def formulas(draw, depth=3):
    sig = SIG
    if depth == 0 or draw(st.booleans()):
        leaves = [Atom(a) for a in sig.atoms] + [OutcomeAtom(v) for v in (1, 0, "?")]
        return draw(st.sampled_from(leaves))
    kind = draw(st.sampled_from(["not", "and", "box"]))
    if kind == "not":
        return Not(draw(formulas(depth=depth - 1)))
    if kind == "and":
        return And(draw(formulas(depth=depth - 1)), draw(formulas(depth=depth - 1)))
    atoms = draw(st.frozensets(st.sampled_from(sig.atoms)))
    return Box(atoms, draw(formulas(depth=depth - 1)))


@settings(max_examples=300, deadline=None)
@given(formulas())
def test_round_trip_hypothesis(f):
    assert parse_formula(print_formula(f), SIG) == f
