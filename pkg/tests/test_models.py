"""Classifier models, satisfaction, the model class, and tiny-scale search."""

import pytest

from caselogic.errors import CapacityError
from caselogic.formulas import (
    Atom,
    Box,
    Diamond,
    Not,
    OutcomeAtom,
    parse_formula,
)
from caselogic.models import (
    ClassifierModel,
    build_2mon,
    build_compl,
    check_2mon,
    check_axiom_suite,
    check_compl,
    cm_prec_models,
    in_cm_prec,
    is_satisfiable_tiny,
    is_valid_tiny,
    iter_cm_models,
    random_formula,
    satisfies,
)
from caselogic.sampling import random_model, small_signature

SIG2 = small_signature(1, 1)


def test_model_constructors_and_accessors():
    sig = SIG2
    m = ClassifierModel.from_map(sig, {(): "?", ("p1",): 1, ("p1", "d1"): 0})
    assert m.states == (0b00, 0b01, 0b11)
    assert m.decision(["p1"]) == 1
    assert m.decision(0b11) == 0
    assert not m.is_full
    assert m.has_state(0b00) and not m.has_state(0b10)
    with pytest.raises(ValueError):
        m.decision(0b10)
    with pytest.raises(ValueError):
        ClassifierModel(sig, ())
    with pytest.raises(ValueError):
        ClassifierModel.from_map(sig, {0b100: 1})
    with pytest.raises(ValueError):
        ClassifierModel.from_map(sig, {0b01: "x"})
    full = ClassifierModel.full(sig, lambda s: 1)
    assert full.is_full and check_compl(full)
    assert ClassifierModel.from_codes(sig, full.decision_codes()) == full


def test_satisfaction_basics():
    sig = SIG2
    m = ClassifierModel.from_map(sig, {(): 0, ("p1",): 1, ("p1", "d1"): "?"})
    assert satisfies(m, ("p1",), Atom("p1"))
    assert not satisfies(m, (), Atom("p1"))
    assert satisfies(m, ("p1",), OutcomeAtom(1))
    assert satisfies(m, (), Not(OutcomeAtom(1)))
    # [p1] at {p1}: sub must hold at {p1} and {p1,d1}
    assert satisfies(m, ("p1",), Box({"p1"}, Atom("p1")))
    assert not satisfies(m, ("p1",), Box({"p1"}, OutcomeAtom(1)))
    with pytest.raises(ValueError):
        satisfies(m, ("d1",), Atom("p1"))


def test_box_diamond_duality_and_universal_modality(rng):
    sig = small_signature(2, 1)
    for _ in range(40):
        m = random_model(sig, rng)
        f = random_formula(sig, rng, 2)
        w = frozenset(a for a in sig.atoms if rng.random() < 0.5)
        empty_box_values = set()
        for s in m.states:
            assert satisfies(m, s, Diamond(w, f)) == (
                not satisfies(m, s, Box(w, Not(f)))
            )
            empty_box_values.add(satisfies(m, s, Box(frozenset(), f)))
        assert len(empty_box_values) == 1


def test_semantic_and_formula_model_class_agree():
    # at two atoms, the literal Compl/2Mon formulas agree with the
    # semantic checks on every classifier model (both are state-independent)
    compl_f = build_compl(SIG2)
    mon_f = build_2mon(SIG2)
    for m in iter_cm_models(SIG2):
        s = m.states[0]
        assert satisfies(m, s, compl_f) == check_compl(m)
        assert satisfies(m, s, mon_f) == check_2mon(m)


def test_build_bounds_fail_loudly():
    big = small_signature(3, 2)
    with pytest.raises(CapacityError):
        build_compl(big)
    with pytest.raises(CapacityError):
        build_2mon(big)
    with pytest.raises(CapacityError):
        list(iter_cm_models(big))
    with pytest.raises(CapacityError):
        cm_prec_models(big)
    with pytest.raises(ValueError):
        is_satisfiable_tiny(Atom("p1"), SIG2, "bogus")


def test_cm_prec_models_membership():
    models = cm_prec_models(SIG2)
    assert all(in_cm_prec(m) for m in models)
    # independent count: full-state decision functions passing the check
    import itertools

    expected = sum(
        1
        for values in itertools.product((1, 0, "?"), repeat=4)
        if check_2mon(ClassifierModel(SIG2, tuple(zip(range(4), values))))
    )
    assert len(models) == expected


def test_satisfiability_and_validity():
    sat = is_satisfiable_tiny(parse_formula("t(1) & t(0)", SIG2), SIG2)
    assert not sat.holds
    sat = is_satisfiable_tiny(parse_formula("p1 & t(0)", SIG2), SIG2)
    assert sat.holds
    assert satisfies(sat.model, sat.state, parse_formula("p1 & t(0)", SIG2))
    valid = is_valid_tiny(parse_formula("t(1) | t(0) | t(?)", SIG2), SIG2)
    assert valid.holds
    invalid = is_valid_tiny(parse_formula("t(1)", SIG2), SIG2)
    assert not invalid.holds
    assert not satisfies(invalid.model, invalid.state, OutcomeAtom(1))
    # in the restricted class, an isolated plaintiff win below a defendant
    # win is ruled out
    f = parse_formula("<>(~p1 & d1 & t(1)) & <>(p1 & ~d1 & t(0))", SIG2)
    assert is_satisfiable_tiny(f, SIG2, "cm").holds
    assert not is_satisfiable_tiny(f, SIG2, "cm_prec").holds


def test_axiom_suite_small(rng):
    report = check_axiom_suite(SIG2, rng, instances=5)
    assert report.ok
    assert set(report.checked) == {"K", "T", "4", "B", "Red", "AtLeast", "AtMost", "Funct", "Nec"}
    assert all(report.checked[k] == 5 for k in ("K", "T", "4", "B"))
    assert report.checked["Nec"] >= 1
