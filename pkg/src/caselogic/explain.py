"""Implicants, prime implicants, abductive and contrastive explanations.

All notions are evaluated against a classifier model.  An implicant for an
outcome is a term that forces the outcome at every state satisfying it; an
abductive explanation is a (prime) implicant true at the state under
scrutiny; a contrastive explanation points to a minimal set of the state's
literals whose variation can change the decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from caselogic import _kernels
from caselogic.bridge import build_canonical_model, tr2_cb
from caselogic.casebase import CaseBase, Precedent, Reason, cb_prefers, is_consistent
from caselogic.errors import CapacityError
from caselogic.formulas import (
    And,
    Box,
    Diamond,
    Formula,
    Implies,
    Not,
    OutcomeAtom,
    Term,
    big_and,
    big_or,
    conj_formula,
    mk_conj,
    state_term,
)
from caselogic.models import (
    MODEL_ENUM_BOUND,
    ClassifierModel,
    SearchResult,
    _eval,
    cm_prec_models,
    is_valid_tiny,
)
from caselogic.signature import Signature, Val, iter_submasks, opposite, state_key

PIMP_ATOM_BOUND = 12
MHS_ATOM_BOUND = 4

_VAL_CODE = {0: _kernels.DEC_0, 1: _kernels.DEC_1, "?": _kernels.DEC_UNK}


def _target_code(x: Val) -> int:
    try:
        return _VAL_CODE[x]
    except KeyError:
        raise ValueError(f"target outcome must be 1, 0 or '?', got {x!r}") from None


def _term_masks(sig: Signature, t: Term):
    return sig.mask(t.positive), sig.mask(t.negative)


def _state_mask(model: ClassifierModel, state) -> int:
    mask = state if isinstance(state, int) else model.signature.mask(state)
    if not model.has_state(mask):
        raise ValueError(
            f"not a state of the model: {sorted(model.signature.names(mask))}"
        )
    return mask


# ---------------------------------------------------------------------------
# Point checks


def is_implicant(model: ClassifierModel, t: Term, x: Val) -> bool:
    """Every present state satisfying the term is decided x (vacuously true
    when no state satisfies it)."""
    pos, neg = _term_masks(model.signature, t)
    return _kernels.implicant_holds(
        model.decision_codes(), model.signature.n, pos, neg, _target_code(x)
    )


def is_prime_implicant(model: ClassifierModel, t: Term, x: Val) -> bool:
    """Implicant from which no single literal can be dropped."""
    if not is_implicant(model, t, x):
        return False
    return all(not is_implicant(model, t.drop(a), x) for a in t.atoms)


def is_waxp(model: ClassifierModel, state, t: Term, x: Val) -> bool:
    s = _state_mask(model, state)
    return t.holds(model.signature.name_set(s)) and is_implicant(model, t, x)


def is_axp(model: ClassifierModel, state, t: Term, x: Val) -> bool:
    s = _state_mask(model, state)
    return t.holds(model.signature.name_set(s)) and is_prime_implicant(model, t, x)


def is_wcxp(model: ClassifierModel, state, t: Term, x: Val) -> bool:
    """The term holds, the state is decided x, and varying the term's atoms
    can reach a state not decided x."""
    sig = model.signature
    s = _state_mask(model, state)
    if not t.holds(sig.name_set(s)) or model.decision(s) != x:
        return False
    return _kernels.varies_from(
        model.decision_codes(), sig.n, s, sig.mask(t.atoms), _target_code(x)
    )


def is_cxp(model: ClassifierModel, state, t: Term, x: Val) -> bool:
    """Contrastive explanation: variation over the term's atoms can change
    the decision, but variation over any proper subset cannot."""
    sig = model.signature
    s = _state_mask(model, state)
    if not t.holds(sig.name_set(s)):
        return False
    codes = model.decision_codes()
    atom_mask = sig.mask(t.atoms)
    code = _target_code(x)
    if not _kernels.varies_from(codes, sig.n, s, atom_mask, code):
        return False
    return all(
        not _kernels.varies_from(codes, sig.n, s, atom_mask & ~(1 << sig.index(a)), code)
        for a in t.atoms
    )


def waxp_from_reason(sig: Signature, c: Precedent) -> Term:
    """The constructive weak abductive explanation carried by a precedent:
    its reason plus the negations of the absent con-side factors."""
    con = frozenset(
        sig.dfd if c.outcome == 1 else sig.plt
    )
    return mk_conj(c.reason, (c.reason | con) - (c.facts & con))


# ---------------------------------------------------------------------------
# Formula renderings of the definitions (used by agreement tests)


def imp_formula(sig: Signature, t: Term, x: Val) -> Formula:
    return Box((), Implies(t.to_formula(sig), OutcomeAtom(x)))


def pimp_formula(sig: Signature, t: Term, x: Val) -> Formula:
    minimality = [
        Diamond(t.atoms - {p}, Not(OutcomeAtom(x))) for p in sorted(t.atoms)
    ]
    return Box((), Implies(t.to_formula(sig), big_and([OutcomeAtom(x)] + minimality)))


def waxp_formula(sig: Signature, t: Term, x: Val) -> Formula:
    return And(t.to_formula(sig), imp_formula(sig, t, x))


def axp_formula(sig: Signature, t: Term, x: Val) -> Formula:
    return And(t.to_formula(sig), pimp_formula(sig, t, x))


def wcxp_formula(sig: Signature, t: Term, x: Val) -> Formula:
    others = frozenset(sig.atoms) - t.atoms
    return big_and(
        [t.to_formula(sig), OutcomeAtom(x), Diamond(others, Not(OutcomeAtom(x)))]
    )


def cxp_formula(sig: Signature, t: Term, x: Val) -> Formula:
    others = frozenset(sig.atoms) - t.atoms
    parts = [t.to_formula(sig), Diamond(others, Not(OutcomeAtom(x)))]
    for p in sorted(t.atoms):
        parts.append(Box(others | {p}, OutcomeAtom(x)))
    return big_and(parts)


# ---------------------------------------------------------------------------
# Enumerators


@dataclass(frozen=True)
class ExplanationSet:
    kind: str
    target: Val
    state: Optional[frozenset]
    terms: tuple

    def to_dict(self, sig: Signature) -> dict:
        return {
            "kind": self.kind,
            "target": str(self.target),
            "state": sorted(self.state, key=sig.index) if self.state is not None else None,
            "terms": [
                {
                    "positive": sorted(t.positive, key=sig.index),
                    "negative": sorted(t.negative, key=sig.index),
                }
                for t in self.terms
            ],
        }


def _sorted_terms(sig: Signature, terms: Iterable[Term]) -> tuple:
    return tuple(sorted(terms, key=lambda t: t.sort_key(sig)))


def _check_pimp_bound(sig: Signature, bound: int):
    if sig.n > bound:
        raise CapacityError("term-lattice enumeration", bound, sig.n)


def enumerate_prime_implicants(
    model: ClassifierModel, x: Val, bound: int = PIMP_ATOM_BOUND
) -> ExplanationSet:
    """All subset-minimal implicants for the outcome."""
    sig = model.signature
    _check_pimp_bound(sig, bound)
    pairs = _kernels.prime_implicants(model.decision_codes(), sig.n, _target_code(x))
    terms = [Term(sig.name_set(p), sig.name_set(n)) for p, n in pairs]
    return ExplanationSet("pimp", x, None, _sorted_terms(sig, terms))


def enumerate_axp(
    model: ClassifierModel, state, x: Optional[Val] = None, bound: int = PIMP_ATOM_BOUND
) -> ExplanationSet:
    """All abductive explanations of the state's outcome."""
    sig = model.signature
    _check_pimp_bound(sig, bound)
    s = _state_mask(model, state)
    if x is None:
        x = model.decision(s)
    pairs = _kernels.minimal_implicants_at(
        model.decision_codes(), sig.n, s, _target_code(x)
    )
    terms = [Term(sig.name_set(p), sig.name_set(n)) for p, n in pairs]
    return ExplanationSet("axp", x, sig.name_set(s), _sorted_terms(sig, terms))


def enumerate_waxp(
    model: ClassifierModel, state, x: Optional[Val] = None, bound: int = PIMP_ATOM_BOUND
) -> ExplanationSet:
    """All weak abductive explanations (implicants true at the state)."""
    sig = model.signature
    _check_pimp_bound(sig, bound)
    s = _state_mask(model, state)
    if x is None:
        x = model.decision(s)
    codes = model.decision_codes()
    code = _target_code(x)
    terms = []
    for atom_set in iter_submasks(sig.full_mask):
        if _kernels.implicant_holds(codes, sig.n, s & atom_set, atom_set & ~s, code):
            terms.append(state_term(sig, s, atom_set))
    return ExplanationSet("waxp", x, sig.name_set(s), _sorted_terms(sig, terms))


def enumerate_cxp(
    model: ClassifierModel, state, x: Optional[Val] = None, bound: int = PIMP_ATOM_BOUND
) -> ExplanationSet:
    """All contrastive explanations of the state's outcome."""
    sig = model.signature
    _check_pimp_bound(sig, bound)
    s = _state_mask(model, state)
    if x is None:
        x = model.decision(s)
    sets = _kernels.minimal_contrastive_sets(
        model.decision_codes(), sig.n, s, _target_code(x)
    )
    terms = [state_term(sig, s, a) for a in sets]
    return ExplanationSet("cxp", x, sig.name_set(s), _sorted_terms(sig, terms))


def enumerate_wcxp(
    model: ClassifierModel, state, x: Optional[Val] = None, bound: int = PIMP_ATOM_BOUND
) -> ExplanationSet:
    """All weak contrastive explanations at the state."""
    sig = model.signature
    _check_pimp_bound(sig, bound)
    s = _state_mask(model, state)
    if x is None:
        x = model.decision(s)
    if model.decision(s) != x:
        return ExplanationSet("wcxp", x, sig.name_set(s), ())
    codes = model.decision_codes()
    code = _target_code(x)
    terms = []
    for atom_set in iter_submasks(sig.full_mask):
        if _kernels.varies_from(codes, sig.n, s, atom_set, code):
            terms.append(state_term(sig, s, atom_set))
    return ExplanationSet("wcxp", x, sig.name_set(s), _sorted_terms(sig, terms))


_ENUMERATORS = {
    "axp": enumerate_axp,
    "waxp": enumerate_waxp,
    "cxp": enumerate_cxp,
    "wcxp": enumerate_wcxp,
}


def enumerate_explanations(
    model: ClassifierModel, state, kind: str, x: Optional[Val] = None
) -> ExplanationSet:
    if kind == "pimp":
        if x is None:
            raise ValueError("prime-implicant enumeration needs an explicit outcome")
        return enumerate_prime_implicants(model, x)
    try:
        enum = _ENUMERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown explanation kind {kind!r}") from None
    return enum(model, state, x)


def explanations_all_models(
    cb: CaseBase,
    state,
    kind: str,
    x: Optional[Val] = None,
    bound: int = MODEL_ENUM_BOUND,
) -> ExplanationSet:
    """Terms that are explanations of the given kind in every complete
    two-way-monotone model of the case-base translation (tiny scale)."""
    sig = cb.signature
    if sig.n > bound:
        raise CapacityError("all-models explanation", bound, sig.n)
    canonical = build_canonical_model(cb)
    if not isinstance(canonical, ClassifierModel):
        raise ValueError("case base is inconsistent")
    translation = tr2_cb(cb)
    conforming = [
        m for m in cm_prec_models(sig, bound) if _eval(m, 0, translation)
    ]
    s = sig.mask(state) if not isinstance(state, int) else state
    if x is None:
        x = canonical.decision(s) if kind != "pimp" else None
    common = None
    for m in conforming:
        terms = set(enumerate_explanations(m, s, kind, x).terms)
        common = terms if common is None else common & terms
    return ExplanationSet(
        kind, x, sig.name_set(s) if kind != "pimp" else None,
        _sorted_terms(sig, common or ()),
    )


# ---------------------------------------------------------------------------
# Minimal-hitting-set duality


def minimal_hitting_sets(families, universe: int):
    """Subset-minimal hitting sets of a family of atom-set masks.

    The empty family is hit by the empty set alone.
    """
    families = list(families)
    if not families:
        return [0]
    if any(f == 0 for f in families):
        return []
    hitting = [h for h in iter_submasks(universe) if all(h & f for f in families)]
    minimal = [
        h for h in hitting if not any(g != h and g & ~h == 0 for g in hitting)
    ]
    return sorted(minimal, key=state_key)


@dataclass(frozen=True)
class DualityReport:
    ok: bool
    axp_sets: tuple
    cxp_sets: tuple
    mhs_of_axp: tuple
    mhs_of_cxp: tuple


def check_mhs_duality(
    model: ClassifierModel, state, bound: int = MHS_ATOM_BOUND
) -> DualityReport:
    """Contrastive atom sets are exactly the minimal hitting sets of the
    abductive atom sets at the state, and vice versa."""
    sig = model.signature
    if sig.n > bound:
        raise CapacityError("hitting-set duality", bound, sig.n)
    if not model.is_full:
        raise ValueError("duality check expects a full-state model")
    s = _state_mask(model, state)
    x = model.decision(s)
    axp_sets = sorted((sig.mask(t.atoms) for t in enumerate_axp(model, s, x).terms), key=state_key)
    cxp_sets = sorted((sig.mask(t.atoms) for t in enumerate_cxp(model, s, x).terms), key=state_key)
    mhs_axp = minimal_hitting_sets(axp_sets, sig.full_mask)
    mhs_cxp = minimal_hitting_sets(cxp_sets, sig.full_mask)
    ok = list(cxp_sets) == list(mhs_axp) and list(axp_sets) == list(mhs_cxp)
    return DualityReport(ok, tuple(axp_sets), tuple(cxp_sets), tuple(mhs_axp), tuple(mhs_cxp))


# ---------------------------------------------------------------------------
# Executable checks of the case-base/explanation correspondences


@dataclass(frozen=True)
class PropReport:
    name: str
    checked: int
    counterexamples: tuple

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _canonical_or_raise(cb: CaseBase) -> ClassifierModel:
    if not is_consistent(cb):
        raise ValueError("case base is inconsistent")
    model = build_canonical_model(cb)
    assert isinstance(model, ClassifierModel)
    return model


def check_prop2(cb: CaseBase) -> PropReport:
    """Every prime implicant for the losing side clashes with each
    precedent: it either negates part of the reason or asserts a con-factor
    absent from the case."""
    sig = cb.signature
    model = _canonical_or_raise(cb)
    checked = 0
    bad = []
    pimps = {x: enumerate_prime_implicants(model, x).terms for x in (0, 1)}
    for c in cb.cases:
        con = frozenset(sig.dfd if c.outcome == 1 else sig.plt)
        for lam in pimps[opposite(c.outcome)]:
            checked += 1
            if not (c.reason & lam.negative) and lam.positive <= (c.facts & con):
                bad.append((c, lam))
    return PropReport("prop2", checked, tuple(bad))


def check_prop3(cb: CaseBase) -> PropReport:
    """Each precedent's reason is the positive part of some weak abductive
    explanation at its own fact situation."""
    sig = cb.signature
    model = _canonical_or_raise(cb)
    checked = 0
    bad = []
    for c in cb.cases:
        checked += 1
        free = sig.mask(frozenset(sig.atoms) - c.facts - c.reason)
        found = any(
            is_waxp(model, sig.mask(c.facts), Term(c.reason, sig.name_set(nm)), c.outcome)
            for nm in iter_submasks(free)
        )
        if not found:
            bad.append(c)
    return PropReport("prop3", checked, tuple(bad))


def check_prop4(cb: CaseBase) -> PropReport:
    """The constructive weak abductive explanation really is one."""
    sig = cb.signature
    model = _canonical_or_raise(cb)
    checked = 0
    bad = []
    for c in cb.cases:
        checked += 1
        t = waxp_from_reason(sig, c)
        if not is_waxp(model, sig.mask(c.facts), t, c.outcome):
            bad.append((c, t))
    return PropReport("prop4", checked, tuple(bad))


def check_prop5(cb: CaseBase) -> PropReport:
    """If the absence of a con-side set alone contrastively explains a
    precedent's outcome, that set (with the case's con-factors) is not
    outweighed by the precedent's reason."""
    sig = cb.signature
    model = _canonical_or_raise(cb)
    checked = 0
    bad = []
    for c in cb.cases:
        x = c.outcome
        con = frozenset(sig.dfd if x == 1 else sig.plt)
        s_mask = sig.mask(c.facts)
        absent_con = sig.mask(con - c.facts)
        for ym in iter_submasks(absent_con):
            y = sig.name_set(ym)
            checked += 1
            t = Term(frozenset(), y)
            if not is_wcxp(model, s_mask, t, x):
                continue
            loser = Reason(y | (c.facts & con), opposite(x))
            if cb_prefers(cb, Reason(c.reason, x), loser):
                bad.append((c, y))
    return PropReport("prop5", checked, tuple(bad))


def _all_terms(sig: Signature):
    for atom_set in iter_submasks(sig.full_mask):
        for pos in iter_submasks(atom_set):
            yield Term(sig.name_set(pos), sig.name_set(atom_set ^ pos))


def check_prop6(
    sig: Signature, case: Precedent, bound: int = MODEL_ENUM_BOUND
) -> SearchResult:
    """Validity of: the case translation implies some term is an implicant
    of its outcome and entails the reason description.  Checked by model
    enumeration; the translated-state term is tried first, since it is the
    witness whenever the antecedent holds."""
    from caselogic.bridge import translated_state, tr2

    if sig.n > bound:
        raise CapacityError("check_prop6", bound, sig.n)
    x = case.outcome
    reason_desc = conj_formula(sig, case.reason, case.reason)
    witness = state_term(sig, translated_state(sig, case), sig.full_mask)

    def disjunct(t: Term) -> Formula:
        return And(imp_formula(sig, t, x), Implies(t.to_formula(sig), reason_desc))

    rest = [t for t in _all_terms(sig) if t != witness]
    body = big_or([disjunct(witness)] + [disjunct(t) for t in rest])
    return is_valid_tiny(Implies(tr2(sig, case), body), sig, "cm", bound)
