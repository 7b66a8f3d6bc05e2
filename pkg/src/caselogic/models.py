"""Classifier models, the satisfaction relation, and tiny-scale search.

A classifier model is a non-empty set of states (valuations over the
factors) together with a total decision function into {1, 0, ?}.  Formula
evaluation follows the selectis-paribus reading of [W]: the subformula must
hold at every state agreeing with the current one on W.

Model-space enumeration (satisfiability, validity, the axiom suite) is
exact but exponential, so it is guarded by MODEL_ENUM_BOUND.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional

from caselogic import _kernels
from caselogic.errors import CapacityError
from caselogic.formulas import (
    And,
    Atom,
    Box,
    Diamond,
    Formula,
    Implies,
    Not,
    OutcomeAtom,
    big_and,
    conj_formula,
)
from caselogic.signature import (
    DEFENDANT,
    PLAINTIFF,
    UNKNOWN,
    VALUES,
    Signature,
    Val,
    iter_submasks,
    opposite,
)

MODEL_ENUM_BOUND = 3
FORMULA_BUILD_BOUND = 4

_VAL_TO_CODE = {DEFENDANT: _kernels.DEC_0, PLAINTIFF: _kernels.DEC_1, UNKNOWN: _kernels.DEC_UNK}
_CODE_TO_VAL = {v: k for k, v in _VAL_TO_CODE.items()}


@dataclass(frozen=True)
class ClassifierModel:
    signature: Signature
    decisions: tuple  # sorted ((state mask, value), ...)

    def __post_init__(self):
        if not self.decisions:
            raise ValueError("a classifier model needs at least one state")

    @classmethod
    def from_map(cls, sig: Signature, mapping: Mapping) -> "ClassifierModel":
        """Keys may be state masks or iterables of factor names."""
        items = {}
        for k, v in mapping.items():
            mask = k if isinstance(k, int) else sig.mask(k)
            if mask < 0 or mask > sig.full_mask:
                raise ValueError(f"state mask {mask} outside the signature")
            if v not in VALUES:
                raise ValueError(f"decision must be 1, 0 or '?', got {v!r}")
            items[mask] = v
        return cls(sig, tuple(sorted(items.items())))

    @classmethod
    def full(cls, sig: Signature, fn: Callable[[int], Val]) -> "ClassifierModel":
        return cls(sig, tuple((s, fn(s)) for s in sig.states()))

    @classmethod
    def from_codes(cls, sig: Signature, codes) -> "ClassifierModel":
        items = []
        for s, code in enumerate(codes):
            if code == _kernels.DEC_ABSENT:
                continue
            items.append((s, _CODE_TO_VAL[code]))
        return cls(sig, tuple(items))

    @property
    def states(self) -> tuple:
        return tuple(s for s, _ in self.decisions)

    @property
    def _map(self) -> dict:
        d = self.__dict__.get("_map_cache")
        if d is None:
            d = dict(self.decisions)
            self.__dict__["_map_cache"] = d
        return d

    def has_state(self, mask: int) -> bool:
        return mask in self._map

    def decision(self, state) -> Val:
        mask = state if isinstance(state, int) else self.signature.mask(state)
        try:
            return self._map[mask]
        except KeyError:
            raise ValueError(f"not a state of the model: {sorted(self.signature.names(mask))}") from None

    def decision_codes(self) -> bytearray:
        """Kernel encoding: one code per valuation, absent states marked.

        The returned buffer is cached and shared; treat it as read-only.
        """
        codes = self.__dict__.get("_codes_cache")
        if codes is None:
            codes = bytearray([_kernels.DEC_ABSENT]) * (1 << self.signature.n)
            for s, v in self.decisions:
                codes[s] = _VAL_TO_CODE[v]
            self.__dict__["_codes_cache"] = codes
        return codes

    @property
    def is_full(self) -> bool:
        return len(self.decisions) == 1 << self.signature.n


def satisfies(model: ClassifierModel, state, formula: Formula) -> bool:
    """The satisfaction relation at a pointed model."""
    sig = model.signature
    mask = state if isinstance(state, int) else sig.mask(state)
    if not model.has_state(mask):
        raise ValueError(f"not a state of the model: {sorted(sig.names(mask))}")
    return _eval(model, mask, formula)


def _eval(model: ClassifierModel, s: int, f: Formula) -> bool:
    if isinstance(f, Atom):
        return bool(s >> model.signature.index(f.name) & 1)
    if isinstance(f, OutcomeAtom):
        return model._map[s] == f.value
    if isinstance(f, Not):
        return not _eval(model, s, f.sub)
    if isinstance(f, And):
        return _eval(model, s, f.left) and _eval(model, s, f.right)
    if isinstance(f, Box):
        w = model.signature.mask(f.atoms)
        ref = s & w
        return all(_eval(model, s2, f.sub) for s2 in model.states if s2 & w == ref)
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# The model class carved out by completeness and two-way monotonicity


def check_compl(model: ClassifierModel) -> bool:
    """True iff every valuation over the factors is a state."""
    return model.is_full


def check_2mon(model: ClassifierModel) -> bool:
    """Semantic two-way monotonicity: a decided state fixes the decision of
    every state with a stronger pro-side and weaker con-side."""
    sig = model.signature
    for s, x in model.decisions:
        if x == UNKNOWN:
            continue
        pro = sig.side_mask(x)
        con = sig.side_mask(opposite(x))
        s_pro = s & pro
        s_con = s & con
        for s2, x2 in model.decisions:
            if x2 == x:
                continue
            if (s_pro & ~(s2 & pro)) == 0 and (s2 & con & ~s_con) == 0:
                return False
    return True


def in_cm_prec(model: ClassifierModel) -> bool:
    return check_compl(model) and check_2mon(model)


def build_compl(sig: Signature, bound: int = FORMULA_BUILD_BOUND) -> Formula:
    """The literal completeness formula: some state realizes every
    valuation."""
    if sig.n > bound:
        raise CapacityError("build_compl", bound, sig.n)
    atoms = frozenset(sig.atoms)
    return big_and(
        Diamond((), conj_formula(sig, sig.name_set(m), atoms))
        for m in sig.states()
    )


def build_2mon(sig: Signature, bound: int = FORMULA_BUILD_BOUND) -> Formula:
    """The literal two-way-monotonicity formula."""
    if sig.n > bound:
        raise CapacityError("build_2mon", bound, sig.n)
    atoms = frozenset(sig.atoms)
    conjuncts = []
    for x in (DEFENDANT, PLAINTIFF):
        pro = sig.side_mask(x)
        con = sig.side_mask(opposite(x))
        for xm in iter_submasks(pro):
            for ym in iter_submasks(con):
                antecedent = Diamond(
                    (), And(conj_formula(sig, sig.name_set(xm | ym), atoms), OutcomeAtom(x))
                )
                inner = []
                for xm2 in iter_submasks(pro):
                    if xm & ~xm2:
                        continue
                    for ym2 in iter_submasks(ym):
                        inner.append(
                            Box(
                                (),
                                Implies(
                                    conj_formula(sig, sig.name_set(xm2 | ym2), atoms),
                                    OutcomeAtom(x),
                                ),
                            )
                        )
                conjuncts.append(Implies(antecedent, big_and(inner)))
    return big_and(conjuncts)


# ---------------------------------------------------------------------------
# Exhaustive model enumeration at tiny scale


def _check_bound(what: str, sig: Signature, bound: int):
    if sig.n > bound:
        raise CapacityError(what, bound, sig.n)


def iter_cm_models(sig: Signature, bound: int = MODEL_ENUM_BOUND):
    """Every classifier model over the signature: all non-empty state sets,
    all decision functions."""
    _check_bound("iter_cm_models", sig, bound)
    all_states = sig.canonical_states
    n_states = len(all_states)
    for subset in range(1, 1 << n_states):
        states = [all_states[i] for i in range(n_states) if subset >> i & 1]
        for values in itertools.product(VALUES, repeat=len(states)):
            yield ClassifierModel(sig, tuple(sorted(zip(states, values))))


@lru_cache(maxsize=8)
def cm_prec_models(sig: Signature, bound: int = MODEL_ENUM_BOUND) -> tuple:
    """Every model in the precedent class: full state space, two-way
    monotone decision function.  Cached per signature."""
    _check_bound("cm_prec_models", sig, bound)
    states = tuple(sig.states())
    out = []
    for values in itertools.product(VALUES, repeat=len(states)):
        model = ClassifierModel(sig, tuple(zip(states, values)))
        if check_2mon(model):
            out.append(model)
    return tuple(out)


@dataclass(frozen=True)
class SearchResult:
    holds: bool
    model: Optional[ClassifierModel]
    state: Optional[int]


def _iter_models(sig: Signature, model_class: str, bound: int):
    if model_class == "cm":
        return iter_cm_models(sig, bound)
    if model_class == "cm_prec":
        return iter(cm_prec_models(sig, bound))
    raise ValueError(f"model class must be 'cm' or 'cm_prec', got {model_class!r}")


def is_satisfiable_tiny(
    f: Formula, sig: Signature, model_class: str = "cm", bound: int = MODEL_ENUM_BOUND
) -> SearchResult:
    """Exact satisfiability by exhaustive enumeration; returns the first
    witness in canonical enumeration order."""
    for model in _iter_models(sig, model_class, bound):
        for s in model.states:
            if _eval(model, s, f):
                return SearchResult(True, model, s)
    return SearchResult(False, None, None)


def is_valid_tiny(
    f: Formula, sig: Signature, model_class: str = "cm", bound: int = MODEL_ENUM_BOUND
) -> SearchResult:
    """Exact validity; on failure returns the first countermodel."""
    for model in _iter_models(sig, model_class, bound):
        for s in model.states:
            if not _eval(model, s, f):
                return SearchResult(False, model, s)
    return SearchResult(True, None, None)


# ---------------------------------------------------------------------------
# Axiom suite: the schemata are checked as semantic validities


def random_formula(sig: Signature, rng, depth: int = 2) -> Formula:
    """A random formula for schema instantiation."""
    if depth <= 0 or rng.random() < 0.3:
        leaves = [Atom(a) for a in sig.atoms] + [OutcomeAtom(v) for v in VALUES]
        return rng.choice(leaves)
    kind = rng.choice(("not", "and", "box", "diamond"))
    if kind == "not":
        return Not(random_formula(sig, rng, depth - 1))
    if kind == "and":
        return And(random_formula(sig, rng, depth - 1), random_formula(sig, rng, depth - 1))
    atoms = frozenset(a for a in sig.atoms if rng.random() < 0.5)
    sub = random_formula(sig, rng, depth - 1)
    return Box(atoms, sub) if kind == "box" else Diamond(atoms, sub)


def _red_instance(sig: Signature, x_atoms: frozenset, phi: Formula) -> Formula:
    from caselogic.formulas import Iff

    parts = []
    for ym in iter_submasks(sig.mask(x_atoms)):
        desc = conj_formula(sig, sig.name_set(ym), x_atoms)
        parts.append(Implies(desc, Box((), Implies(desc, phi))))
    return Iff(Box(x_atoms, phi), big_and(parts))


def _funct_instance(sig: Signature, x: Val) -> Formula:
    atoms = frozenset(sig.atoms)
    return big_and(
        Implies(
            And(conj_formula(sig, sig.name_set(ym), atoms), OutcomeAtom(x)),
            Box((), Implies(conj_formula(sig, sig.name_set(ym), atoms), OutcomeAtom(x))),
        )
        for ym in sig.states()
    )


@dataclass(frozen=True)
class AxiomFailure:
    schema: str
    formula: Formula
    countermodel: SearchResult


@dataclass(frozen=True)
class AxiomReport:
    checked: dict
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


def check_axiom_suite(
    sig: Signature,
    rng,
    instances: int = 50,
    bound: int = MODEL_ENUM_BOUND,
    depth: int = 2,
) -> AxiomReport:
    """Instantiate each axiom schema with random subformulas and verify
    validity over exhaustively enumerated models; also checks that
    necessitation preserves validity on sampled valid formulas."""
    _check_bound("check_axiom_suite", sig, bound)

    def rand():
        return random_formula(sig, rng, depth)

    def k_inst():
        phi, psi = rand(), rand()
        return Implies(And(Box((), phi), Box((), Implies(phi, psi))), Box((), psi))

    def t_inst():
        phi = rand()
        return Implies(Box((), phi), phi)

    def four_inst():
        phi = rand()
        return Implies(Box((), phi), Box((), Box((), phi)))

    def b_inst():
        phi = rand()
        return Implies(phi, Box((), Diamond((), phi)))

    def red_inst():
        x_atoms = frozenset(a for a in sig.atoms if rng.random() < 0.5)
        return _red_instance(sig, x_atoms, rand())

    def atleast_inst():
        from caselogic.formulas import big_or

        return big_or([OutcomeAtom(v) for v in VALUES])

    def atmost_inst():
        x, y = rng.sample(list(VALUES), 2)
        return Implies(OutcomeAtom(x), Not(OutcomeAtom(y)))

    def funct_inst():
        return _funct_instance(sig, rng.choice(VALUES))

    schemata = {
        "K": k_inst,
        "T": t_inst,
        "4": four_inst,
        "B": b_inst,
        "Red": red_inst,
        "AtLeast": atleast_inst,
        "AtMost": atmost_inst,
        "Funct": funct_inst,
    }
    checked = {}
    failures = []
    for name, make in schemata.items():
        checked[name] = 0
        for _ in range(instances):
            inst = make()
            result = is_valid_tiny(inst, sig, "cm", bound)
            checked[name] += 1
            if not result.holds:
                failures.append(AxiomFailure(name, inst, result))

    # Nec: for sampled valid formulas, [](phi) must be valid too.  Random
    # formulas are rarely valid, so seed with schema instances (which are).
    checked["Nec"] = 0
    candidates = [atleast_inst(), atmost_inst(), t_inst(), b_inst()]
    candidates += [rand() for _ in range(instances)]
    for phi in candidates:
        if is_valid_tiny(phi, sig, "cm", bound).holds:
            checked["Nec"] += 1
            result = is_valid_tiny(Box((), phi), sig, "cm", bound)
            if not result.holds:
                failures.append(AxiomFailure("Nec", Box((), phi), result))

    return AxiomReport(checked, tuple(failures))
