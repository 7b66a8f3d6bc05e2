"""From case bases to classifier models and back.

Each precedent is translated into a diamond-prefixed full valuation
description conjoined with its outcome.  The induced (canonical) model puts
every valuation in the state space and decides each one by the a fortiori
forcing condition; consistency of the case base is equivalent to the
translation being satisfiable over complete two-way-monotone models, which
the canonical construction decides directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from caselogic import _kernels
from caselogic.casebase import CaseBase, Precedent, is_consistent, is_result_case
from caselogic.models import ClassifierModel, is_satisfiable_tiny
from caselogic.formulas import And, Diamond, Formula, OutcomeAtom, big_and, conj_formula
from caselogic.signature import PLAINTIFF, Signature, opposite, state_key


def translated_state(sig: Signature, c: Precedent) -> int:
    """The valuation a precedent pins: its reason plus its con-side facts."""
    con = sig.side_mask(opposite(c.outcome))
    return sig.mask(c.reason) | (sig.mask(c.facts) & con)


def tr2(sig: Signature, c: Precedent) -> Formula:
    """Reason-model translation of a single precedent."""
    state = sig.name_set(translated_state(sig, c))
    return Diamond((), And(conj_formula(sig, state, frozenset(sig.atoms)), OutcomeAtom(c.outcome)))


def tr1(sig: Signature, c: Precedent) -> Formula:
    """Result-model translation; only defined for result cases."""
    if not is_result_case(sig, c):
        raise ValueError(f"case {c.id!r} is not a result case; use tr2")
    return Diamond(
        (), And(conj_formula(sig, c.facts, frozenset(sig.atoms)), OutcomeAtom(c.outcome))
    )


def tr2_cb(cb: CaseBase) -> Formula:
    return big_and(tr2(cb.signature, c) for c in cb.cases)


def tr1_cb(cb: CaseBase) -> Formula:
    return big_and(tr1(cb.signature, c) for c in cb.cases)


@dataclass(frozen=True)
class ConflictReport:
    """A valuation forced to both outcomes, with the forcing precedents."""

    state: frozenset
    forcing_for_1: Precedent
    forcing_for_0: Precedent


def _case_arrays(cb: CaseBase):
    sig = cb.signature
    reasons, caps, sides, outs = [], [], [], []
    for c in cb.cases:
        con = sig.side_mask(opposite(c.outcome))
        reasons.append(sig.mask(c.reason))
        caps.append(sig.mask(c.facts) & con)
        sides.append(con)
        outs.append(_kernels.DEC_1 if c.outcome == PLAINTIFF else _kernels.DEC_0)
    return reasons, caps, sides, outs


def canonical_decision_codes(cb: CaseBase) -> bytearray:
    """Kernel decision array for the induced model; conflicts marked."""
    return _kernels.canonical_decisions(cb.signature.n, *_case_arrays(cb))


def build_canonical_model(cb: CaseBase) -> Union[ClassifierModel, ConflictReport]:
    """The model induced by the forcing conditions, or a conflict report
    naming the canonically least double-forced state."""
    sig = cb.signature
    codes = canonical_decision_codes(cb)
    conflicts = [s for s in sig.states() if codes[s] == _kernels.DEC_CONFLICT]
    if conflicts:
        s = min(conflicts, key=state_key)
        state = sig.name_set(s)
        reasons, caps, sides, outs = _case_arrays(cb)

        def forcing(target):
            for i, c in enumerate(cb.cases):
                if outs[i] == target and not (reasons[i] & ~s) and not (s & sides[i] & ~caps[i]):
                    return c
            raise AssertionError("conflict state without a forcing case")

        return ConflictReport(state, forcing(_kernels.DEC_1), forcing(_kernels.DEC_0))
    return ClassifierModel.from_codes(sig, codes)


def theorem1_decide(cb: CaseBase) -> bool:
    """Whether the case-base translation is satisfiable over complete
    two-way-monotone models, decided via the canonical construction."""
    return isinstance(build_canonical_model(cb), ClassifierModel)


def brute_force_decide(cb: CaseBase, bound: int = 3) -> bool:
    """Independent tiny-scale check: enumerate the model class and test the
    translation with the generic model checker."""
    result = is_satisfiable_tiny(tr2_cb(cb), cb.signature, "cm_prec", bound)
    return result.holds


def corollary1_decide(cb: CaseBase) -> bool:
    """Consistency of a result-model base via its tr1 translation."""
    for c in cb.cases:
        if not is_result_case(cb.signature, c):
            raise ValueError(f"case {c.id!r} is not a result case")
    return theorem1_decide(cb)


def corollary2_decide(cb: CaseBase, new_case: Precedent) -> bool:
    """Update admissibility via satisfiability of the extended translation."""
    return theorem1_decide(cb.with_case(new_case))


def cross_check(cb: CaseBase) -> bool:
    """Assert pairwise consistency and the model-side decision agree."""
    return is_consistent(cb) == theorem1_decide(cb)
