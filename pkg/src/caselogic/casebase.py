"""Factor-based precedents, preference relations, and consistency.

A precedent is a triple (facts, reason, outcome): the fact situation, the
subset of pro-factors the court cited as sufficient, and the winning side.
A case base is consistent when no two reasons are each preferred over the
other; updates are admissible exactly when they preserve consistency.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from caselogic.signature import (
    CONFLICT,
    DEFENDANT,
    OUTCOMES,
    PLAINTIFF,
    UNKNOWN,
    Signature,
    Val,
    iter_submasks,
    opposite,
    state_key,
)


@dataclass(frozen=True)
class Reason:
    """A set of same-polarity factors cited for an outcome."""

    factors: frozenset
    polarity: int

    def __post_init__(self):
        object.__setattr__(self, "factors", frozenset(self.factors))
        if self.polarity not in OUTCOMES:
            raise ValueError(f"reason polarity must be 0 or 1, got {self.polarity!r}")


@dataclass(frozen=True)
class Precedent:
    """A decided case: fact situation, cited reason, and outcome."""

    id: str
    facts: frozenset
    reason: frozenset
    outcome: int

    def __post_init__(self):
        object.__setattr__(self, "facts", frozenset(self.facts))
        object.__setattr__(self, "reason", frozenset(self.reason))

    @property
    def key(self):
        return (self.facts, self.reason, self.outcome)

    def cited_reason(self) -> Reason:
        return Reason(self.reason, self.outcome)


@dataclass(frozen=True)
class CaseBase:
    signature: Signature
    cases: tuple

    @classmethod
    def of(cls, signature: Signature, cases: Iterable[Precedent]) -> "CaseBase":
        """Build a case base, dropping duplicate (facts, reason, outcome)
        triples (the first id wins)."""
        seen = {}
        for c in cases:
            seen.setdefault(c.key, c)
        return cls(signature, tuple(seen.values()))

    def with_case(self, case: Precedent) -> "CaseBase":
        return CaseBase.of(self.signature, self.cases + (case,))

    def sorted_cases(self) -> tuple:
        sig = self.signature
        return tuple(
            sorted(
                self.cases,
                key=lambda c: (
                    state_key(sig.mask(c.facts)),
                    state_key(sig.mask(c.reason)),
                    c.outcome,
                    c.id,
                ),
            )
        )


@dataclass(frozen=True)
class Violation:
    case_id: Optional[str]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple
    warnings: tuple

    @property
    def ok(self) -> bool:
        return not self.errors


def _case_violations(sig: Signature, c: Precedent):
    atoms = set(sig.atoms)
    unknown = (c.facts | c.reason) - atoms
    if unknown:
        yield Violation(c.id, f"unknown factors: {sorted(unknown)}")
        return
    if c.outcome not in OUTCOMES:
        yield Violation(c.id, f"outcome must be 0 or 1, got {c.outcome!r}")
        return
    side = set(sig.plt if c.outcome == PLAINTIFF else sig.dfd)
    if not c.reason <= side:
        yield Violation(c.id, "reason polarity mismatch: reason factors must favor the outcome")
    if not c.reason <= c.facts:
        yield Violation(c.id, "reason not contained in facts")


def validate_case_base(cb: CaseBase) -> ValidationReport:
    """Check every case against the domain invariants.

    Violations are data, not exceptions.  Empty reasons are legal but
    suspicious, so they are reported as warnings.
    """
    errors = []
    warnings = []
    ids = {}
    for c in cb.cases:
        if not isinstance(c.id, str) or not c.id:
            errors.append(Violation(c.id, "case id must be a non-empty string"))
        elif c.id in ids:
            errors.append(Violation(c.id, "duplicate case id"))
        else:
            ids[c.id] = c
        errors.extend(_case_violations(cb.signature, c))
        if not c.reason and c.outcome in OUTCOMES and not (c.facts - set(cb.signature.atoms)):
            warnings.append(Violation(c.id, "empty reason forces its outcome very broadly"))
    return ValidationReport(tuple(errors), tuple(warnings))


def is_result_case(sig: Signature, c: Precedent) -> bool:
    """True iff the cited reason is all pro-factors of the situation."""
    side = frozenset(sig.plt if c.outcome == PLAINTIFF else sig.dfd)
    return c.reason == c.facts & side


def case_prefers(sig: Signature, c: Precedent, winner: Reason, loser: Reason) -> bool:
    """The preference a single case derives: the loser must sit inside the
    case's con-side and the case's own reason inside the winner."""
    if winner.polarity != c.outcome or loser.polarity != opposite(c.outcome):
        raise ValueError("winner/loser polarities must match the case outcome and its opposite")
    con_side = frozenset(sig.dfd if c.outcome == PLAINTIFF else sig.plt)
    return loser.factors <= (c.facts & con_side) and c.reason <= winner.factors


def cb_prefers(cb: CaseBase, winner: Reason, loser: Reason) -> bool:
    """Existential lift of case_prefers over the whole case base."""
    if loser.polarity != opposite(winner.polarity):
        raise ValueError("winner and loser must have opposite polarities")
    return any(
        c.outcome == winner.polarity and case_prefers(cb.signature, c, winner, loser)
        for c in cb.cases
    )


def _pair_conflicts(sig: Signature, c0: Precedent, c1: Precedent) -> bool:
    # c0 decided 0, c1 decided 1; the mutual preference collapses to two
    # subset checks between their reasons and each other's con-sides.
    plt = frozenset(sig.plt)
    dfd = frozenset(sig.dfd)
    return c0.reason <= (c1.facts & dfd) and c1.reason <= (c0.facts & plt)


def is_consistent(cb: CaseBase) -> bool:
    """Pairwise consistency criterion over opposite-outcome case pairs."""
    zeros = [c for c in cb.cases if c.outcome == DEFENDANT]
    ones = [c for c in cb.cases if c.outcome == PLAINTIFF]
    return not any(_pair_conflicts(cb.signature, c0, c1) for c0 in zeros for c1 in ones)


def consistency_oracle(cb: CaseBase) -> bool:
    """Brute-force consistency check enumerating every reason pair.

    Independent of is_consistent; used as the test oracle.
    """
    sig = cb.signature
    plt_subsets = [frozenset(sig.names(m)) for m in iter_submasks(sig.plt_mask)]
    dfd_subsets = [frozenset(sig.names(m)) for m in iter_submasks(sig.dfd_mask)]
    for y1 in plt_subsets:
        r1 = Reason(y1, PLAINTIFF)
        for y0 in dfd_subsets:
            r0 = Reason(y0, DEFENDANT)
            if cb_prefers(cb, r1, r0) and cb_prefers(cb, r0, r1):
                return False
    return True


@dataclass(frozen=True)
class ConflictWitness:
    """Two precedents whose reasons are each preferred over the other."""

    case_for_0: Precedent
    case_for_1: Precedent
    reason_for_0: Reason
    reason_for_1: Reason


def conflict_witness(cb: CaseBase) -> Optional[ConflictWitness]:
    """The canonically least conflicting case pair, if any."""
    ordered = cb.sorted_cases()
    zeros = [c for c in ordered if c.outcome == DEFENDANT]
    ones = [c for c in ordered if c.outcome == PLAINTIFF]
    for c0 in zeros:
        for c1 in ones:
            if _pair_conflicts(cb.signature, c0, c1):
                return ConflictWitness(
                    c0, c1, Reason(c0.reason, DEFENDANT), Reason(c1.reason, PLAINTIFF)
                )
    return None


def _forces(sig: Signature, c: Precedent, s: frozenset) -> bool:
    pro = frozenset(sig.plt if c.outcome == PLAINTIFF else sig.dfd)
    con = frozenset(sig.atoms) - pro
    return c.reason <= (s & pro) and (s & con) <= (c.facts & con)


def forcing_cases(cb: CaseBase, s: frozenset, x: int) -> tuple:
    return tuple(c for c in cb.cases if c.outcome == x and _forces(cb.signature, c, s))


def forced_outcome(cb: CaseBase, s: Iterable[str]) -> Val:
    """The outcome the a fortiori constraint dictates for a fact situation:
    1, 0, '?' when nothing applies, or 'conflict' when both sides force."""
    s = frozenset(s)
    unknown = s - set(cb.signature.atoms)
    if unknown:
        raise ValueError(f"unknown factors: {sorted(unknown)}")
    f1 = forcing_cases(cb, s, PLAINTIFF)
    f0 = forcing_cases(cb, s, DEFENDANT)
    if f1 and f0:
        return CONFLICT
    if f1:
        return PLAINTIFF
    if f0:
        return DEFENDANT
    return UNKNOWN


@dataclass(frozen=True)
class UpdateResult:
    accepted: bool
    witness: Optional[ConflictWitness]


def check_update(cb: CaseBase, new_case: Precedent) -> UpdateResult:
    """Precedential-constraint check: accept iff the extended base stays
    consistent."""
    report = validate_case_base(CaseBase.of(cb.signature, (new_case,)))
    if not report.ok:
        raise ValueError(f"malformed case: {report.errors[0].message}")
    extended = cb.with_case(new_case)
    if is_consistent(extended):
        return UpdateResult(True, None)
    return UpdateResult(False, conflict_witness(extended))
