"""Built-in verification suites, a lighter-weight mirror of the test suite.

Each suite prints one PASS/FAIL line; counts are kept modest so the whole
run finishes in seconds.  The pytest suite runs the full-strength versions.
"""

from __future__ import annotations

from caselogic import bridge, explain
from caselogic.casebase import consistency_oracle, is_consistent
from caselogic.formulas import parse_formula, print_formula
from caselogic.models import ClassifierModel, check_axiom_suite, random_formula
from caselogic.sampling import (
    case_bases_upto,
    random_case_base,
    random_consistent_case_base,
    random_full_model,
    small_signature,
)


def _suite_oracle(rng) -> bool:
    sig = small_signature(3, 3)
    return all(
        is_consistent(cb) == consistency_oracle(cb)
        for cb in (random_case_base(sig, rng, 4) for _ in range(150))
    )


def _suite_theorem1(rng) -> bool:
    sig2 = small_signature(1, 1)
    for cb in case_bases_upto(sig2, 2):
        if is_consistent(cb) != bridge.theorem1_decide(cb):
            return False
        if bridge.theorem1_decide(cb) != bridge.brute_force_decide(cb):
            return False
    sig3 = small_signature(2, 1)
    for _ in range(25):
        cb = random_case_base(sig3, rng, 3)
        if not (
            is_consistent(cb)
            == bridge.theorem1_decide(cb)
            == bridge.brute_force_decide(cb)
        ):
            return False
    return True


def _suite_axioms(rng) -> bool:
    report = check_axiom_suite(small_signature(1, 1), rng, instances=8)
    return report.ok


def _suite_props(rng) -> bool:
    sig = small_signature(3, 3)
    for _ in range(30):
        cb = random_consistent_case_base(sig, rng, 4)
        for check in (
            explain.check_prop2,
            explain.check_prop3,
            explain.check_prop4,
            explain.check_prop5,
        ):
            if not check(cb).ok:
                return False
    return True


def _suite_prop6(rng) -> bool:
    sig = small_signature(1, 1)
    from caselogic.sampling import all_precedents

    return all(explain.check_prop6(sig, c).holds for c in all_precedents(sig)[:8])


def _suite_duality(rng) -> bool:
    sig = small_signature(2, 2)
    for _ in range(25):
        model = random_full_model(sig, rng)
        s = rng.randrange(1 << sig.n)
        if not explain.check_mhs_duality(model, s).ok:
            return False
    return True


def _suite_parser(rng) -> bool:
    sig = small_signature(2, 2)
    for _ in range(1500):
        f = random_formula(sig, rng, depth=3)
        if parse_formula(print_formula(f), sig) != f:
            return False
    return True


_SUITES = (
    ("consistency-oracle agreement", _suite_oracle),
    ("consistency/satisfiability equivalence", _suite_theorem1),
    ("axiom schemata", _suite_axioms),
    ("explanation propositions 2-5", _suite_props),
    ("implicant proposition 6", _suite_prop6),
    ("abductive/contrastive hitting-set duality", _suite_duality),
    ("parser round-trip", _suite_parser),
)


def run(rng, emit=print) -> bool:
    all_ok = True
    for name, suite in _SUITES:
        ok = suite(rng)
        all_ok = all_ok and ok
        emit(f"{'PASS' if ok else 'FAIL'}  {name}")
    return all_ok
