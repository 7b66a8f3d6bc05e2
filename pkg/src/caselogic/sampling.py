"""Random and exhaustive generators for tests and the self-test suite."""

from __future__ import annotations

from typing import Iterator, List

from caselogic.casebase import CaseBase, Precedent, is_consistent
from caselogic.models import ClassifierModel
from caselogic.signature import DEFENDANT, PLAINTIFF, VALUES, Signature, iter_submasks


def small_signature(n_plt: int, n_dfd: int) -> Signature:
    return Signature(
        tuple(f"p{i + 1}" for i in range(n_plt)),
        tuple(f"d{i + 1}" for i in range(n_dfd)),
    )


def all_precedents(sig: Signature, prefix: str = "c") -> List[Precedent]:
    """Every well-formed precedent over the signature, canonically ordered."""
    out = []
    k = 0
    for facts_mask in sig.states():
        for x in (PLAINTIFF, DEFENDANT):
            pro = facts_mask & sig.side_mask(x)
            for reason_mask in iter_submasks(pro):
                k += 1
                out.append(
                    Precedent(
                        f"{prefix}{k}",
                        sig.name_set(facts_mask),
                        sig.name_set(reason_mask),
                        x,
                    )
                )
    return out


def random_precedent(sig: Signature, rng, case_id: str) -> Precedent:
    facts_mask = rng.randrange(1 << sig.n)
    x = rng.choice((PLAINTIFF, DEFENDANT))
    pro = facts_mask & sig.side_mask(x)
    pro_bits = [i for i in range(sig.n) if pro >> i & 1]
    reason_mask = 0
    for i in pro_bits:
        if rng.random() < 0.6:
            reason_mask |= 1 << i
    return Precedent(case_id, sig.name_set(facts_mask), sig.name_set(reason_mask), x)


def random_result_case(sig: Signature, rng, case_id: str) -> Precedent:
    facts_mask = rng.randrange(1 << sig.n)
    x = rng.choice((PLAINTIFF, DEFENDANT))
    pro = facts_mask & sig.side_mask(x)
    return Precedent(case_id, sig.name_set(facts_mask), sig.name_set(pro), x)


def random_case_base(sig: Signature, rng, max_cases: int = 4) -> CaseBase:
    n = rng.randint(0, max_cases)
    return CaseBase.of(
        sig, [random_precedent(sig, rng, f"c{i + 1}") for i in range(n)]
    )


def random_consistent_case_base(
    sig: Signature, rng, max_cases: int = 4, max_tries: int = 200
) -> CaseBase:
    """Rejection-sampled consistent case base (small scale keeps this cheap)."""
    for _ in range(max_tries):
        cb = random_case_base(sig, rng, max_cases)
        if is_consistent(cb):
            return cb
    raise RuntimeError("could not sample a consistent case base")


def random_full_model(sig: Signature, rng) -> ClassifierModel:
    """A full-state model with an arbitrary decision function."""
    return ClassifierModel.full(sig, lambda s: rng.choice(VALUES))


def random_model(sig: Signature, rng) -> ClassifierModel:
    """A model with a random non-empty state set."""
    while True:
        states = [s for s in sig.states() if rng.random() < 0.6]
        if states:
            break
    return ClassifierModel(
        sig, tuple((s, rng.choice(VALUES)) for s in sorted(states))
    )


def case_bases_upto(sig: Signature, max_cases: int) -> Iterator[CaseBase]:
    """Every case base with at most max_cases precedents (cases chosen from
    the full precedent universe, unordered, without repetition)."""
    import itertools

    universe = all_precedents(sig)
    for k in range(max_cases + 1):
        for combo in itertools.combinations(universe, k):
            yield CaseBase.of(sig, combo)
