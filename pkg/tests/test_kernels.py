"""Compiled and pure-Python kernels must be drop-in equivalents."""

import pytest

from caselogic._kernels import BACKEND, pykernels
from caselogic.bridge import _case_arrays
from caselogic.sampling import (
    random_case_base,
    random_full_model,
    random_model,
    small_signature,
)

try:
    from caselogic._kernels import _ckernels
except ImportError:
    _ckernels = None

needs_compiled = pytest.mark.skipif(
    _ckernels is None, reason="compiled kernels not built"
)


def test_backend_is_reported():
    assert BACKEND in ("compiled", "python")


@needs_compiled
def test_decision_codes_match():
    for name in ("DEC_0", "DEC_1", "DEC_UNK", "DEC_ABSENT", "DEC_CONFLICT"):
        assert getattr(pykernels, name) == getattr(_ckernels, name)


@needs_compiled
def test_canonical_decisions_agree(rng):
    sig = small_signature(3, 3)
    for _ in range(100):
        cb = random_case_base(sig, rng, 5)
        args = (sig.n,) + _case_arrays(cb)
        assert bytes(pykernels.canonical_decisions(*args)) == bytes(
            _ckernels.canonical_decisions(*args)
        )


@needs_compiled
def test_query_kernels_agree(rng):
    sig = small_signature(2, 2)
    for _ in range(60):
        model = random_model(sig, rng)
        codes = model.decision_codes()
        n = sig.n
        for code in (pykernels.DEC_0, pykernels.DEC_1, pykernels.DEC_UNK):
            assert sorted(pykernels.prime_implicants(codes, n, code)) == sorted(
                _ckernels.prime_implicants(codes, n, code)
            )
            for s in model.states:
                assert sorted(
                    pykernels.minimal_implicants_at(codes, n, s, code)
                ) == sorted(_ckernels.minimal_implicants_at(codes, n, s, code))
                assert sorted(
                    pykernels.minimal_contrastive_sets(codes, n, s, code)
                ) == sorted(_ckernels.minimal_contrastive_sets(codes, n, s, code))
                for mask in range(1 << n):
                    assert pykernels.varies_from(
                        codes, n, s, mask, code
                    ) == _ckernels.varies_from(codes, n, s, mask, code)
            for pos in range(1 << n):
                neg = (~pos) & sig.full_mask
                assert pykernels.implicant_holds(
                    codes, n, pos, neg, code
                ) == _ckernels.implicant_holds(codes, n, pos, neg, code)


@needs_compiled
def test_full_model_kernels_agree(rng):
    sig = small_signature(2, 1)
    for _ in range(40):
        model = random_full_model(sig, rng)
        codes = model.decision_codes()
        for code in (pykernels.DEC_0, pykernels.DEC_1, pykernels.DEC_UNK):
            assert sorted(
                pykernels.prime_implicants(codes, sig.n, code)
            ) == sorted(_ckernels.prime_implicants(codes, sig.n, code))
