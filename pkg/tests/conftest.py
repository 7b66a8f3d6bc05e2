"""Shared fixtures: the running example and small helpers."""

import random

import pytest

from caselogic import bridge
from caselogic.casebase import CaseBase, Precedent
from caselogic.models import ClassifierModel
from caselogic.signature import Signature


@pytest.fixture
def sig_ex():
    return Signature(("pi1", "pi2", "pi3"), ("delta1", "delta2", "delta3"))


@pytest.fixture
def cb_ex(sig_ex):
    return CaseBase.of(
        sig_ex,
        (
            Precedent("c1", {"pi1", "pi3", "delta1", "delta3"}, {"pi1"}, 1),
            Precedent("c2", {"pi2", "delta1", "delta3"}, {"delta3"}, 0),
        ),
    )


@pytest.fixture
def model_ex(cb_ex):
    model = bridge.build_canonical_model(cb_ex)
    assert isinstance(model, ClassifierModel)
    return model


@pytest.fixture
def rng():
    return random.Random(20240817)
