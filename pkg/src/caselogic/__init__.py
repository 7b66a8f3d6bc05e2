"""Factor-based precedential constraint meets classifier-logic explanation.

Decide case-base consistency and update admissibility, build the induced
classifier model, evaluate the modal classifier logic over it, and compute
formal explanations (prime implicants, abductive and contrastive
explanations) of case outcomes.
"""

from caselogic._kernels import BACKEND as KERNEL_BACKEND
from caselogic.casebase import (
    CaseBase,
    Precedent,
    Reason,
    check_update,
    forced_outcome,
    is_consistent,
    validate_case_base,
)
from caselogic.signature import (
    CONFLICT,
    DEFENDANT,
    PLAINTIFF,
    UNKNOWN,
    Signature,
    opposite,
)

__version__ = "0.1.0"

__all__ = [
    "CaseBase",
    "Precedent",
    "Reason",
    "Signature",
    "PLAINTIFF",
    "DEFENDANT",
    "UNKNOWN",
    "CONFLICT",
    "KERNEL_BACKEND",
    "check_update",
    "forced_outcome",
    "is_consistent",
    "opposite",
    "validate_case_base",
]
