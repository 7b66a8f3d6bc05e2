"""Hot-loop kernels: compiled extension when available, pure Python otherwise.

Set CASELOGIC_FORCE_PY_KERNELS=1 to force the pure-Python backend.
"""

import os

from caselogic._kernels import pykernels

DEC_0 = pykernels.DEC_0
DEC_1 = pykernels.DEC_1
DEC_UNK = pykernels.DEC_UNK
DEC_ABSENT = pykernels.DEC_ABSENT
DEC_CONFLICT = pykernels.DEC_CONFLICT

if os.environ.get("CASELOGIC_FORCE_PY_KERNELS"):
    _impl = pykernels
    BACKEND = "python"
else:
    try:
        from caselogic._kernels import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = pykernels
        BACKEND = "python"

canonical_decisions = _impl.canonical_decisions
implicant_holds = _impl.implicant_holds
prime_implicants = _impl.prime_implicants
minimal_implicants_at = _impl.minimal_implicants_at
varies_from = _impl.varies_from
minimal_contrastive_sets = _impl.minimal_contrastive_sets
