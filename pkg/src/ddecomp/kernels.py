"""Backend selection for the big-integer polynomial kernels.

The compiled extension is used when it imports; set ``DDECOMP_PURE=1`` to
force the pure-Python implementation.
"""

import os

if os.environ.get("DDECOMP_PURE"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
strip = _impl.strip
mul = _impl.mul
taylor_shift1 = _impl.taylor_shift1
sign_variations = _impl.sign_variations
descartes_01 = _impl.descartes_01
halve = _impl.halve
eval_hom = _impl.eval_hom
prem = _impl.prem
bareiss_det = _impl.bareiss_det
line_restrict = _impl.line_restrict

__all__ = [
    "BACKEND", "strip", "mul", "taylor_shift1", "sign_variations",
    "descartes_01", "halve", "eval_hom", "prem", "bareiss_det",
    "line_restrict",
]
