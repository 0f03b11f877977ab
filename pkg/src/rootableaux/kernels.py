"""Backend selection for the group-scan kernels.

The compiled extension is used when importable; set ROOTABLEAUX_PURE=1 to
force the pure-Python versions.
"""
from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("ROOTABLEAUX_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"

inversion_masks = _impl.inversion_masks
select = _impl.select
group_by_label = _impl.group_by_label
