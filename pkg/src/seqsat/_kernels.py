"""Backend selection for the matcher kernels.

The compiled module is used when it was built; set ``SEQSAT_PURE_PYTHON=1``
to force the reference implementation.
"""

import os

if os.environ.get("SEQSAT_PURE_PYTHON"):
    from ._pykernels import BACKEND, copy_through, find_copy, first_insertion, is_sparse
else:
    try:
        from ._ckernels import BACKEND, copy_through, find_copy, first_insertion, is_sparse
    except ImportError:  # extension not built
        from ._pykernels import BACKEND, copy_through, find_copy, first_insertion, is_sparse

__all__ = ["BACKEND", "copy_through", "find_copy", "first_insertion", "is_sparse"]
