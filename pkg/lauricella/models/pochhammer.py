# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

"""Matrix Pochhammer symbols.

``(A)_0 = I`` and ``(A)_n = A (A + I) ... (A + (n - 1) I)``, the factors
multiplied in ascending order from the left.
"""

import logging

import numpy as np

from ..exceptions import InputError
from .matrix_core import ComplexMatrix, invert_array

_logger = logging.getLogger(__name__)


def _check_order(n):
    if n < 0:
        raise InputError("Pochhammer order must be nonnegative, got %d" % n)


def shifted(values, j):
    out = np.array(values)
    out[np.diag_indices(values.shape[0])] += j
    return out


def pochhammer(a, n):
    _check_order(n)
    product = np.eye(a.dim, dtype=np.complex128)
    for j in range(n):
        product = product @ shifted(a.entries, j)
    return ComplexMatrix(product)


def pochhammer_inv(c, n, tol, label=None):
    """Inverse of ``(C)_n`` as ``(C+(n-1)I)^-1 ... (C+I)^-1 C^-1``."""
    _check_order(n)
    product = np.eye(c.dim, dtype=np.complex128)
    name = label or "C"
    for j in range(n):
        factor = invert_array(
            shifted(c.entries, j), tol, label="%s%+dI" % (name, j) if j else name
        )
        product = factor @ product
    return ComplexMatrix(product)


def poch_step(p, a, n):
    """Advance ``P = (A)_n`` to ``(A)_{n+1} = (A)_n (A + nI)``."""
    _check_order(n)
    return ComplexMatrix(p.entries @ shifted(a.entries, n))
