# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

"""Shared fixtures data and a naive scalar reference for the series."""

from itertools import product
from math import factorial, prod

import numpy as np
from scipy.special import poch

from lauricella.models.lauricella_kind import LauricellaKind, ParameterSet
from lauricella.models.matrix_core import ComplexMatrix

# well inside every guard region, including the GC one
SMALL_POINT = (0.04, -0.03, 0.02 + 0.02j)

A_VALUES = (0.75, 1.35, 0.55)
B_VALUES = (1.15, 0.85, 1.6)
C_VALUES = (1.45 + 0.25j, 2.3 + 0.25j, 1.7 + 0.25j)


def scalar_params(kind):
    """Distinct non integer scalars for every slot of ``kind``."""
    return ParameterSet.scalars(
        A_VALUES[: kind.group_size("a")] + (0.95,) * max(0, kind.group_size("a") - 3),
        B_VALUES[: kind.group_size("b")] + (1.25,) * max(0, kind.group_size("b") - 3),
        C_VALUES[: kind.group_size("c")] + (2.05,) * max(0, kind.group_size("c") - 3),
    )


def commuting_params(kind, seed, dim=2):
    """Simultaneously diagonalizable parameters with spectra in (0.6, 2.4)."""
    rng = np.random.default_rng(seed)
    similarity = np.eye(dim) + 0.3 * rng.standard_normal((dim, dim))
    inverse = np.linalg.inv(similarity)
    matrices = {}
    for slot in kind.slots:
        spectrum = rng.uniform(0.6, 2.4, dim) + 1j * rng.uniform(0.2, 0.5, dim)
        matrices[slot.name] = ComplexMatrix(similarity @ np.diag(spectrum) @ inverse)
    return ParameterSet.from_named(kind, matrices)


def _total(m, *axes):
    return sum(m[axis - 1] for axis in axes)


# coefficient of prod x_i^m_i / m_i! for the three variable kinds,
# written out from the defining series
THREE_VARIABLE_COEFFICIENTS = {
    "F3": lambda a, b, c, m: (
        poch(a[0], m[0]) * poch(a[1], _total(m, 2, 3))
        * poch(b[0], _total(m, 1, 3)) * poch(b[1], m[1])
        / (poch(c[0], m[0]) * poch(c[1], m[1]) * poch(c[2], m[2]))
    ),
    "F4": lambda a, b, c, m: (
        poch(a[0], sum(m)) * poch(b[0], m[0]) * poch(b[1], _total(m, 2, 3))
        / (poch(c[0], m[0]) * poch(c[1], m[1]) * poch(c[2], m[2]))
    ),
    "F6": lambda a, b, c, m: (
        poch(a[0], m[0]) * poch(a[1], m[1]) * poch(a[2], m[2])
        * poch(b[0], _total(m, 1, 3)) * poch(b[1], m[1])
        / (poch(c[0], m[0]) * poch(c[1], _total(m, 2, 3)))
    ),
    "F7": lambda a, b, c, m: (
        poch(a[0], m[0]) * poch(a[1], _total(m, 2, 3))
        * poch(b[0], m[0]) * poch(b[1], m[1]) * poch(b[2], m[2])
        / poch(c[0], sum(m))
    ),
    "F8": lambda a, b, c, m: (
        poch(a[0], sum(m)) * poch(b[0], m[0]) * poch(b[1], m[1]) * poch(b[2], m[2])
        / (poch(c[0], m[0]) * poch(c[1], _total(m, 2, 3)))
    ),
    "F10": lambda a, b, c, m: (
        poch(a[0], _total(m, 1, 3)) * poch(a[1], m[1])
        * poch(b[0], _total(m, 1, 3)) * poch(b[1], m[1])
        / (poch(c[0], m[0]) * poch(c[1], _total(m, 2, 3)))
    ),
    "F11": lambda a, b, c, m: (
        poch(a[0], m[0]) * poch(a[1], _total(m, 2, 3))
        * poch(b[0], _total(m, 1, 3)) * poch(b[1], m[1])
        / (poch(c[0], m[0]) * poch(c[1], _total(m, 2, 3)))
    ),
    "F12": lambda a, b, c, m: (
        poch(a[0], _total(m, 1, 3)) * poch(a[1], m[1])
        * poch(b[0], _total(m, 1, 2)) * poch(b[1], m[2])
        / (poch(c[0], m[0]) * poch(c[1], _total(m, 2, 3)))
    ),
    "F13": lambda a, b, c, m: (
        poch(a[0], m[0]) * poch(a[1], _total(m, 2, 3))
        * poch(b[0], _total(m, 1, 3)) * poch(b[1], m[1])
        / poch(c[0], sum(m))
    ),
    "F14": lambda a, b, c, m: (
        poch(a[0], sum(m)) * poch(b[0], _total(m, 1, 3)) * poch(b[1], m[1])
        / (poch(c[0], m[0]) * poch(c[1], _total(m, 2, 3)))
    ),
}


def _generic_coefficient(tag, a, b, c, m):
    total = sum(m)
    if tag == "GA":
        return poch(a[0], total) * prod(
            poch(bi, mi) / poch(ci, mi) for bi, ci, mi in zip(b, c, m)
        )
    if tag == "GB":
        return prod(poch(ai, mi) * poch(bi, mi) for ai, bi, mi in zip(a, b, m)) / poch(
            c[0], total
        )
    if tag == "GC":
        return poch(a[0], total) * poch(b[0], total) / prod(
            poch(ci, mi) for ci, mi in zip(c, m)
        )
    return poch(a[0], total) * prod(poch(bi, mi) for bi, mi in zip(b, m)) / poch(
        c[0], total
    )


def scalar_series(tag, a, b, c, x, degree=40):
    """Sum the scalar series term by term up to total degree ``degree``.

    Parameters must be real; the point may be complex.
    """
    kind = LauricellaKind(tag, arity=len(x))
    if kind.is_generic:
        def coefficient(m):
            return _generic_coefficient(kind.tag, a, b, c, m)
    else:
        def coefficient(m):
            return THREE_VARIABLE_COEFFICIENTS[kind.tag](a, b, c, m)
    total = 0j
    for m in product(range(degree + 1), repeat=len(x)):
        if sum(m) > degree:
            continue
        weight = prod(z**mi / factorial(mi) for z, mi in zip(x, m))
        total += coefficient(m) * weight
    return total
