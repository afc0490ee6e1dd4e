# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import logging
import warnings
from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator
from scipy.linalg import LinAlgWarning, lu_factor, lu_solve

from ..exceptions import DimensionError, InputError, SingularMatrixError

_logger = logging.getLogger(__name__)

PIVOT_RTOL = 1e-13


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical tolerances shared by every module.

    ``commute_tol`` is relative to the Frobenius norms of the operands,
    ``invert_cond_max`` bounds the estimate ``||A||_F ||A^-1||_F``.
    """

    commute_tol: float = 1e-10
    invert_cond_max: float = 1e12
    residual_tol: float = 1e-10

    def __post_init__(self):
        if self.commute_tol <= 0 or self.invert_cond_max <= 0:
            raise InputError(
                "commute_tol and invert_cond_max must be strictly positive, "
                "got %(ct)r and %(ic)r"
                % {"ct": self.commute_tol, "ic": self.invert_cond_max}
            )
        if self.residual_tol < 0:
            raise InputError(
                "residual_tol must be nonnegative, got %r" % self.residual_tol
            )

    @classmethod
    def for_dim(cls, dim, **overrides):
        """Defaults with the residual tolerance suited to matrix size ``dim``."""
        values = {"residual_tol": 1e-10 if dim == 1 else 1e-8}
        values.update(overrides)
        return cls(**values)


@dataclass(frozen=True, eq=False)
class ComplexMatrix:
    """Square complex matrix, immutable once built."""

    entries: np.ndarray

    def __post_init__(self):
        data = np.array(self.entries, dtype=np.complex128)
        if data.ndim != 2 or data.shape[0] != data.shape[1] or not data.shape[0]:
            raise DimensionError(
                "A matrix must be square and non empty, got shape %s"
                % (data.shape,)
            )
        if not np.all(np.isfinite(data)):
            raise InputError("Matrix entries must be finite.")
        data.setflags(write=False)
        object.__setattr__(self, "entries", data)

    @property
    def dim(self):
        return self.entries.shape[0]

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim, dtype=np.complex128))

    @classmethod
    def zeros(cls, dim):
        return cls(np.zeros((dim, dim), dtype=np.complex128))

    @classmethod
    def scalar(cls, value):
        return cls(np.array([[value]], dtype=np.complex128))

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries
        return self.entries.astype(dtype)

    def __repr__(self):
        return "ComplexMatrix(dim=%d, entries=%s)" % (self.dim, self.entries.tolist())

    def allclose(self, other, atol=1e-12):
        return self.dim == other.dim and np.allclose(
            self.entries, other.entries, rtol=0.0, atol=atol
        )

    def to_json(self):
        return MatrixPayload.from_matrix(self).model_dump()

    @classmethod
    def from_json(cls, data):
        return MatrixPayload.model_validate(data).to_matrix()


class MatrixPayload(BaseModel):
    """JSON form ``{"dim": r, "entries": [[re, im], ...]}``, row major."""

    model_config = ConfigDict(extra="forbid")

    dim: PositiveInt
    entries: list[tuple[float, float]] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_square(self):
        if len(self.entries) != self.dim * self.dim:
            raise ValueError(
                "entries holds %d values, a %dx%d matrix needs %d"
                % (len(self.entries), self.dim, self.dim, self.dim * self.dim)
            )
        return self

    @classmethod
    def from_matrix(cls, matrix):
        flat = matrix.entries.reshape(-1)
        return cls(
            dim=matrix.dim,
            entries=[(float(z.real), float(z.imag)) for z in flat],
        )

    def to_matrix(self):
        values = np.array([complex(re, im) for re, im in self.entries])
        return ComplexMatrix(values.reshape(self.dim, self.dim))


def _check_dims(a, b, operation):
    if a.dim != b.dim:
        raise DimensionError(
            "%(op)s needs matrices of equal size, got %(ra)d and %(rb)d"
            % {"op": operation, "ra": a.dim, "rb": b.dim}
        )


def add(a, b):
    _check_dims(a, b, "add")
    return ComplexMatrix(a.entries + b.entries)


def matmul(a, b):
    _check_dims(a, b, "matmul")
    return ComplexMatrix(a.entries @ b.entries)


def add_shift(a, n):
    """Return ``A + nI``; ``n`` may be negative."""
    shifted = np.array(a.entries)
    shifted[np.diag_indices(a.dim)] += n
    return ComplexMatrix(shifted)


def frobenius_norm(a):
    return float(np.linalg.norm(np.asarray(a), "fro"))


def invert_array(values, tol, label=None):
    """Invert a raw ndarray through LU with partial pivoting.

    Raises SingularMatrixError when a pivot falls below ``1e-13 * max|entry|``
    or when the condition estimate exceeds ``tol.invert_cond_max``.
    """
    scale = np.max(np.abs(values)) if values.size else 0.0
    what = label or "matrix"
    if not scale:
        raise SingularMatrixError("The %s is the zero matrix." % what, label)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, piv = lu_factor(values, check_finite=False)
    smallest = np.min(np.abs(np.diag(lu)))
    if smallest <= PIVOT_RTOL * scale:
        raise SingularMatrixError(
            "The %(what)s is singular to working precision "
            "(pivot %(piv).3e against scale %(scale).3e)."
            % {"what": what, "piv": smallest, "scale": scale},
            label,
        )
    result = lu_solve((lu, piv), np.eye(values.shape[0], dtype=values.dtype))
    cond = np.linalg.norm(values, "fro") * np.linalg.norm(result, "fro")
    if not np.isfinite(cond) or cond > tol.invert_cond_max:
        raise SingularMatrixError(
            "The %(what)s is ill conditioned (estimate %(cond).3e > %(max).3e)."
            % {"what": what, "cond": cond, "max": tol.invert_cond_max},
            label,
        )
    return result


def inverse(a, tol):
    return ComplexMatrix(invert_array(a.entries, tol))


def commutes(a, b, tol):
    _check_dims(a, b, "commutes")
    x, y = a.entries, b.entries
    gap = np.linalg.norm(x @ y - y @ x, "fro")
    bound = tol.commute_tol * (
        1.0 + np.linalg.norm(x, "fro") * np.linalg.norm(y, "fro")
    )
    return bool(gap <= bound)
