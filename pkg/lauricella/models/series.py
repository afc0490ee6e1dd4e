# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..exceptions import DimensionError, InputError, SingularMatrixError
from .lauricella_kind import MultiIndex, Point
from .matrix_core import ComplexMatrix, MatrixPayload, invert_array
from .pochhammer import shifted

_logger = logging.getLogger(__name__)

# consecutive negligible shells needed before the sum is declared converged
QUIET_SHELLS = 2


@dataclass(frozen=True)
class SeriesConfig:
    max_degree: int = 64
    term_tol: float = 1e-14
    domain_guard: float = 1.0

    def __post_init__(self):
        if self.max_degree < 1:
            raise InputError("max_degree must be positive, got %d" % self.max_degree)
        if self.term_tol < 0:
            raise InputError("term_tol must be nonnegative, got %r" % self.term_tol)
        if not 0 < self.domain_guard <= 1:
            raise InputError(
                "domain_guard must lie in (0, 1], got %r" % self.domain_guard
            )


@dataclass(frozen=True)
class SeriesResult:
    """Truncated sum and its convergence bookkeeping.

    ``last_shell_norm`` is the Frobenius norm of the last computed shell
    relative to ``max(1, ||value||_F)``.
    """

    value: ComplexMatrix
    last_shell_norm: float
    shells_used: int
    converged: bool

    def to_json(self):
        return {
            "value": MatrixPayload.from_matrix(self.value).model_dump(),
            "last_shell_norm": self.last_shell_norm,
            "shells_used": self.shells_used,
            "converged": self.converged,
        }


@lru_cache(maxsize=512)
def total_degree_shell(k, degree):
    """All multi-indices of ``k`` entries summing to ``degree``, as rows."""
    if k == 1:
        return np.array([[degree]], dtype=np.intp)
    rows = []
    for first in range(degree, -1, -1):
        rest = total_degree_shell(k - 1, degree - first)
        rows.append(np.column_stack([np.full(len(rest), first), rest]))
    shell = np.vstack(rows)
    shell.setflags(write=False)
    return shell


class _FactorTables:
    """Per-call Pochhammer cache, one table per parameter slot.

    Row ``L`` of a numerator table holds ``(P)_L``; row ``L`` of a
    denominator table holds the inverse ``(Q)_L^-1``. Tables grow with
    the degree of the shells being summed.
    """

    def __init__(self, kind, params, tol, offsets=None):
        self.kind = kind
        self.tol = tol
        self.offsets = offsets or {}
        self.dim = params.dim
        self.matrices = [params.get(kind, slot.name).entries for slot in kind.slots]
        self.tables = []
        for slot in kind.slots:
            table = np.empty((1, self.dim, self.dim), dtype=np.complex128)
            table[0] = np.eye(self.dim)
            self.tables.append(table)
        self.filled = 0
        self.membership = np.zeros((kind.arity, len(kind.slots)), dtype=np.intp)
        for s, slot in enumerate(kind.slots):
            for i in slot.index_set:
                self.membership[i - 1, s] = 1

    def extend(self, degree):
        if degree <= self.filled:
            return
        for s, slot in enumerate(self.kind.slots):
            table = np.empty((degree + 1, self.dim, self.dim), dtype=np.complex128)
            table[: self.filled + 1] = self.tables[s][: self.filled + 1]
            matrix = self.matrices[s]
            for order in range(self.filled, degree):
                step = shifted(matrix, order)
                if slot.is_denominator:
                    net = order + self.offsets.get(slot.name, 0)
                    label = "%s%+dI" % (slot.name, net) if net else slot.name
                    inverse_step = invert_array(step, self.tol, label)
                    table[order + 1] = inverse_step @ table[order]
                else:
                    table[order + 1] = table[order] @ step
            self.tables[s] = table
        self.filled = degree

    def coefficients(self, shell):
        orders = shell @ self.membership
        product = self.tables[0][orders[:, 0]]
        for s in range(1, len(self.tables)):
            product = product @ self.tables[s][orders[:, s]]
        return product


def _prepare(kind, params, coords_len):
    params.validate(kind)
    if coords_len != kind.arity:
        raise DimensionError(
            "%(kind)s takes %(k)d variables, got %(n)d"
            % {"kind": kind, "k": kind.arity, "n": coords_len}
        )


def coefficient(kind, params, m, tol):
    """Matrix coefficient of ``prod x_i^{m_i} / m_i!`` in the defining series."""
    if not isinstance(m, MultiIndex):
        m = MultiIndex(m)
    _prepare(kind, params, len(m.m))
    tables = _FactorTables(kind, params, tol)
    tables.extend(m.degree)
    shell = np.array([m.m], dtype=np.intp)
    return ComplexMatrix(tables.coefficients(shell)[0])


def _power_table(coords, max_degree):
    table = np.ones((len(coords), max_degree + 1), dtype=np.complex128)
    for i, z in enumerate(coords):
        for m in range(1, max_degree + 1):
            table[i, m] = table[i, m - 1] * z / m
    return table


def evaluate(kind, params, x, cfg, tol, offsets=None):
    if not isinstance(x, Point):
        x = Point(x)
    _prepare(kind, params, len(x))
    kind.check_guard(x.coords, cfg.domain_guard)
    tables = _FactorTables(kind, params, tol, offsets)
    powers = _power_table(x.coords, cfg.max_degree)
    axes = np.arange(kind.arity)[None, :]
    value = np.eye(params.dim, dtype=np.complex128)
    shells_used = 1
    quiet = 0
    rel_norm = 0.0
    converged = False
    for degree in range(1, cfg.max_degree + 1):
        tables.extend(degree)
        shell = total_degree_shell(kind.arity, degree)
        weights = np.prod(powers[axes, shell], axis=1)
        contribution = np.tensordot(weights, tables.coefficients(shell), axes=1)
        value = value + contribution
        rel_norm = float(
            np.linalg.norm(contribution, "fro")
            / max(1.0, np.linalg.norm(value, "fro"))
        )
        if rel_norm <= cfg.term_tol:
            quiet += 1
            if quiet >= QUIET_SHELLS:
                converged = True
                break
        else:
            quiet = 0
            shells_used = degree + 1
    # a single quiet shell at the degree cap still meets the tolerance
    converged = converged or rel_norm <= cfg.term_tol
    if not np.all(np.isfinite(value)):
        raise SingularMatrixError(
            "The %s series overflowed at x = %s." % (kind, list(x.coords))
        )
    if not converged:
        _logger.warning(
            "%s series did not converge within %d shells (last shell %.3e)",
            kind,
            cfg.max_degree,
            rel_norm,
        )
    else:
        _logger.debug("%s series converged after %d shells", kind, shells_used)
    return SeriesResult(ComplexMatrix(value), rel_norm, shells_used, converged)


def evaluate_shifted(kind, params, shifts, x, cfg, tol):
    """Evaluate with each named parameter ``P`` replaced by ``P + nI``."""
    shifts = [(name, int(amount)) for name, amount in shifts]
    for name, _amount in shifts:
        kind.slot(name)
    if not any(amount for _name, amount in shifts):
        return evaluate(kind, params, x, cfg, tol)
    moved = params.validate(kind).with_shifts(kind, shifts)
    labels = {name: "%s%+dI" % (name, amount) for name, amount in shifts if amount}
    try:
        return evaluate(kind, moved, x, cfg, tol, offsets=dict(shifts))
    except SingularMatrixError as err:
        raise SingularMatrixError(
            "Shifted parameter set %(shifts)s is not admissible: %(err)s"
            % {"shifts": labels and ", ".join(labels.values()), "err": err},
            err.parameter,
        ) from err
