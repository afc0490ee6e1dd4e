# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

"""Random commuting matrix families and evaluation points.

Every matrix of a family is ``S D_j S^-1`` for one shared similarity
``S`` and independent diagonal ``D_j``, so the family commutes up to
rounding. Diagonal entries are drawn from a spectrum region that keeps
away from the integers, so every shift ``P + jI`` used by the catalog
stays invertible.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from lauricella.exceptions import InputError
from lauricella.models.lauricella_kind import Point
from lauricella.models.matrix_core import ComplexMatrix, ToleranceConfig, invert_array

_logger = logging.getLogger(__name__)

MAX_SIMILARITY_COND = 50.0
MAX_SIMILARITY_DRAWS = 100

# points are placed this far inside the requested guard level
POINT_MARGIN = 0.999


@dataclass(frozen=True)
class SpectrumSpec:
    real_range: tuple = (0.6, 2.4)
    imag_range: tuple = (-0.5, 0.5)
    forbid_integer_reals: bool = True
    min_separation: float = 0.1
    min_abs_imag: float = 0.0

    def __post_init__(self):
        if not self.real_intervals():
            raise InputError(
                "The spectrum region %(re)s leaves no admissible real part "
                "at separation %(sep)s"
                % {"re": self.real_range, "sep": self.min_separation}
            )
        if not self.imag_intervals():
            raise InputError(
                "The spectrum region %(im)s has no imaginary part with magnitude "
                ">= %(min)s" % {"im": self.imag_range, "min": self.min_abs_imag}
            )

    def real_intervals(self):
        low, high = self.real_range
        if low > high:
            return []
        if not self.forbid_integer_reals:
            return [(low, high)]
        sep = self.min_separation
        intervals = []
        start = low
        for integer in range(math.floor(low - sep), math.ceil(high + sep) + 1):
            if integer + sep <= start:
                continue
            if integer - sep > start:
                intervals.append((start, min(integer - sep, high)))
            start = max(start, integer + sep)
            if start >= high:
                break
        if start < high:
            intervals.append((start, high))
        return [(a, b) for a, b in intervals if b > a]

    def imag_intervals(self):
        low, high = self.imag_range
        cut = self.min_abs_imag
        if low > high:
            return []
        if cut <= 0:
            return [(low, high)]
        intervals = [(low, min(high, -cut)), (max(low, cut), high)]
        return [(a, b) for a, b in intervals if b > a]


def _uniform_union(rng, intervals, size):
    lengths = np.array([b - a for a, b in intervals])
    if not lengths.sum():
        return np.full(size, intervals[0][0])
    picks = rng.choice(len(intervals), size=size, p=lengths / lengths.sum())
    starts = np.array([intervals[i][0] for i in picks])
    return starts + rng.random(size) * lengths[picks]


@dataclass(frozen=True)
class FamilyDraw:
    similarity: ComplexMatrix
    matrices: tuple
    spectra: tuple
    redraws: int = 0

    def max_commutator(self):
        worst = 0.0
        for i, a in enumerate(self.matrices):
            for b in self.matrices[i + 1:]:
                x, y = a.entries, b.entries
                worst = max(worst, float(np.linalg.norm(x @ y - y @ x, "fro")))
        return worst


def _draw_similarity(rng, dim):
    if dim == 1:
        return np.eye(1, dtype=np.complex128), 0
    for attempt in range(MAX_SIMILARITY_DRAWS):
        noise = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        similarity = np.eye(dim) + 0.5 * noise / math.sqrt(dim)
        if np.linalg.cond(similarity) <= MAX_SIMILARITY_COND:
            return similarity, attempt
    raise InputError(
        "No similarity with condition <= %g found in %d draws"
        % (MAX_SIMILARITY_COND, MAX_SIMILARITY_DRAWS)
    )


def generate_family(dim, count, spec, seed):
    if dim < 1:
        raise InputError("Matrix size must be positive, got %d" % dim)
    rng = np.random.default_rng(seed)
    similarity, redraws = _draw_similarity(rng, dim)
    if redraws:
        _logger.debug("Similarity redrawn %d times (seed %s)", redraws, seed)
    inverse = invert_array(similarity, ToleranceConfig())
    real_parts = spec.real_intervals()
    imag_parts = spec.imag_intervals()
    matrices = []
    spectra = []
    for _j in range(count):
        diagonal = _uniform_union(rng, real_parts, dim) + 1j * _uniform_union(
            rng, imag_parts, dim
        )
        spectra.append(tuple(complex(z) for z in diagonal))
        matrices.append(ComplexMatrix(similarity @ np.diag(diagonal) @ inverse))
    return FamilyDraw(
        ComplexMatrix(similarity), tuple(matrices), tuple(spectra), redraws
    )


def sample_point(kind, radius_scale, seed):
    """Random point on the guard level ``log(0.5 * radius_scale)``, just inside."""
    if not 0 < radius_scale <= 1:
        raise InputError("radius_scale must lie in (0, 1], got %r" % radius_scale)
    rng = np.random.default_rng(seed)
    moduli = 0.2 + 0.8 * rng.random(kind.arity)
    phases = np.exp(2j * np.pi * rng.random(kind.arity))
    direction = moduli * phases
    level = math.log(0.5 * radius_scale)
    factor = POINT_MARGIN * math.exp(level - kind.guard_value(direction))
    return Point(tuple(complex(z) for z in factor * direction))
