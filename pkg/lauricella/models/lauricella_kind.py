# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import logging
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from ..exceptions import DimensionError, DomainGuardError, InputError
from .matrix_core import ComplexMatrix, add_shift

_logger = logging.getLogger(__name__)

GENERIC_TAGS = ("GA", "GB", "GC", "GD")

# three variable functions that coincide with a generic one at arity 3
GENERIC_ALIASES = {"F1": "GA", "F2": "GB", "F5": "GC", "F9": "GD"}

# Index sets of the three variable kinds, in the printed order of the
# defining series: numerator parameters first, then denominator ones.
# Each tuple entry is (slot name, group, variables the Pochhammer index sums).
THREE_VARIABLE_SIGNATURES = {
    "F3": (
        ("A_1", "a", (1,)),
        ("A_2", "a", (2, 3)),
        ("B_1", "b", (1, 3)),
        ("B_2", "b", (2,)),
        ("C_1", "c", (1,)),
        ("C_2", "c", (2,)),
        ("C_3", "c", (3,)),
    ),
    "F4": (
        ("A_1", "a", (1, 2, 3)),
        ("B_1", "b", (1,)),
        ("B_2", "b", (2, 3)),
        ("C_1", "c", (1,)),
        ("C_2", "c", (2,)),
        ("C_3", "c", (3,)),
    ),
    "F6": (
        ("A_1", "a", (1,)),
        ("A_2", "a", (2,)),
        ("A_3", "a", (3,)),
        ("B_1", "b", (1, 3)),
        ("B_2", "b", (2,)),
        ("C_1", "c", (1,)),
        ("C_2", "c", (2, 3)),
    ),
    "F7": (
        ("A_1", "a", (1,)),
        ("A_2", "a", (2, 3)),
        ("B_1", "b", (1,)),
        ("B_2", "b", (2,)),
        ("B_3", "b", (3,)),
        ("C_1", "c", (1, 2, 3)),
    ),
    "F8": (
        ("A_1", "a", (1, 2, 3)),
        ("B_1", "b", (1,)),
        ("B_2", "b", (2,)),
        ("B_3", "b", (3,)),
        ("C_1", "c", (1,)),
        ("C_2", "c", (2, 3)),
    ),
    "F10": (
        ("A_1", "a", (1, 3)),
        ("A_2", "a", (2,)),
        ("B_1", "b", (1, 3)),
        ("B_2", "b", (2,)),
        ("C_1", "c", (1,)),
        ("C_2", "c", (2, 3)),
    ),
    "F11": (
        ("A_1", "a", (1,)),
        ("A_2", "a", (2, 3)),
        ("B_1", "b", (1, 3)),
        ("B_2", "b", (2,)),
        ("C_1", "c", (1,)),
        ("C_2", "c", (2, 3)),
    ),
    "F12": (
        ("A_1", "a", (1, 3)),
        ("A_2", "a", (2,)),
        ("B_1", "b", (1, 2)),
        ("B_2", "b", (3,)),
        ("C_1", "c", (1,)),
        ("C_2", "c", (2, 3)),
    ),
    "F13": (
        ("A_1", "a", (1,)),
        ("A_2", "a", (2, 3)),
        ("B_1", "b", (1, 3)),
        ("B_2", "b", (2,)),
        ("C_1", "c", (1, 2, 3)),
    ),
    "F14": (
        ("A_1", "a", (1, 2, 3)),
        ("B_1", "b", (1, 3)),
        ("B_2", "b", (2,)),
        ("C_1", "c", (1,)),
        ("C_2", "c", (2, 3)),
    ),
}

KIND_TAGS = GENERIC_TAGS + tuple(
    sorted(
        set(THREE_VARIABLE_SIGNATURES) | set(GENERIC_ALIASES),
        key=lambda tag: int(tag[1:]),
    )
)

# simplex resolution of the numerical guard functional
GUARD_GRID = 240


@dataclass(frozen=True)
class Slot:
    """One parameter position of a kind's signature."""

    name: str
    group: str
    position: int
    index_set: frozenset

    @property
    def is_denominator(self):
        return self.group == "c"


def _generic_signature(tag, k):
    every = tuple(range(1, k + 1))
    indexed = [((i,), "_%d" % i) for i in every]
    if tag == "GA":
        rows = [("A", "a", every)]
        rows += [("B" + sfx, "b", ix) for ix, sfx in indexed]
        rows += [("C" + sfx, "c", ix) for ix, sfx in indexed]
    elif tag == "GB":
        rows = [("A" + sfx, "a", ix) for ix, sfx in indexed]
        rows += [("B" + sfx, "b", ix) for ix, sfx in indexed]
        rows += [("C", "c", every)]
    elif tag == "GC":
        rows = [("A", "a", every), ("B", "b", every)]
        rows += [("C" + sfx, "c", ix) for ix, sfx in indexed]
    else:
        rows = [("A", "a", every)]
        rows += [("B" + sfx, "b", ix) for ix, sfx in indexed]
        rows += [("C", "c", every)]
    return tuple(rows)


@dataclass(frozen=True)
class LauricellaKind:
    """Function kind and arity.

    The generic kinds GA, GB, GC and GD take any arity ``k >= 1``; the
    three variable kinds F1 ... F14 have arity 3. F1, F2, F5 and F9 are
    stored as their generic counterpart so both names share one code path.
    """

    tag: str
    arity: int = 3

    def __post_init__(self):
        tag = self.tag.upper()
        if tag in GENERIC_ALIASES:
            tag = GENERIC_ALIASES[tag]
            if self.arity != 3:
                raise InputError("%s is a three variable function" % self.tag)
        if tag not in GENERIC_TAGS and tag not in THREE_VARIABLE_SIGNATURES:
            raise InputError(
                "Unknown function kind %(tag)r, expected one of %(known)s"
                % {"tag": self.tag, "known": ", ".join(KIND_TAGS)}
            )
        if tag in THREE_VARIABLE_SIGNATURES and self.arity != 3:
            raise InputError("%s is a three variable function" % tag)
        if self.arity < 1:
            raise InputError("Arity must be at least 1, got %d" % self.arity)
        object.__setattr__(self, "tag", tag)

    def __str__(self):
        if self.is_generic:
            return "%s(k=%d)" % (self.tag, self.arity)
        return self.tag

    @property
    def is_generic(self):
        return self.tag in GENERIC_TAGS

    @cached_property
    def slots(self):
        if self.is_generic:
            rows = _generic_signature(self.tag, self.arity)
        else:
            rows = THREE_VARIABLE_SIGNATURES[self.tag]
        counters = {"a": 0, "b": 0, "c": 0}
        slots = []
        for name, group, index_set in rows:
            slots.append(Slot(name, group, counters[group], frozenset(index_set)))
            counters[group] += 1
        return tuple(slots)

    @cached_property
    def slot_map(self):
        return {slot.name: slot for slot in self.slots}

    def slot(self, name):
        try:
            return self.slot_map[name]
        except KeyError:
            raise InputError(
                "%(kind)s has no parameter %(name)r (parameters: %(known)s)"
                % {
                    "kind": self,
                    "name": name,
                    "known": ", ".join(self.slot_map),
                }
            ) from None

    def group_size(self, group):
        return sum(1 for slot in self.slots if slot.group == group)

    def guard_value(self, coords):
        """Logarithmic growth rate of the scalar series at ``coords``.

        The series converges absolutely when the value is negative; a
        point is accepted when it does not exceed ``log(0.5 * guard)``.
        The functional is homogeneous: scaling every coordinate by ``t``
        adds ``log t``.
        """
        magnitudes = np.abs(np.asarray(coords, dtype=np.complex128))
        if not np.any(magnitudes):
            return -math.inf
        if self.tag in ("GB", "GD"):
            return math.log(magnitudes.max())
        if self.tag == "GA":
            return math.log(magnitudes.sum())
        if self.tag == "GC":
            return 2.0 * math.log(np.sqrt(magnitudes).sum())
        safe = np.where(magnitudes > 0, magnitudes, 1.0)
        logs = np.where(magnitudes > 0, np.log(safe), -1e6)
        weights, offsets = _guard_grid(self.tag)
        return float(np.max(weights @ logs + offsets))

    def guard_limit(self, domain_guard):
        return math.log(0.5 * domain_guard)

    def check_guard(self, coords, domain_guard):
        value = self.guard_value(coords)
        if value > self.guard_limit(domain_guard):
            raise DomainGuardError(
                "Point %(x)s lies outside the guard region of %(kind)s "
                "(growth %(value).4f > %(limit).4f)."
                % {
                    "x": list(coords),
                    "kind": self,
                    "value": value,
                    "limit": self.guard_limit(domain_guard),
                }
            )


def _xlogx(values):
    safe = np.where(values > 0, values, 1.0)
    return np.where(values > 0, values * np.log(safe), 0.0)


@lru_cache(maxsize=None)
def _guard_grid(tag):
    kind = LauricellaKind(tag)
    steps = GUARD_GRID
    points = [
        (i, j, steps - i - j) for i in range(steps + 1) for j in range(steps + 1 - i)
    ]
    weights = np.array(points, dtype=float) / steps
    offsets = -_xlogx(weights).sum(axis=1)
    for slot in kind.slots:
        mask = np.zeros(3)
        mask[[i - 1 for i in slot.index_set]] = 1.0
        mass = _xlogx(weights @ mask)
        offsets += -mass if slot.is_denominator else mass
    _logger.debug("Guard grid for %s built with %d points", tag, len(points))
    return weights, offsets


@dataclass(frozen=True)
class Point:
    coords: tuple

    def __post_init__(self):
        coords = tuple(complex(z) for z in self.coords)
        if not coords:
            raise InputError("A point needs at least one coordinate.")
        if not all(math.isfinite(z.real) and math.isfinite(z.imag) for z in coords):
            raise InputError("Point coordinates must be finite.")
        object.__setattr__(self, "coords", coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def scaled(self, factor):
        return Point(tuple(z * factor for z in self.coords))


@dataclass(frozen=True)
class MultiIndex:
    m: tuple

    def __post_init__(self):
        values = tuple(int(v) for v in self.m)
        if any(v < 0 for v in values):
            raise InputError("Multi-index entries must be nonnegative: %s" % (values,))
        object.__setattr__(self, "m", values)

    @property
    def degree(self):
        return sum(self.m)

    def partial_sum(self, j):
        """``N_j = n_1 + ... + n_j`` with ``N_0 = 0``."""
        return sum(self.m[:j])


@dataclass(frozen=True)
class ParameterSet:
    """The A-, B- and C-group matrices of one function."""

    a_list: tuple
    b_list: tuple
    c_list: tuple

    def __post_init__(self):
        for group in ("a_list", "b_list", "c_list"):
            object.__setattr__(self, group, tuple(getattr(self, group)))
        if not (self.a_list and self.b_list and self.c_list):
            raise DimensionError(
                "Every parameter group needs at least one matrix, got %(a)d/%(b)d/%(c)d"
                % {"a": len(self.a_list), "b": len(self.b_list), "c": len(self.c_list)}
            )
        dims = {m.dim for m in self.a_list + self.b_list + self.c_list}
        if len(dims) > 1:
            raise DimensionError(
                "All parameters must share one size, got sizes %s" % sorted(dims)
            )

    @property
    def dim(self):
        return (self.a_list + self.b_list + self.c_list)[0].dim

    def group(self, group):
        return {"a": self.a_list, "b": self.b_list, "c": self.c_list}[group]

    def validate(self, kind):
        for group, label in (("a", "A"), ("b", "B"), ("c", "C")):
            expected = kind.group_size(group)
            got = len(self.group(group))
            if got != expected:
                raise DimensionError(
                    "%(kind)s expects %(expected)d %(label)s-group matrices, "
                    "got %(got)d" % {
                        "kind": kind,
                        "expected": expected,
                        "label": label,
                        "got": got,
                    }
                )
        return self

    def get(self, kind, name):
        slot = kind.slot(name)
        return self.group(slot.group)[slot.position]

    def named(self, kind):
        return {slot.name: self.get(kind, slot.name) for slot in kind.slots}

    def with_shifts(self, kind, shifts):
        """Copy with ``add_shift`` applied to the named parameters."""
        groups = {g: list(self.group(g)) for g in "abc"}
        for name, amount in shifts:
            if not amount:
                continue
            slot = kind.slot(name)
            groups[slot.group][slot.position] = add_shift(
                groups[slot.group][slot.position], amount
            )
        return ParameterSet(groups["a"], groups["b"], groups["c"])

    @classmethod
    def from_named(cls, kind, matrices):
        groups = {"a": [], "b": [], "c": []}
        for slot in kind.slots:
            groups[slot.group].append(matrices[slot.name])
        return cls(groups["a"], groups["b"], groups["c"])

    @classmethod
    def scalars(cls, a, b, c):
        """Convenience constructor for the ``r = 1`` case."""
        return cls(
            [ComplexMatrix.scalar(v) for v in a],
            [ComplexMatrix.scalar(v) for v in b],
            [ComplexMatrix.scalar(v) for v in c],
        )
