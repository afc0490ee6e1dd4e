# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import fnmatch
import logging
import re
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np

from ..exceptions import CatalogError, HypothesisError, InputError
from .identity_notation import expand_name, expand_term, relabel, term_parameters
from .lauricella_kind import LauricellaKind, Point
from .matrix_core import ComplexMatrix, commutes, invert_array
from .pochhammer import shifted
from .series import evaluate_shifted

_logger = logging.getLogger(__name__)

FAMILY_PREFIX = {"GA": "FA", "GB": "FB", "GC": "FC", "GD": "FD"}

# arity and index at which templates are resolved for structural checks
NOMINAL_ARITY = 3

_LHS = re.compile(r"^([ABC](?:_(?:\d+|i))?)\s*([+-])\s*(n|\d+)$")


@dataclass(frozen=True)
class ShiftSpec:
    """Shifted parameter of the left-hand side.

    ``magnitude`` is None for the symbolic ``n`` of a recursion formula
    and a fixed positive integer for a contiguous relation.
    """

    target: str
    direction: str
    magnitude: int = None

    @classmethod
    def parse(cls, text):
        match = _LHS.match(text.replace(" ", ""))
        if not match:
            raise CatalogError("Cannot read left-hand side %r" % text)
        target, sign, amount = match.groups()
        magnitude = None if amount == "n" else int(amount)
        if magnitude is not None and magnitude < 1:
            raise CatalogError("A fixed shift must be positive, got %r" % text)
        return cls(target, "raise" if sign == "+" else "lower", magnitude)

    @property
    def sign(self):
        return 1 if self.direction == "raise" else -1

    def __str__(self):
        amount = "n" if self.magnitude is None else str(self.magnitude)
        return "%s%s%sI" % (self.target, "+" if self.sign > 0 else "-", amount)


@dataclass(frozen=True)
class IdentityEntry:
    """One theorem of the catalog.

    ``rhs`` holds the right-hand side as printed. Entries whose printed
    form fails numerically carry the valid form in ``corrected``, and the
    evaluator uses it unless the printed variant is asked for.
    """

    family: str
    kind: LauricellaKind
    equation: str
    lhs: ShiftSpec
    rhs: tuple
    hypotheses: tuple = ()
    form: str = None
    corrected: tuple = None
    note: str = ""
    index: int = 1
    source: str = "printed"
    swaps: frozenset = field(default_factory=frozenset)

    @property
    def id(self):
        parts = [self.family, self.lhs.target.replace("_", ""), self.lhs.direction]
        if self.form:
            parts.append(self.form)
        if self.swaps:
            parts.append("interchange")
        return ".".join(parts)

    @property
    def origin(self):
        return "interchange" if self.swaps else self.source

    @property
    def typo_candidate(self):
        return self.corrected is not None

    @property
    def is_generic(self):
        return self.kind.is_generic

    def written_terms(self, variant="corrected"):
        if variant == "printed" or self.corrected is None:
            return self.rhs
        if variant != "corrected":
            raise InputError("Unknown variant %r" % variant)
        return self.corrected

    def kind_for(self, arity):
        if self.kind.is_generic:
            return LauricellaKind(self.kind.tag, arity)
        if arity != self.kind.arity:
            raise InputError(
                "%(id)s is stated for %(k)d variables, got %(n)d"
                % {"id": self.id, "k": self.kind.arity, "n": arity}
            )
        return self.kind

    def target_name(self):
        return expand_name(self.lhs.target, NOMINAL_ARITY, self.index)[0]

    def with_index(self, index):
        if "_i" not in self.lhs.target and not any(
            "_i" in t for t in self.rhs + (self.corrected or ())
        ):
            return self
        return replace(self, index=index)

    def terms(self, arity, variant="corrected"):
        parsed = []
        for text in self.written_terms(variant):
            parsed.extend(expand_term(text, arity, self.index))
        return parsed

    def to_json(self):
        return {
            "id": self.id,
            "kind": self.kind.tag,
            "equation": self.equation,
            "target": self.lhs.target,
            "direction": self.lhs.direction,
            "lhs": str(self.lhs),
            "form": self.form,
            "hypotheses": list(self.hypotheses),
            "typo_candidate": self.typo_candidate,
            "origin": self.origin,
            "note": self.note,
        }


def validate_entry(entry):
    """Check that every parameter an entry names exists in its kind."""
    kind = entry.kind_for(NOMINAL_ARITY)
    kind.slot(entry.target_name())
    variants = ["printed"] + (["corrected"] if entry.corrected else [])
    for variant in variants:
        for term in entry.terms(NOMINAL_ARITY, variant):
            for name in term_parameters(term):
                if name not in kind.slot_map:
                    raise CatalogError(
                        "%(id)s (%(eq)s) refers to %(name)s, unknown to %(kind)s"
                        % {
                            "id": entry.id,
                            "eq": entry.equation,
                            "name": name,
                            "kind": kind,
                        }
                    )
    for pair in entry.hypotheses:
        for name in pair.split(":"):
            for resolved in expand_name(name, NOMINAL_ARITY, entry.index):
                kind.slot(resolved)
    return entry


def _signature_image(kind, name):
    slot = kind.slot(name)
    return slot.group == "c", slot.index_set


def interchange(entry, swap):
    """Relabel an entry by the parameter transpositions in ``swap``.

    The swap must map the kind's signature onto itself, so that the
    relabelled identity is again a valid identity of the same function.
    """
    mapping = {}
    for left, right in swap:
        mapping[left] = right
        mapping[right] = left
    kind = entry.kind_for(NOMINAL_ARITY)
    for left, right in swap:
        names = [expand_name(n, NOMINAL_ARITY, entry.index)[0] for n in (left, right)]
        if _signature_image(kind, names[0]) != _signature_image(kind, names[1]):
            raise CatalogError(
                "Swapping %(l)s and %(r)s is not a symmetry of %(kind)s"
                % {"l": left, "r": right, "kind": kind}
            )

    def swap_texts(texts):
        return None if texts is None else tuple(relabel(t, mapping) for t in texts)

    pairs = frozenset(tuple(sorted(pair)) for pair in swap)
    return replace(
        entry,
        lhs=replace(entry.lhs, target=relabel(entry.lhs.target, mapping)),
        rhs=swap_texts(entry.rhs),
        corrected=swap_texts(entry.corrected),
        hypotheses=swap_texts(entry.hypotheses),
        swaps=entry.swaps ^ pairs,
    )


class _Evaluation:
    """Both sides of one identity instance, sharing a series cache."""

    def __init__(self, entry, params, x, n, cfg, tol):
        if not isinstance(x, Point):
            x = Point(x)
        magnitude = entry.lhs.magnitude
        if magnitude is not None and n != magnitude:
            raise CatalogError(
                "%(id)s is a contiguous relation for a shift of %(m)d, got n = %(n)d"
                % {"id": entry.id, "m": magnitude, "n": n}
            )
        if n < 0:
            raise InputError("The shift magnitude must be nonnegative, got %d" % n)
        self.entry = entry
        self.kind = entry.kind_for(len(x))
        if entry.index > self.kind.arity:
            raise InputError(
                "%(id)s is instantiated for index %(i)d but the point has "
                "%(k)d variables"
                % {"id": entry.id, "i": entry.index, "k": self.kind.arity}
            )
        self.params = params.validate(self.kind)
        self.x = x
        self.n = n
        self.cfg = cfg
        self.tol = tol
        self.converged = True
        self._series = {}
        self._matrices = self.params.named(self.kind)

    def series(self, shifts):
        key = tuple(sorted((name, amount) for name, amount in shifts if amount))
        if key not in self._series:
            result = evaluate_shifted(
                self.kind, self.params, key, self.x, self.cfg, self.tol
            )
            self.converged = self.converged and result.converged
            self._series[key] = result.value.entries
        return self._series[key]

    def lhs(self):
        target = self.entry.target_name()
        return self.series([(target, self.entry.lhs.sign * self.n)])

    def _factor(self, factor, env):
        base = self._matrices[factor.parameter].entries
        label = factor.parameter
        if factor.order is not None:
            order = factor.order.evaluate(env)
            dim = base.shape[0]
            value = np.eye(dim, dtype=np.complex128)
            for j in range(order):
                step = shifted(base, j)
                if factor.inverse:
                    step_label = "%s%+dI" % (label, j) if j else label
                    value = invert_array(step, self.tol, step_label) @ value
                else:
                    value = value @ step
            return value
        amount = factor.shift.evaluate(env)
        value = shifted(base, amount) if amount else base
        if factor.inverse:
            name = "%s%+dI" % (label, amount) if amount else label
            value = invert_array(value, self.tol, name)
        return value

    def rhs(self, variant):
        dim = self.params.dim
        total = np.zeros((dim, dim), dtype=np.complex128)
        for term in self.entry.terms(self.kind.arity, variant):
            base_env = {"n": self.n, "__multi__": ()}
            if term.summation.style == "multi":
                base_env["__multi__"] = term.summation.variables
            for point in term.summation.points(base_env):
                env = dict(base_env, **point)
                scalar = complex(term.sign)
                for part in term.scalar_part:
                    if hasattr(part, "axis"):
                        scalar *= part.value(self.x.coords, env)
                    else:
                        scalar *= part.value(term.summation, env)
                if not scalar:
                    continue
                value = np.eye(dim, dtype=np.complex128)
                for factor in term.left_factors:
                    value = value @ self._factor(factor, env)
                value = value @ self.series(term.series_call.resolve(env))
                for factor in term.right_factors:
                    value = value @ self._factor(factor, env)
                total += scalar * value
        return total


@dataclass(frozen=True)
class IdentityCheck:
    lhs: ComplexMatrix
    rhs: ComplexMatrix
    residual: float
    converged: bool

    def to_json(self):
        return {
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "residual": self.residual,
            "converged": self.converged,
        }


def check_hypotheses(entry, params, kind, n, tol):
    """Refuse inputs that violate the entry's theorem hypotheses."""
    matrices = params.named(kind)
    for pair in entry.hypotheses:
        left, right = pair.split(":")
        for a in expand_name(left, kind.arity, entry.index):
            for b in expand_name(right, kind.arity, entry.index):
                if a == b:
                    continue
                if not commutes(matrices[a], matrices[b], tol):
                    raise HypothesisError(
                        "Hypothesis %(a)s %(b)s = %(b)s %(a)s of %(id)s fails: "
                        "the matrices do not commute."
                        % {"a": a, "b": b, "id": entry.id},
                        pair=(a, b),
                    )
    target = expand_name(entry.lhs.target, kind.arity, entry.index)[0]
    base = matrices[target].entries
    if entry.lhs.direction == "raise":
        steps = range(0, n + 1)
    elif kind.slot(target).is_denominator:
        steps = range(0, -n - 1, -1)
    else:
        steps = range(-1, -n - 1, -1)
    for j in steps:
        invert_array(shifted(base, j), tol, "%s%+dI" % (target, j) if j else target)


def _prepare(entry, params, x, n, cfg, tol):
    evaluation = _Evaluation(entry, params, x, n, cfg, tol)
    check_hypotheses(entry, evaluation.params, evaluation.kind, n, tol)
    return evaluation


def eval_lhs(entry, params, x, n, cfg, tol):
    evaluation = _prepare(entry, params, x, n, cfg, tol)
    return ComplexMatrix(evaluation.lhs())


def eval_rhs(entry, params, x, n, cfg, tol, variant="corrected"):
    evaluation = _prepare(entry, params, x, n, cfg, tol)
    return ComplexMatrix(evaluation.rhs(variant))


def relative_residual(lhs, rhs):
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    return float(np.linalg.norm(lhs - rhs, "fro") / (1.0 + np.linalg.norm(lhs, "fro")))


def check_identity(entry, params, x, n, cfg, tol, variant="corrected"):
    """Evaluate both sides once and report the residual."""
    evaluation = _prepare(entry, params, x, n, cfg, tol)
    lhs = evaluation.lhs()
    rhs = evaluation.rhs(variant)
    return IdentityCheck(
        ComplexMatrix(lhs),
        ComplexMatrix(rhs),
        relative_residual(lhs, rhs),
        evaluation.converged,
    )


def residual(entry, params, x, n, cfg, tol, variant="corrected"):
    return check_identity(entry, params, x, n, cfg, tol, variant).residual


@lru_cache(maxsize=1)
def _build_catalog():
    from .catalog_data import catalog_entries

    entries = tuple(validate_entry(entry) for entry in catalog_entries())
    seen = {}
    for entry in entries:
        if entry.id in seen:
            raise CatalogError(
                "Duplicate identity id %(id)s (%(a)s and %(b)s)"
                % {"id": entry.id, "a": seen[entry.id], "b": entry.equation}
            )
        seen[entry.id] = entry.equation
    _logger.debug("Identity catalog holds %d entries", len(entries))
    return entries


def catalog():
    return list(_build_catalog())


def find_entry(entry_id):
    for entry in _build_catalog():
        if entry.id == entry_id:
            return entry
    raise InputError("No identity with id %r, see the list command" % entry_id)


def filter_catalog(pattern):
    return [e for e in _build_catalog() if fnmatch.fnmatchcase(e.id, pattern)]


def export_catalog():
    return [entry.to_json() for entry in _build_catalog()]
