# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import hashlib
import json
import logging
import time
import zlib
from datetime import datetime, timezone
from sys import exc_info
from traceback import format_exception
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from lauricella.exceptions import (
    HypothesisError,
    LauricellaError,
    SingularMatrixError,
)
from lauricella.models.lauricella_kind import ParameterSet
from lauricella.models.matrix_core import ToleranceConfig
from lauricella.models.recursion_catalog import check_identity, filter_catalog
from lauricella.models.series import SeriesConfig
from lauricella.tools.jsonio import ParameterFile

from .family_draw import SpectrumSpec, generate_family, sample_point

_logger = logging.getLogger(__name__)

# inputs refused by the hypothesis or invertibility checks are redrawn
MAX_REDRAWS = 20
# failing inputs kept per entry in the report
MAX_FAILURES = 3
# C-lowering draws keep eigenvalues this far from the real axis
C_LOWERING_MIN_IMAG = 0.2


class FailureRecord(BaseModel):
    dim: int
    n: int
    trial: int
    index: int
    residual: float
    x: list[tuple[float, float]]
    params: ParameterFile


class EntryRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    id: str
    equation: str
    kind: str
    trials: int = 0
    conclusive_trials: int = 0
    inconclusive_trials: int = 0
    redraws: int = 0
    max_residual: Optional[float] = None
    printed_variant_residual: Optional[float] = None
    passed: bool = Field(default=True, serialization_alias="pass")
    inconclusive: bool = False
    errors: list[str] = []
    failures: list[FailureRecord] = []


class SuiteConfig(BaseModel):
    filter: str
    trials: int
    dims: list[int]
    n_max: int
    max_degree: int
    term_tol: float
    domain_guard: float
    commute_tol: float
    invert_cond_max: float
    residual_tol: dict[str, float]


class ValidationReport(BaseModel):
    seed: int
    config: SuiteConfig
    entry_count: int
    passed: bool = Field(serialization_alias="pass")
    failing_ids: list[str]
    entries: list[EntryRecord]
    generated_at: str = ""
    elapsed_seconds: float = 0.0

    def body(self):
        """Everything but the timing fields, as plain JSON data."""
        return self.model_dump(
            by_alias=True, mode="json", exclude={"generated_at", "elapsed_seconds"}
        )

    def body_hash(self):
        canonical = json.dumps(self.body(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def to_json(self):
        payload = self.body()
        payload["sha256"] = self.body_hash()
        payload["generated_at"] = self.generated_at
        payload["elapsed_seconds"] = self.elapsed_seconds
        return payload


def _trial_seed(seed, entry, dim, n, trial):
    sequence = np.random.SeedSequence(
        [seed, zlib.crc32(entry.id.encode("utf-8")), dim, n, trial]
    )
    return sequence.generate_state(2)


def _magnitudes(entry, n_max):
    if entry.lhs.magnitude is not None:
        return [entry.lhs.magnitude]
    return list(range(0, n_max + 1))


def _spectrum_for(entry, kind):
    target = kind.slot(entry.target_name())
    if target.is_denominator and entry.lhs.direction == "lower":
        return SpectrumSpec(min_abs_imag=C_LOWERING_MIN_IMAG)
    return SpectrumSpec()


def _run_trial(entry, record, dim, n, trial, seed, cfg, tol):
    """Run one trial; returns ``(check, printed_residual, params, x)`` or None."""
    kind = entry.kind_for(3)
    if entry.is_generic:
        entry = entry.with_index(1 + trial % kind.arity)
    spec = _spectrum_for(entry, kind)
    names = [slot.name for slot in kind.slots]
    for attempt in range(MAX_REDRAWS + 1):
        state = _trial_seed(seed, entry, dim, n, trial * (MAX_REDRAWS + 1) + attempt)
        family = generate_family(dim, len(names), spec, int(state[0]))
        params = ParameterSet.from_named(kind, dict(zip(names, family.matrices)))
        x = sample_point(kind, 0.4 / (1 + n), int(state[1]))
        try:
            check = check_identity(entry, params, x, n, cfg, tol)
        except (HypothesisError, SingularMatrixError) as err:
            record.redraws += 1
            _logger.debug("%s trial %d redrawn: %s", entry.id, trial, err)
            continue
        printed = None
        if entry.typo_candidate:
            try:
                printed = check_identity(
                    entry, params, x, n, cfg, tol, "printed"
                ).residual
            except LauricellaError as err:
                _logger.debug("%s printed form not evaluated: %s", entry.id, err)
        return entry, check, printed, params, x
    record.errors.append(
        "dim %(dim)d, n %(n)d, trial %(t)d: no admissible draw in %(max)d attempts"
        % {"dim": dim, "n": n, "t": trial, "max": MAX_REDRAWS + 1}
    )
    return None


def _validate_entry(entry, trials, dims, n_max, seed, cfg, tolerances):
    record = EntryRecord(id=entry.id, equation=entry.equation, kind=entry.kind.tag)
    for dim in dims:
        tol = tolerances[dim]
        for n in _magnitudes(entry, n_max):
            for trial in range(trials):
                record.trials += 1
                err_msg = "dim %d, n %d, trial %d: " % (dim, n, trial)
                try:
                    outcome = _run_trial(entry, record, dim, n, trial, seed, cfg, tol)
                except LauricellaError as e:
                    record.errors.append(err_msg + str(e))
                    continue
                except Exception:
                    tb = "".join(format_exception(*exc_info()))
                    _logger.error("%s %s%s", entry.id, err_msg, tb)
                    record.errors.append(err_msg + tb)
                    continue
                if outcome is None:
                    continue
                used, check, printed, params, x = outcome
                if printed is not None:
                    record.printed_variant_residual = max(
                        record.printed_variant_residual or 0.0, printed
                    )
                if not check.converged:
                    record.inconclusive_trials += 1
                    continue
                record.conclusive_trials += 1
                record.max_residual = max(record.max_residual or 0.0, check.residual)
                if check.residual > tol.residual_tol:
                    record.passed = False
                    if len(record.failures) < MAX_FAILURES:
                        record.failures.append(
                            FailureRecord(
                                dim=dim,
                                n=n,
                                trial=trial,
                                index=used.index,
                                residual=check.residual,
                                x=[(z.real, z.imag) for z in x.coords],
                                params=ParameterFile.from_parameters(params),
                            )
                        )
    if record.errors:
        record.passed = False
    record.inconclusive = record.trials > 0 and not record.conclusive_trials
    return record


def run_suite(
    pattern="*", trials=3, dims=(1,), n_max=2, cfg=None, tol=None, seed=0
):
    """Validate every catalog entry whose id matches ``pattern``.

    ``tol`` maps ``ToleranceConfig`` fields to values that replace the
    per-size defaults of ``ToleranceConfig.for_dim``.
    """
    cfg = cfg or SeriesConfig()
    dims = sorted(set(dims))
    tolerances = {dim: ToleranceConfig.for_dim(dim, **(tol or {})) for dim in dims}
    started = time.monotonic()
    entries = filter_catalog(pattern)
    _logger.debug("Validating %d entries (seed %d)", len(entries), seed)
    records = []
    for entry in entries:
        record = _validate_entry(entry, trials, dims, n_max, seed, cfg, tolerances)
        if not record.passed and not record.inconclusive:
            _logger.warning(
                "%(id)s failed (max residual %(res)s, %(err)d errors)",
                {"id": entry.id, "res": record.max_residual, "err": len(record.errors)},
            )
        records.append(record)
    failing = [r.id for r in records if not r.passed and not r.inconclusive]
    sample_tol = next(iter(tolerances.values()), ToleranceConfig())
    config = SuiteConfig(
        filter=pattern,
        trials=trials,
        dims=dims,
        n_max=n_max,
        max_degree=cfg.max_degree,
        term_tol=cfg.term_tol,
        domain_guard=cfg.domain_guard,
        commute_tol=sample_tol.commute_tol,
        invert_cond_max=sample_tol.invert_cond_max,
        residual_tol={str(d): t.residual_tol for d, t in tolerances.items()},
    )
    return ValidationReport(
        seed=seed,
        config=config,
        entry_count=len(records),
        passed=not failing,
        failing_ids=failing,
        entries=records,
        generated_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        elapsed_seconds=round(time.monotonic() - started, 3),
    )
