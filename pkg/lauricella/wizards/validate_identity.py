# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import logging

from ..models.recursion_catalog import check_identity, find_entry
from ..tools.jsonio import dumps, load_parameters, parse_point
from .base_command import (
    BaseCommand,
    add_series_arguments,
    register,
    series_config,
    tolerance_config,
)

_logger = logging.getLogger(__name__)


@register
class ValidateIdentity(BaseCommand):
    _name = "validate"
    _description = "Evaluate both sides of one catalog identity"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--id", required=True, dest="entry_id")
        parser.add_argument("--params", required=True)
        parser.add_argument("--x", required=True)
        parser.add_argument("--n", type=int, default=1)
        parser.add_argument(
            "--index",
            type=int,
            default=1,
            help="index i of entries stated for A_i, B_i or C_i",
        )
        parser.add_argument(
            "--variant", choices=("corrected", "printed"), default="corrected"
        )
        add_series_arguments(parser)

    def run(self):
        entry = find_entry(self.args.entry_id).with_index(self.args.index)
        x = parse_point(self.args.x)
        params = load_parameters(self.args.params)
        cfg = series_config(self.args)
        tol = tolerance_config(self.args, params.dim)
        check = check_identity(
            entry, params, x, self.args.n, cfg, tol, variant=self.args.variant
        )
        passed = check.residual <= tol.residual_tol
        payload = dict(
            check.to_json(),
            id=entry.id,
            equation=entry.equation,
            n=self.args.n,
            index=entry.index,
            variant=self.args.variant,
            residual_tol=tol.residual_tol,
        )
        payload["pass"] = passed
        self.emit(dumps(payload))
        if not check.converged:
            _logger.warning(
                "%s: a series did not converge, result inconclusive", entry.id
            )
            return 0
        if not passed:
            _logger.error(
                "%(id)s residual %(res).3e exceeds %(tol).1e",
                {"id": entry.id, "res": check.residual, "tol": tol.residual_tol},
            )
            return 1
        return 0
