# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import logging

from lauricella.exceptions import InputError
from lauricella.tools import config
from lauricella.tools.jsonio import dumps
from lauricella.wizards.base_command import (
    BaseCommand,
    add_series_arguments,
    register,
    series_config,
    tolerance_overrides,
)

from ..models.validation_batch import run_suite

_logger = logging.getLogger(__name__)


def _dims(text):
    try:
        dims = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(
            "--dims takes a comma separated list of sizes, got %r" % text
        ) from None
    if not dims or min(dims) < 1:
        raise InputError("--dims needs positive matrix sizes, got %r" % text)
    return dims


@register
class Sweep(BaseCommand):
    _name = "sweep"
    _description = "Validate catalog identities on random commuting families"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--filter", default="*", help="glob on entry ids")
        parser.add_argument("--trials", type=int, default=3)
        parser.add_argument("--dims", default="1", help="comma separated sizes")
        parser.add_argument("--n-max", type=int, default=2)
        parser.add_argument(
            "--seed",
            type=int,
            default=None,
            help="defaults to $%s or %d" % (config.SEED_VARIABLE, config.DEFAULT_SEED),
        )
        parser.add_argument("--out", help="report file, stdout when omitted")
        add_series_arguments(parser)

    def run(self):
        args = self.args
        if args.trials < 1 or args.n_max < 0:
            raise InputError("--trials must be positive and --n-max nonnegative")
        seed = config.default_seed() if args.seed is None else args.seed
        if seed < 0:
            raise InputError("--seed must be nonnegative, got %d" % seed)
        report = run_suite(
            pattern=args.filter,
            trials=args.trials,
            dims=_dims(args.dims),
            n_max=args.n_max,
            cfg=series_config(args),
            tol=tolerance_overrides(args),
            seed=seed,
        )
        text = dumps(report.to_json())
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8") as handle:
                    handle.write(text + "\n")
            except OSError as err:
                raise InputError(
                    "Cannot write %s: %s" % (args.out, err.strerror)
                ) from err
        else:
            self.emit(text)
        if not report.entry_count:
            _logger.warning("0 entries match %r", args.filter)
        if report.failing_ids:
            _logger.error("Failing identities: %s", ", ".join(report.failing_ids))
            return 1
        return 0
