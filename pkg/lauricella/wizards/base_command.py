# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import logging

from ..models.matrix_core import ToleranceConfig
from ..models.series import SeriesConfig

_logger = logging.getLogger(__name__)

# command name -> command class; extension packages add their own on import
COMMANDS = {}


def register(cls):
    if cls._name in COMMANDS:
        _logger.warning("Command %s registered twice, keeping the last one", cls._name)
    COMMANDS[cls._name] = cls
    return cls


class BaseCommand:
    """One command line action.

    Subclasses declare their flags in ``add_arguments`` and do the work in
    ``run``, which returns the process exit code.
    """

    _name = None
    _description = ""

    def __init__(self, args, stdout):
        self.args = args
        self.stdout = stdout

    @classmethod
    def add_arguments(cls, parser):
        pass

    def run(self):
        raise NotImplementedError

    def emit(self, text):
        self.stdout.write(text)
        if not text.endswith("\n"):
            self.stdout.write("\n")


def add_series_arguments(parser):
    defaults = SeriesConfig()
    group = parser.add_argument_group("series")
    group.add_argument("--max-degree", type=int, default=defaults.max_degree)
    group.add_argument("--term-tol", type=float, default=defaults.term_tol)
    group.add_argument("--domain-guard", type=float, default=defaults.domain_guard)
    tolerances = ToleranceConfig()
    group.add_argument("--commute-tol", type=float, default=tolerances.commute_tol)
    group.add_argument(
        "--invert-cond-max", type=float, default=tolerances.invert_cond_max
    )
    group.add_argument(
        "--residual-tol",
        type=float,
        default=None,
        help="defaults to 1e-10 for scalars and 1e-8 for matrices",
    )


def series_config(args):
    return SeriesConfig(
        max_degree=args.max_degree,
        term_tol=args.term_tol,
        domain_guard=args.domain_guard,
    )


def tolerance_overrides(args):
    overrides = {
        "commute_tol": args.commute_tol,
        "invert_cond_max": args.invert_cond_max,
    }
    if args.residual_tol is not None:
        overrides["residual_tol"] = args.residual_tol
    return overrides


def tolerance_config(args, dim):
    return ToleranceConfig.for_dim(dim, **tolerance_overrides(args))
