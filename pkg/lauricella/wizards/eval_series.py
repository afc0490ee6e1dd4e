# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import logging

from ..models.lauricella_kind import KIND_TAGS, LauricellaKind
from ..models.series import evaluate
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
class EvalSeries(BaseCommand):
    _name = "eval"
    _description = "Evaluate a Lauricella matrix function by its truncated series"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument(
            "--kind", required=True, help="one of %s" % ", ".join(KIND_TAGS)
        )
        parser.add_argument("--params", required=True, help="parameter JSON file")
        parser.add_argument(
            "--x", required=True, help='comma separated point, e.g. "0.1,0.2+0.1i"'
        )
        add_series_arguments(parser)

    def run(self):
        x = parse_point(self.args.x)
        kind = LauricellaKind(self.args.kind, arity=len(x))
        params = load_parameters(self.args.params)
        cfg = series_config(self.args)
        tol = tolerance_config(self.args, params.dim)
        result = evaluate(kind, params, x, cfg, tol)
        payload = dict(result.to_json(), kind=str(kind), x=[str(z) for z in x.coords])
        self.emit(dumps(payload))
        return 0
