# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import json
import logging

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..exceptions import InputError
from ..models.lauricella_kind import ParameterSet, Point
from ..models.matrix_core import MatrixPayload

_logger = logging.getLogger(__name__)


class ParameterFile(BaseModel):
    """``{"a": [matrix, ...], "b": [...], "c": [...]}``."""

    model_config = ConfigDict(extra="forbid")

    a: list[MatrixPayload] = Field(min_length=1)
    b: list[MatrixPayload] = Field(min_length=1)
    c: list[MatrixPayload] = Field(min_length=1)

    def to_parameters(self):
        return ParameterSet(
            [m.to_matrix() for m in self.a],
            [m.to_matrix() for m in self.b],
            [m.to_matrix() for m in self.c],
        )

    @classmethod
    def from_parameters(cls, params):
        return cls(
            a=[MatrixPayload.from_matrix(m) for m in params.a_list],
            b=[MatrixPayload.from_matrix(m) for m in params.b_list],
            c=[MatrixPayload.from_matrix(m) for m in params.c_list],
        )


def describe_validation_error(err, source):
    lines = []
    for problem in err.errors():
        where = ".".join(str(part) for part in problem["loc"]) or "<root>"
        lines.append("%s: %s" % (where, problem["msg"]))
    return "Invalid content in %(src)s:\n  %(lines)s" % {
        "src": source,
        "lines": "\n  ".join(lines),
    }


def read_json(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as err:
        raise InputError(
            "Cannot read %(path)s: %(err)s" % {"path": path, "err": err.strerror}
        ) from err
    except json.JSONDecodeError as err:
        raise InputError(
            "%(path)s is not valid JSON (line %(line)d, column %(col)d): %(msg)s"
            % {"path": path, "line": err.lineno, "col": err.colno, "msg": err.msg}
        ) from err


def load_parameters(path):
    data = read_json(path)
    try:
        payload = ParameterFile.model_validate(data)
    except ValidationError as err:
        raise InputError(describe_validation_error(err, path)) from err
    try:
        params = payload.to_parameters()
    except ValueError as err:
        raise InputError("Invalid matrix in %s: %s" % (path, err)) from err
    _logger.debug(
        "Loaded %d/%d/%d parameter matrices from %s",
        len(params.a_list),
        len(params.b_list),
        len(params.c_list),
        path,
    )
    return params


def parse_complex(token):
    """Read ``re+imi`` style tokens such as ``0.1``, ``-0.2i`` or ``0.1+0.2i``."""
    text = token.strip().replace(" ", "")
    if not text:
        raise InputError("Empty complex number")
    try:
        return complex(text.replace("i", "j").replace("J", "j"))
    except ValueError:
        raise InputError("Cannot read %r as a complex number" % token) from None


def parse_point(text):
    return Point(tuple(parse_complex(part) for part in text.split(",")))


def dumps(payload):
    return json.dumps(payload, indent=2, sort_keys=True)
