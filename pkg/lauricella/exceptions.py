# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

"""Exceptions raised by the lauricella packages.

Every error carries a complete, user readable message. The command line
front end maps the two families below onto its exit codes:

- ``InputError`` and ``CatalogError``: usage or malformed input (exit 2)
- ``MathPreconditionError``: the inputs violate a mathematical
  precondition such as a singular factor or a failed commutation (exit 3)
"""


class LauricellaError(Exception):
    """Base class of all errors raised by this project."""

    exit_code = 2

    def __init__(self, message):
        super().__init__(message)
        self.message = message

    def __str__(self):
        return self.message


class InputError(LauricellaError):
    """Malformed or inconsistent user input."""


class DimensionError(InputError):
    """Matrix dimensions or list lengths do not match."""


class CatalogError(LauricellaError):
    """An identity entry is used outside of its definition."""


class MathPreconditionError(LauricellaError):
    exit_code = 3


class SingularMatrixError(MathPreconditionError):
    def __init__(self, message, parameter=None):
        super().__init__(message)
        self.parameter = parameter


class DomainGuardError(MathPreconditionError):
    """The evaluation point lies outside the guard region of the kind."""


class HypothesisError(MathPreconditionError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair
