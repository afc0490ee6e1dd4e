# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

"""Process level settings.

There is no configuration file: options come from command line flags,
and the environment supplies the default random seed.
"""

import os

from ..exceptions import InputError

SEED_VARIABLE = "LAURICELLA_SEED"
DEFAULT_SEED = 20240101


def get(key, default=None):
    return os.environ.get(key, default)


def default_seed():
    value = get(SEED_VARIABLE)
    if value is None or not value.strip():
        return DEFAULT_SEED
    try:
        return int(value)
    except ValueError:
        raise InputError(
            "%(var)s must be an integer, got %(value)r"
            % {"var": SEED_VARIABLE, "value": value}
        ) from None
