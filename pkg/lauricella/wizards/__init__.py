from . import base_command
from . import eval_series
from . import validate_identity
from . import list_catalog
