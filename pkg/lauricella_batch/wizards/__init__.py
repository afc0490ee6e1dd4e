from . import sweep
