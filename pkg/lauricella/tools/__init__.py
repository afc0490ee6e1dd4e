from . import config
from . import jsonio
