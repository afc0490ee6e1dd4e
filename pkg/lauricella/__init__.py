from . import exceptions
from . import models
from . import tools
from . import wizards
