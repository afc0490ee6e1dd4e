from . import family_draw
from . import validation_batch
