from . import matrix_core
from . import pochhammer
from . import lauricella_kind
from . import series
from . import identity_notation
from . import recursion_catalog
from . import catalog_data
