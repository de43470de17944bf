from .pool import (
    ordered_map,
    pool_size,
)
from .serialization import (
    ExactTable,
    dumps_csv,
    dumps_json,
)
