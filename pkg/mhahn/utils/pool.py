import logging
import os
from concurrent.futures import (
    Future,
    ProcessPoolExecutor,
)
from typing import (
    Callable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    TypeVar,
)

from mhahn.constants import (
    threads_env_var,
)
from mhahn.errors import (
    InputError,
)

Item = TypeVar("Item")
Result = TypeVar("Result")


def pool_size(environ: Optional[Mapping[str, str]] = None) -> int:
    r"""Number of workers, capped by ``MHAHN_THREADS``; 1 disables the pool."""
    environ = os.environ if environ is None else environ
    default = os.cpu_count() or 1
    value = environ.get(threads_env_var)
    if value is None or value.strip() == "":
        return default
    try:
        size = int(value)
    except ValueError:
        raise InputError(f"{threads_env_var} must be a positive integer, got '{value}'")
    if size < 1:
        raise InputError(f"{threads_env_var} must be a positive integer, got {size}")
    return min(size, default)


def ordered_map(
    func: Callable[[Item], Result],
    items: Sequence[Item],
    workers: int = 1,
) -> Iterator[Result]:
    r"""Apply ``func`` to every item and yield the results in item order.

    ``func`` must be picklable when ``workers > 1``. Closing the iterator
    early cancels the items not yet started.
    """
    if workers <= 1 or len(items) <= 1:
        for item in items:
            yield func(item)
        return
    logging.debug("running %d items on %d workers", len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures: List[Future] = [executor.submit(func, item) for item in items]
        try:
            for future in futures:
                yield future.result()
        finally:
            for future in futures:
                future.cancel()
