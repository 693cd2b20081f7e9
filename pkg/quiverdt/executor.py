import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar, Union

from quiverdt.exceptions import RunConfigError

Executor = Union["SerialExecutor", "ThreadedExecutor"]

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


class SerialExecutor:
    """Evaluate work items one after another in the calling thread."""

    @property
    def context(self) -> str:
        return "serial"

    def map(self, func: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """Apply func to every item and return the results in input order.

        :param func: Work function.
        :type func: callable
        :param items: Work items.
        :type items: iterable
        :return: Results in input order.
        :rtype: list
        """
        return [func(item) for item in items]


class ThreadedExecutor:
    """Evaluate work items on a thread pool.

    Results are returned in input order regardless of completion order.

    :param threads: Number of worker threads.
    :type threads: int
    """

    def __init__(self, threads: int) -> None:
        if threads < 1:
            raise RunConfigError(f"thread count must be positive, got {threads}")
        self._threads = threads

    @property
    def context(self) -> str:
        return "threaded"

    @property
    def threads(self) -> int:
        return self._threads

    def map(self, func: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """Apply func to every item on the pool.

        :param func: Work function.
        :type func: callable
        :param items: Work items.
        :type items: iterable
        :return: Results in input order.
        :rtype: list
        """
        work = list(items)
        logger.debug("dispatching %d items to %d threads", len(work), self._threads)
        with ThreadPoolExecutor(max_workers=self._threads) as pool:
            return list(pool.map(func, work))


def get_executor(threads: Optional[int] = None) -> Executor:
    """Return an executor for the given parallelism hint.

    :param threads: Number of threads. None or 0 selects serial evaluation.
    :type threads: int | None
    :return: Executor.
    :rtype: quiverdt.executor.SerialExecutor | quiverdt.executor.ThreadedExecutor
    """
    if not threads:
        return SerialExecutor()
    return ThreadedExecutor(threads)
