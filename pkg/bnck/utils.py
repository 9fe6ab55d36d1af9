# Copyright (C) 2026 The bnck authors
#
# This file is part of bnck.
#
# bnck is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# bnck is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with bnck.  If not, see <http://www.gnu.org/licenses/>.

from concurrent.futures import ThreadPoolExecutor
import asyncio
import logging
import sys

__all__ = ["DEFAULT_LOG_FORMAT", "logger", "set_up_logging", "gather",
           "run_grid", "InvariantError", "DimensionError",
           "InadmissibleParameters", "StreamHandler"]

DEFAULT_LOG_FORMAT = "[%(levelname)s][%(name)s] %(message)s"

logger = logging.getLogger("bnck")


class InvariantError(ValueError):
    """Raised when an input violates a structural invariant, such as the
    Jacobi identity, the twist condition dH = -F^F, or one of the
    component relations.

    :param str path: The location of the offending field, e.g.
      ``"structure.J_plus"`` or ``"lie_algebra.brackets[3]"``.
    :param str message: A description of the violation.
    """
    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__("{}: {}".format(path, message) if path else message)


class DimensionError(ValueError):
    """Raised when shapes do not match or when an operation is applied in a
    dimension (or parity) it is not defined for.
    """


class InadmissibleParameters(ValueError):
    """Raised when catalog or rescaling parameters fall outside their
    admissible range, including square roots that are not rational in
    exact mode.
    """


def set_up_logging(log_info=False, log_debug=False, log_kwargs=None):
    if log_info or log_debug or log_kwargs is not None:
        log_kwargs = log_kwargs or {}
        log_kwargs.setdefault("format", DEFAULT_LOG_FORMAT)
        if "stream" in log_kwargs:
            stream = log_kwargs.pop("stream")
            log_kwargs.setdefault("handlers", [StreamHandler(stream)])
        elif "filename" not in log_kwargs:
            log_kwargs.setdefault("handlers", [StreamHandler(None)])
        logging.basicConfig(**log_kwargs)

    if log_debug:
        logger.setLevel(logging.DEBUG)
    elif log_info:
        logger.setLevel(logging.INFO)
    return logger


# Like asyncio.gather(), but ensures that awaitables are scheduled in order.
async def gather(*awaitables, **kwargs):
    return await asyncio.gather(
        *(asyncio.ensure_future(aw) for aw in awaitables), **kwargs,
    )


def run_grid(func, points, workers=1):
    """Evaluates ``func`` on every point and returns the results in the
    order of ``points``, whatever order the evaluations finish in.

    :param func: A pure function of one argument.
    :param points: An iterable of arguments.
    :param int workers: The number of worker threads. With one worker the
      points are evaluated in the calling thread.
    :rtype: `list`
    """
    points = list(points)
    if workers is None or workers <= 1 or len(points) <= 1:
        return [func(point) for point in points]

    async def evaluate():
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return await gather(*(
                loop.run_in_executor(executor, func, point)
                for point in points
            ))

    log = logger.getChild("run_grid")
    log.debug("Evaluating %d points on %d workers", len(points), workers)
    return asyncio.run(evaluate())


class StreamHandler(logging.StreamHandler):
    def emit(self, record):
        if not self.stream.closed:
            super().emit(record)

    def handleError(self, record):
        exc_type, exc_value, traceback = sys.exc_info()
        if issubclass(exc_type, BrokenPipeError):
            try:
                self.stream.close()
            except BrokenPipeError:
                pass
            return
        super().handleError(record)
