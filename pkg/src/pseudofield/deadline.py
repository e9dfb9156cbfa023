"""Cooperative deadlines for the long searches."""

import os
import time

from .errors import DeadlineExceeded

ENV_VAR = "PSEUDOFIELD_DEADLINE_SECS"


class Deadline:
    """Wall-clock cutoff checked at loop boundaries by the slow searches."""

    def __init__(self, seconds=None):
        self.seconds = seconds
        self._end = None if seconds is None else time.monotonic() + float(seconds)

    @classmethod
    def from_env(cls):
        raw = os.environ.get(ENV_VAR)
        return cls(float(raw)) if raw else cls(None)

    def check(self, what="search"):
        if self._end is not None and time.monotonic() > self._end:
            raise DeadlineExceeded(f"{what} exceeded the {self.seconds}s deadline")


def check(deadline, what="search"):
    if deadline is not None:
        deadline.check(what)
