from __future__ import annotations

import time


def monotonic_ms() -> int:
    return int(time.monotonic() * 1000)


class Stopwatch:
    def __init__(self) -> None:
        self._start_ms = monotonic_ms()

    def elapsed_ms(self) -> int:
        return monotonic_ms() - self._start_ms
