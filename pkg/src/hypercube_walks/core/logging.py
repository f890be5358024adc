from __future__ import annotations

import logging
import os


def setup_logging(level: str | None = None, *, default: str = "WARNING") -> None:
    resolved_level = (level or os.getenv("LOG_LEVEL") or default).upper()
    # stderr only: stdout carries the command payload.
    logging.basicConfig(
        level=getattr(logging, resolved_level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
