"""Numerical bounds for band-limited extremal problems."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import DomainError, NumericalError, __version__, run_json


def run(command, **options):
    """Run a CLI command in-process and return the result record as a dict."""
    return _json.loads(run_json(command, options))


__all__ = [name for name in dir() if not name.startswith("_")]
