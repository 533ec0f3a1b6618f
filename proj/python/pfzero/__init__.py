"""Picard-Fuchs systems and zero counting of Abelian integrals."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import PfzeroError, run_job as _run_job


def run(command, **options):
    """Run a command-line job; returns (exit status, parsed document, notices)."""
    status, body, notices = _run_job(command, options)
    if command == "periods" and status == 0:
        return status, body, notices
    return status, _json.loads(body), notices
