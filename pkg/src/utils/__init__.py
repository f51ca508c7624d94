"""Logging setup, artefact persistence and table guards."""

from src.utils.helpers import (
    PathLike,
    configure_logging,
    file_digest,
    has_rows,
    load_json,
    save_json,
    save_table,
)

__all__ = [
    "PathLike",
    "configure_logging",
    "file_digest",
    "has_rows",
    "load_json",
    "save_json",
    "save_table",
]
