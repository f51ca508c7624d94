"""
Helpers shared by the CLI and the chart layer: loguru setup, JSON and CSV
artefacts, SHA-256 digests for run manifests, and table guards.
"""

import hashlib
import json
import sys
from pathlib import Path
from typing import Any, Iterable, Optional, Union

import pandas as pd
from loguru import logger

PathLike = Union[str, Path]

_LOG_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <7}</level> | {message}"


# ------------------------------------------------------------------------
# logging
# ------------------------------------------------------------------------


def configure_logging(verbose: bool = False, level: Optional[str] = None) -> None:
    """
    Replaces loguru's default sink with a single stderr sink.

    Args:
        verbose: INFO when True, WARNING otherwise
        level: Explicit level, overrides verbose
    """
    logger.remove()
    logger.add(sys.stderr, level=level or ("INFO" if verbose else "WARNING"), format=_LOG_FORMAT)


# ------------------------------------------------------------------------
# artefacts
# ------------------------------------------------------------------------


def save_table(table: pd.DataFrame, path: PathLike) -> bool:
    """Writes a run table as CSV without the index; parent folders are created."""
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        table.to_csv(target, index=False)
    except OSError as e:
        logger.error(f"[UTILS] Could not write table {target}: {e}")
        return False
    logger.debug(f"[UTILS] {len(table)} rows written to {target}")
    return True


def save_json(data: Any, path: PathLike) -> bool:
    """
    Writes a JSON document with sorted keys.

    Returns:
        True if saved successfully, False otherwise
    """
    try:
        out_path = Path(path)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        logger.debug(f"[UTILS] JSON saved to {out_path}")
        return True
    except (OSError, TypeError, ValueError) as e:
        logger.error(f"[UTILS] Error saving JSON: {e}")
        return False


def load_json(path: PathLike) -> Any:
    """Reads a JSON document; errors propagate to the caller."""
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def file_digest(path: PathLike) -> str:
    """SHA-256 hex digest of a file's bytes."""
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


# ------------------------------------------------------------------------
# guards
# ------------------------------------------------------------------------


def has_rows(table: Optional[pd.DataFrame], name: str, columns: Iterable[str] = ()) -> bool:
    """True when `table` exists, has at least one row and carries every name in `columns`."""
    if table is None or table.empty:
        logger.warning(f"[UTILS] {name}: no rows to use")
        return False
    missing = [c for c in columns if c not in table.columns]
    if missing:
        logger.error(f"[UTILS] {name}: missing columns {missing}")
        return False
    return True
