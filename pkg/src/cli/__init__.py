"""
CLI Package: Command-line entry point and run manifests.
"""

from src.cli.commands import build_parser, run
from src.cli.manifest import RunManifest, manifest_path

__all__ = [
    "run",
    "build_parser",
    "RunManifest",
    "manifest_path",
]
