"""
Run manifests: what was run, with which seed, on which files.
"""

import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Union

from src import __version__
from src.config import MANIFEST_SUFFIX, RNG_ALGORITHM, FORMAT_REVISION
from src.utils.helpers import file_digest, load_json, save_json

PathLike = Union[str, Path]


def manifest_path(output: PathLike) -> Path:
    """Sidecar location: '<output>.manifest.json'."""
    output = Path(output)
    return output.with_name(output.name + MANIFEST_SUFFIX)


def _digests(paths: Iterable[PathLike]) -> Dict[str, str]:
    return {str(p): file_digest(p) for p in paths if p and Path(p).is_file()}


@dataclass
class RunManifest:
    command: str
    argv: List[str]
    seed: int
    rng_algorithm: str = RNG_ALGORITHM
    format_revision: str = FORMAT_REVISION
    version: str = __version__
    wall_time: float = 0.0
    exit_status: int = 0
    inputs: Dict[str, str] = field(default_factory=dict)
    outputs: Dict[str, str] = field(default_factory=dict)

    @classmethod
    def start(cls, command: str, argv: List[str], seed: int) -> "RunManifest":
        manifest = cls(command=command, argv=list(argv), seed=seed)
        manifest._started = time.monotonic()
        return manifest

    def finish(self, exit_status: int, inputs: Iterable[PathLike], outputs: Iterable[PathLike]) -> "RunManifest":
        self.wall_time = round(time.monotonic() - getattr(self, "_started", time.monotonic()), 6)
        self.exit_status = exit_status
        self.inputs = _digests(inputs)
        self.outputs = _digests(outputs)
        return self

    def to_dict(self) -> Dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict) -> "RunManifest":
        return cls(**data)

    def write(self, output: PathLike) -> Optional[Path]:
        """Writes the sidecar next to `output`; returns its path, or None on failure."""
        path = manifest_path(output)
        return path if save_json(self.to_dict(), path) else None

    @classmethod
    def read(cls, path: PathLike) -> "RunManifest":
        return cls.from_dict(load_json(path))
