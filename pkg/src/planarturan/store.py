"""Project-local cache for censuses and search witnesses.

Layout under the cache root (default ./.planarturan-cache, overridable
with PLANARTURAN_CACHE):

    manifest.json          generator version + census counts
    census/t<NN>.g6        sorted canonical graph6 lines, one per class
    witnesses/<key>.g6     one graph6 line per cached witness

Writes are atomic (temp file + rename) so concurrent readers only ever
see complete files.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

ENV_VAR = "PLANARTURAN_CACHE"
GENERATOR_VERSION = 1


def cache_root(override: str | os.PathLike | None = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.cwd() / ".planarturan-cache"


def atomic_write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def census_path(root: Path, n: int) -> Path:
    return root / "census" / f"t{n:02d}.g6"


def witness_path(root: Path, key: str) -> Path:
    return root / "witnesses" / f"{key}.g6"


def load_manifest(root: Path) -> dict:
    path = root / "manifest.json"
    if not path.exists():
        return {"version": GENERATOR_VERSION, "counts": {}}
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return {"version": GENERATOR_VERSION, "counts": {}}
    if data.get("version") != GENERATOR_VERSION:
        return {"version": GENERATOR_VERSION, "counts": {}}
    return data


def update_manifest(root: Path, n: int, count: int) -> None:
    data = load_manifest(root)
    data["counts"][str(n)] = count
    atomic_write_text(root / "manifest.json", json.dumps(data, indent=2, sort_keys=True))
