"""Content-addressed JSON cache for analysis results.

Keys are canonical JSON objects (graph, field, operation, parameters); the
blob lives under <cache-dir>/<first two hex>/<hash>.json.  Writes go through
a temp file and rename, so concurrent identical writes are idempotent.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Optional

CACHE_ENV = "COVERDEPTH_CACHE"
THREADS_ENV = "COVERDEPTH_THREADS"
DEFAULT_CACHE_DIR = ".coverdepth-cache"


def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE_DIR))


def thread_count(cli_value: Optional[int] = None) -> int:
    if cli_value is not None:
        return max(1, cli_value)
    env = os.environ.get(THREADS_ENV)
    return max(1, int(env)) if env else 1


def key_hash(key_obj: Any) -> str:
    canon = json.dumps(key_obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()


def _blob_path(digest: str, root: Optional[Path] = None) -> Path:
    base = root if root is not None else cache_dir()
    return base / digest[:2] / f"{digest}.json"


def get(key_obj: Any, root: Optional[Path] = None) -> Optional[Any]:
    path = _blob_path(key_hash(key_obj), root)
    if not path.exists():
        return None
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return None


def put(key_obj: Any, value: Any, root: Optional[Path] = None) -> None:
    path = _blob_path(key_hash(key_obj), root)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = json.dumps(value, sort_keys=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(payload)
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
