"""On-disk store for reduced Groebner bases, keyed by the in-memory cache key."""
from __future__ import annotations

import json
import os
from pathlib import Path

from .parsing import format_poly, parse_poly


class DiskCache:
    def __init__(self, directory):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        return self.dir / f"{key}.json"

    def load(self, key, ring):
        path = self._path(key)
        if not path.exists():
            return None
        data = json.loads(path.read_text())
        if data["ring"] != list(ring.names) or data["order"] != ring.field.order:
            return None
        return [parse_poly(s, ring) for s in data["polys"]]

    def store(self, key, polys):
        if not polys:
            return
        ring = polys[0].ring
        path = self._path(key)
        if path.exists():
            return
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"ring": list(ring.names), "order": ring.field.order, "polys": [format_poly(p) for p in polys]}))
        os.replace(tmp, path)


def install_disk_cache(directory=None):
    """Attach a DiskCache to the global Groebner cache (directory or $COXALG_CACHE_DIR)."""
    from .groebner import GB_CACHE

    directory = directory or os.environ.get("COXALG_CACHE_DIR")
    if not directory:
        return None
    GB_CACHE.disk = DiskCache(directory)
    return GB_CACHE.disk
