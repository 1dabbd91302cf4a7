"""Line-delimited JSON document store with atomic writes.

One file per entity kind inside a single directory.  Every write
rewrites the whole file through a temp file, fsync and rename, so a
crash at any point leaves the previous complete version in place.
Leftover temp files from interrupted writes are ignored and replaced.
"""

import json
import os
from pathlib import Path


class DocumentStore:

    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, kind: str) -> Path:
        if not kind or any(c in kind for c in "/\\."):
            raise ValueError(f"bad entity kind {kind!r}")
        return self.directory / f"{kind}.jsonl"

    def load(self, kind: str) -> list:
        path = self._path(kind)
        if not path.exists():
            return []
        records = []
        with path.open(encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    records.append(json.loads(line))
        return records

    def save(self, kind: str, records) -> None:
        path = self._path(kind)
        tmp = path.with_name(path.name + ".tmp")
        with tmp.open("w", encoding="utf-8") as fh:
            for record in records:
                fh.write(json.dumps(record, ensure_ascii=False,
                                    sort_keys=True))
                fh.write("\n")
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
