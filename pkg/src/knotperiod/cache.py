"""Disk cache for computed results, keyed by input digest.

Entries are write-once files named by the SHA-256 of a canonical JSON
rendering of the inputs, published atomically via a temporary file and
rename so concurrent workers never observe partial writes.
"""

import hashlib
import json
import os
import tempfile

TOOL_VERSION = 1


def digest_key(*parts):
    """Stable hex digest of the given JSON-serializable parts."""
    blob = json.dumps(
        [TOOL_VERSION, list(parts)], sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    """Append-only store mapping digest keys to small text payloads."""

    def __init__(self, root):
        self.root = root
        self.hits = 0
        self.misses = 0
        os.makedirs(root, exist_ok=True)

    def _path(self, key):
        return os.path.join(self.root, key[:2], key[2:])

    def get(self, key):
        try:
            with open(self._path(key)) as fh:
                text = fh.read()
        except OSError:
            self.misses += 1
            return None
        self.hits += 1
        return text

    def put(self, key, text):
        path = self._path(key)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path))
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise


class NullCache:
    """Cache stand-in that never stores anything."""

    def __init__(self):
        self.hits = 0
        self.misses = 0

    def get(self, key):
        self.misses += 1
        return None

    def put(self, key, text):
        pass
