"""On-disk cache of computed exact values, JSON-backed and versioned.

Keys follow the grammar "<kind>|<sorted mu comma-joined>|<component>" with
kind in {v, vdelta, a, d, hp1}.  For hp1 entries the mu field holds the
sorted zero pair and the component field the sorted pole twists.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .errors import CacheVersionError
from .exact import PiScalar

CACHE_VERSION = 1
KINDS = ("v", "vdelta", "a", "d", "hp1")


def make_key(kind: str, mu, component: str = "") -> str:
    if kind not in KINDS:
        raise ValueError(f"unknown cache kind {kind!r}")
    mu_part = ",".join(str(m) for m in sorted(mu))
    return f"{kind}|{mu_part}|{component}"


class CacheFile:
    def __init__(self, path: str):
        self.path = path
        self.entries = {}
        self.dirty = False

    @staticmethod
    def load(path: str) -> "CacheFile":
        cache = CacheFile(path)
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            version = data.get("version")
            if version != CACHE_VERSION:
                raise CacheVersionError(
                    f"cache version {version!r} unsupported (expected {CACHE_VERSION})")
            cache.entries = dict(data.get("entries", {}))
        return cache

    def save(self):
        payload = {
            "version": CACHE_VERSION,
            "entries": {k: self.entries[k] for k in sorted(self.entries)},
        }
        with open(self.path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1, sort_keys=True)
            fh.write("\n")
        self.dirty = False

    def get(self, kind: str, mu, component: str = ""):
        raw = self.entries.get(make_key(kind, mu, component))
        if raw is None:
            return None
        return PiScalar.from_json(raw)

    def put(self, kind: str, mu, value, component: str = ""):
        if isinstance(value, Fraction):
            value = PiScalar(value, 0)
        self.entries[make_key(kind, mu, component)] = value.to_json()
        self.dirty = True
