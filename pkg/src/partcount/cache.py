"""Append-only line-delimited JSON cache of computed counts.

Each line is one object ``{"version": 1, "family", "k", "n", "value"}``
with ``value`` a decimal string and ``k = 0`` for plane counts. Unknown
fields are ignored. A single writer is assumed; sharing one file between
concurrent processes is not supported.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass
from pathlib import Path

from .errors import PartCountError

CACHE_VERSION = 1
ENV_VAR = "PARTCOUNT_CACHE"


class CacheError(PartCountError):
    """Malformed or self-contradictory cache file."""


@dataclass(frozen=True)
class CacheRecord:
    family: str
    k: int
    n: int
    value: str
    version: int = CACHE_VERSION

    @property
    def key(self) -> tuple[str, int, int]:
        return (self.family, self.k, self.n)

    def to_line(self) -> str:
        d = asdict(self)
        return json.dumps({f: d[f] for f in ("version", "family", "k", "n", "value")})

    @classmethod
    def from_obj(cls, obj: dict) -> CacheRecord:
        rec = cls(
            family=obj["family"],
            k=int(obj["k"]),
            n=int(obj["n"]),
            value=str(obj["value"]),
            version=int(obj.get("version", CACHE_VERSION)),
        )
        if rec.family not in ("colored", "plane") or not rec.value.isdigit():
            raise ValueError("bad family or value")
        return rec


def resolve_path(flag: str | None) -> Path | None:
    """--cache wins over the environment; neither means caching is off."""
    p = flag or os.environ.get(ENV_VAR)
    return Path(p) if p else None


class ResultCache:
    def __init__(self, path: Path):
        self.path = Path(path)
        self._records: dict[tuple[str, int, int], CacheRecord] = {}

    @classmethod
    def open(cls, path) -> ResultCache:
        cache = cls(path)
        cache.load()
        return cache

    def load(self) -> None:
        self._records.clear()
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    rec = CacheRecord.from_obj(json.loads(line))
                except (ValueError, KeyError, TypeError) as exc:
                    raise CacheError(f"{self.path}:{lineno}: malformed cache line ({exc})") from None
                old = self._records.get(rec.key)
                if old is not None and old.value != rec.value:
                    raise CacheError(
                        f"{self.path}:{lineno}: conflicting values for {rec.key}: {old.value} vs {rec.value}"
                    )
                self._records[rec.key] = rec

    def get(self, family: str, k: int | None, n: int) -> int | None:
        rec = self._records.get((family, k or 0, n))
        return int(rec.value) if rec else None

    def store(self, family: str, k: int | None, n: int, value: int) -> None:
        rec = CacheRecord(family, k or 0, n, str(value))
        old = self._records.get(rec.key)
        if old is not None:
            if old.value != rec.value:
                raise CacheError(f"refusing to record {rec.key}={rec.value}; cache holds {old.value}")
            return
        with self.path.open("a", encoding="utf-8", newline="\n") as fh:
            fh.write(rec.to_line() + "\n")
        self._records[rec.key] = rec

    def __len__(self) -> int:
        return len(self._records)

    def records(self) -> list[CacheRecord]:
        return list(self._records.values())
