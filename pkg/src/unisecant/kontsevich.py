"""The recursion for counts of rational plane curves through general points.

N_k is the number of degree-k rational plane curves through 3k-1 general
points.  With N_1 = 1 the higher values satisfy

    N_k = 1/2 * sum_{k1+k2=k, k1,k2>=1}
          k1*k2*(3k*k1*k2 - 2k^2 + 6*k1*k2) * (3k-4)!
          / ((3*k1-1)! * (3*k2-1)!) * N_{k1} * N_{k2},

which yields 1, 1, 12, 620, 87304, ...  The summand mixes a global 1/2 with
factorial ratios, so each term is accumulated as an exact rational and the
final value is checked to be an integer; a non-integral result can only
mean the formula was transcribed wrong and raises immediately.

A small JSON cache (versioned, atomically written) makes table reuse safe:
cached values for k <= 4 are re-verified against the hardcoded anchors
before anything is trusted.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction

from .errors import CacheInvalidError, DomainError, UnisecantError

CACHE_VERSION = 1

#: Anchor values; any cache or recomputation disagreeing with these is rejected.
KNOWN_VALUES = {1: 1, 2: 1, 3: 12, 4: 620}


def compute_nk(k: int, _table: dict[int, int] | None = None) -> int:
    """N_k as an exact integer.

    The recursion is evaluated with exact factorials and rationals; the 1/2
    and the factorial divisions must cancel to an integer.
    """
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    table = _table if _table is not None else {}
    if k in table:
        return table[k]
    if 1 not in table:
        table[1] = 1
    for n in range(2, k + 1):
        if n in table:
            continue
        total = Fraction(0)
        for k1 in range(1, n):
            k2 = n - k1
            weight = Fraction(
                k1 * k2 * (3 * n * k1 * k2 - 2 * n * n + 6 * k1 * k2)
                * math.factorial(3 * n - 4),
                math.factorial(3 * k1 - 1) * math.factorial(3 * k2 - 1),
            )
            total += weight * table[k1] * table[k2]
        total /= 2
        if total.denominator != 1:
            raise UnisecantError(
                f"recursion produced a non-integer for k={n}: {total} "
                "(formula transcription bug)")
        value = int(total)
        if n in KNOWN_VALUES and value != KNOWN_VALUES[n]:
            raise UnisecantError(
                f"recursion value N_{n} = {value} contradicts the known {KNOWN_VALUES[n]}")
        table[n] = value
    return table[k]


@dataclass
class NkTable:
    """Contiguous table of (k, N_k) values from k = 1 up to max_k."""

    entries: list[tuple[int, int]]

    @property
    def max_k(self) -> int:
        return self.entries[-1][0] if self.entries else 0

    def value(self, k: int) -> int:
        if not 1 <= k <= self.max_k:
            raise DomainError(f"k={k} outside table range 1..{self.max_k}")
        return self.entries[k - 1][1]

    def to_json_dict(self) -> dict:
        return {
            "version": CACHE_VERSION,
            "entries": [[k, str(v)] for k, v in self.entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "NkTable":
        try:
            if data["version"] != CACHE_VERSION:
                raise CacheInvalidError(f"cache version {data['version']!r} != {CACHE_VERSION}")
            entries = []
            for i, (k, v) in enumerate(data["entries"], start=1):
                k = int(k)
                value = int(str(v), 10)
                if k != i or value <= 0:
                    raise CacheInvalidError("cache entries not contiguous/positive")
                entries.append((k, value))
        except (KeyError, TypeError, ValueError) as exc:
            raise CacheInvalidError(f"malformed cache: {exc}") from exc
        table = cls(entries)
        for k, known in KNOWN_VALUES.items():
            if table.max_k >= k and table.value(k) != known:
                raise CacheInvalidError(f"cache value N_{k} contradicts known anchor")
        return table


def nk_table(max_k: int, cache_path: str | os.PathLike | None = None) -> NkTable:
    """Memoized table of N_1..N_max_k, optionally backed by a JSON cache file.

    A corrupt or stale cache is silently recomputed (and rewritten) —
    a bad cache must never poison downstream counts.
    """
    if not isinstance(max_k, int) or max_k < 1:
        raise DomainError(f"max_k must be a positive integer, got {max_k!r}")
    if cache_path is not None and os.path.exists(cache_path):
        try:
            with open(cache_path, "r", encoding="utf-8") as fh:
                cached = NkTable.from_json_dict(json.load(fh))
            if cached.max_k >= max_k:
                return NkTable(cached.entries[:max_k])
            seed = {k: v for k, v in cached.entries}
        except (CacheInvalidError, json.JSONDecodeError, OSError):
            seed = {}
    else:
        seed = {}
    table_dict = dict(seed)
    compute_nk(max_k, table_dict)
    table = NkTable([(k, table_dict[k]) for k in range(1, max_k + 1)])
    if cache_path is not None:
        _atomic_write_json(cache_path, table.to_json_dict())
    return table


def _atomic_write_json(path, payload) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=0, sort_keys=False)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
