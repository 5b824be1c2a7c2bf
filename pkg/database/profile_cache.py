"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - PROFILE CACHE
═══════════════════════════════════════════════════════════════════════════════
Module: database/profile_cache.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    Memoizes ParameterProfiles by canonical key so that every isomorphism
    class is solved once per run, and persists them between runs.

FILE FORMAT:
    One line per graph, sorted by key on save:

        <canonical-graph6> <ω> <χ> <h> <ψ> <α> <b> <B> <Γ> <γ>

    Blank lines and lines starting with '#' are ignored on load.

RULES:
    - A key that is already present may only be written again with an
      identical profile; anything else is solver nondeterminism and raises
      ConsistencyError
    - Spot checks recompute random entries from scratch and compare

USAGE:
    from database.profile_cache import ProfileCache

    cache = ProfileCache.load("data/cache/profiles.txt")
    profile = cache.get_or_compute(graph)
    cache.save("data/cache/profiles.txt")

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import shutil
import logging
import threading
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import EXPORT_CONFIG, VERIFICATION_CONFIG
from core.graph import Graph, Graph6ParseError, parse_graph6
from core.canonical import CanonicalKey, canonical_key
from core.profile import ConsistencyError, ParameterProfile, full_profile
from utils.logger import log_run_event

# Configure logging
logger = logging.getLogger(__name__)


class CacheFormatError(ValueError):
    """A cache file line could not be read."""

    def __init__(self, message: str, line_number: int):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


# ═══════════════════════════════════════════════════════════════════════════════
# PROFILE CACHE CLASS
# ═══════════════════════════════════════════════════════════════════════════════

class ProfileCache:
    """
    Map from canonical key to ParameterProfile.

    Reads and writes are guarded by a re-entrant lock so a cache can be
    shared by threads; process workers receive a snapshot and hand back
    their new entries for merge().

    Example:
        >>> cache = ProfileCache()
        >>> cache.get_or_compute(Graph.cycle(4)).psi
        3
    """

    def __init__(self, entries: Optional[Dict[CanonicalKey, ParameterProfile]] = None):
        self._entries: Dict[CanonicalKey, ParameterProfile] = dict(entries or {})
        self._new: Dict[CanonicalKey, ParameterProfile] = {}
        self._lock = threading.RLock()

        # Statistics
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: CanonicalKey) -> bool:
        return key in self._entries

    # ─────────────────────────────────────────────────────────────────────────
    # READ / WRITE
    # ─────────────────────────────────────────────────────────────────────────

    def get(self, key: CanonicalKey) -> Optional[ParameterProfile]:
        with self._lock:
            return self._entries.get(key)

    def put(self, key: CanonicalKey, profile: ParameterProfile) -> bool:
        """
        Store a profile.

        Returns:
            True if the key was new

        Raises:
            ConsistencyError: If the key holds a different profile
        """
        with self._lock:
            existing = self._entries.get(key)
            if existing is not None:
                if existing != profile:
                    raise ConsistencyError(
                        f"Cache collision on {key}: {existing.as_tuple()} != {profile.as_tuple()}"
                    )
                return False
            self._entries[key] = profile
            self._new[key] = profile
            return True

    def get_or_compute(self, g: Graph, key: Optional[CanonicalKey] = None) -> ParameterProfile:
        """Cached profile of g, computing and storing it on a miss."""
        key = key or canonical_key(g)
        with self._lock:
            cached = self._entries.get(key)
            if cached is not None:
                self.hits += 1
                return cached
            self.misses += 1
        profile = full_profile(g)
        self.put(key, profile)
        return profile

    def merge(self, other: Union["ProfileCache", Dict[CanonicalKey, ParameterProfile]]) -> int:
        """
        Add every entry of other (collision-equality rule applies).

        Returns:
            Number of keys that were new
        """
        items = other.entries() if isinstance(other, ProfileCache) else list(other.items())
        added = 0
        with self._lock:
            for key, profile in items:
                if self.put(key, profile):
                    added += 1
        return added

    def entries(self) -> List[Tuple[CanonicalKey, ParameterProfile]]:
        """All entries sorted by key."""
        with self._lock:
            return sorted(self._entries.items())

    def snapshot(self) -> Dict[CanonicalKey, ParameterProfile]:
        with self._lock:
            return dict(self._entries)

    def drain_new(self) -> Dict[CanonicalKey, ParameterProfile]:
        """Entries added since construction or the previous drain."""
        with self._lock:
            new, self._new = self._new, {}
            return new

    # ─────────────────────────────────────────────────────────────────────────
    # SPOT CHECKS
    # ─────────────────────────────────────────────────────────────────────────

    def spot_check(
        self,
        count: Optional[int] = None,
        rng: Optional[np.random.Generator] = None,
    ) -> List[CanonicalKey]:
        """
        Recompute random entries from scratch.

        Args:
            count: Entries to check (default spot_check_count, capped at size)
            rng: numpy Generator (default seeded from random_seed)

        Returns:
            Keys whose cached profile differs from the recomputation
        """
        count = VERIFICATION_CONFIG["spot_check_count"] if count is None else count
        rng = rng or np.random.default_rng(VERIFICATION_CONFIG["random_seed"])
        keys = [key for key, _ in self.entries()]
        if not keys or count <= 0:
            return []

        chosen = rng.choice(len(keys), size=min(count, len(keys)), replace=False)
        mismatched = []
        for index in sorted(int(i) for i in chosen):
            key = keys[index]
            fresh = full_profile(parse_graph6(key))
            if fresh != self._entries[key]:
                logger.error(
                    "Cache spot check mismatch",
                    extra={"extra_data": {"key": key,
                                          "cached": self._entries[key].as_tuple(),
                                          "fresh": fresh.as_tuple()}},
                )
                mismatched.append(key)
        logger.info(f"Spot-checked {len(chosen)} cache entries, {len(mismatched)} mismatched")
        return mismatched

    # ─────────────────────────────────────────────────────────────────────────
    # PERSISTENCE
    # ─────────────────────────────────────────────────────────────────────────

    @staticmethod
    def parse_lines(lines: Iterable[str]) -> Iterator[Tuple[CanonicalKey, ParameterProfile]]:
        """
        Parse cache lines.

        Raises:
            CacheFormatError: On the first corrupt line
        """
        for line_number, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 10:
                raise CacheFormatError(f"expected 10 fields, got {len(parts)}", line_number)
            key = parts[0]
            try:
                graph = parse_graph6(key)
            except Graph6ParseError as error:
                raise CacheFormatError(f"bad key '{key}': {error.reason}", line_number) from error
            expected = canonical_key(graph)
            if key != expected:
                raise CacheFormatError(
                    f"key '{key}' is not canonical (canonical form is '{expected}')", line_number)
            try:
                values = [int(v) for v in parts[1:]]
            except ValueError as error:
                raise CacheFormatError(f"non-integer parameter value in '{line}'", line_number) from error
            if any(v < 0 for v in values):
                raise CacheFormatError(f"negative parameter value in '{line}'", line_number)
            yield key, ParameterProfile.from_tuple(values)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "ProfileCache":
        """
        Load a cache file (a missing file yields an empty cache).

        Raises:
            CacheFormatError: On a corrupt line
            ConsistencyError: If one key appears twice with different profiles
        """
        cache = cls()
        path = Path(path)
        if not path.exists():
            logger.info(f"No cache at {path}, starting empty")
            return cache
        with open(path, "r", encoding="ascii") as handle:
            for key, profile in cls.parse_lines(handle):
                cache.put(key, profile)
        cache.drain_new()
        logger.info(f"Loaded {len(cache)} cached profiles from {path}")
        return cache

    def save(self, path: Union[str, Path]) -> int:
        """
        Write all entries sorted by key.

        Returns:
            Number of entries written
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        entries = self.entries()
        tmp = path.with_suffix(path.suffix + ".tmp")
        with open(tmp, "w", encoding="ascii") as handle:
            for key, profile in entries:
                handle.write(key + " " + " ".join(str(v) for v in profile.as_tuple()) + "\n")
        tmp.replace(path)

        log_run_event("CACHE_SAVE", resource=str(path), details={"entries": len(entries)})
        logger.info(f"Saved {len(entries)} cached profiles to {path}")
        return len(entries)

    def backup(self, path: Union[str, Path], backup_name: Optional[str] = None) -> Optional[str]:
        """
        Copy an existing cache file next to itself before it is overwritten.

        Returns:
            Path of the copy, or None if there was nothing to back up
        """
        path = Path(path)
        if not path.exists():
            return None
        if backup_name is None:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            backup_name = f"{path.stem}_{timestamp}{path.suffix}"
        target = path.parent / backup_name
        shutil.copy2(path, target)
        logger.info(f"Cache backup created: {target}")
        return str(target)

    def get_statistics(self) -> Dict[str, Any]:
        with self._lock:
            return {
                "entries": len(self._entries),
                "hits": self.hits,
                "misses": self.misses,
            }


# ═══════════════════════════════════════════════════════════════════════════════
# CONVENIENCE FUNCTIONS
# ═══════════════════════════════════════════════════════════════════════════════

def load_cache(path: Optional[Union[str, Path]] = None) -> ProfileCache:
    """Load the cache at path (default EXPORT_CONFIG["default_cache"])."""
    return ProfileCache.load(path or EXPORT_CONFIG["default_cache"])


def save_cache(cache: ProfileCache, path: Optional[Union[str, Path]] = None) -> int:
    """Save the cache to path (default EXPORT_CONFIG["default_cache"])."""
    return cache.save(path or EXPORT_CONFIG["default_cache"])


__all__ = [
    "CacheFormatError",
    "ProfileCache",
    "load_cache",
    "save_cache",
]
