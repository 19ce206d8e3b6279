"""Size-bounded, thread-safe memo tables.

Every lookup and insert happens under a lock; the value itself is computed
outside it, so two threads may compute the same key concurrently.  That is
harmless because all cached functions are pure.
"""
from __future__ import annotations

import threading
from collections import OrderedDict
from typing import Callable, Hashable, TypeVar

V = TypeVar("V")

DEFAULT_MAXSIZE = 1_000_000

_registry: list["LRUCache"] = []


class LRUCache:
    def __init__(self, name: str, maxsize: int = DEFAULT_MAXSIZE) -> None:
        if maxsize <= 0:
            raise ValueError("cache size must be positive")
        self.name = name
        self.maxsize = maxsize
        self._data: OrderedDict[Hashable, object] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        _registry.append(self)

    def get_or_compute(self, key: Hashable, compute: Callable[[], V]) -> V:
        with self._lock:
            if key in self._data:
                self._data.move_to_end(key)
                self.hits += 1
                return self._data[key]  # type: ignore[return-value]
            self.misses += 1
        value = compute()
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.maxsize:
                self._data.popitem(last=False)
        return value

    def resize(self, maxsize: int) -> None:
        if maxsize <= 0:
            raise ValueError("cache size must be positive")
        with self._lock:
            self.maxsize = maxsize
            while len(self._data) > maxsize:
                self._data.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = self.misses = 0

    def __len__(self) -> int:
        return len(self._data)


def set_cache_size(maxsize: int) -> None:
    """Resize every registered cache."""
    for c in _registry:
        c.resize(maxsize)


def clear_caches() -> None:
    for c in _registry:
        c.clear()
