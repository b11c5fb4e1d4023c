"""Enumeration caps shared by the brute-force and path-enumeration code."""

from __future__ import annotations

import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace

ENV_CAP = "TRIANGLE_FORGE_CAP"


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Caps:
    paths: int = 16  # M_16 = 853,467 paths
    permutations: int = 9  # S_9 = 362,880 permutations
    rows: int = 120

    @classmethod
    def from_env(cls) -> Caps:
        caps = cls()
        raw = os.environ.get(ENV_CAP)
        if raw:
            try:
                caps = replace(caps, paths=int(raw))
            except ValueError:
                raise ValueError(f"{ENV_CAP} must be an integer, got {raw!r}") from None
        return caps


_active: ContextVar[Caps | None] = ContextVar("triangle_forge_caps", default=None)


def active_caps() -> Caps:
    caps = _active.get()
    return caps if caps is not None else Caps.from_env()


@contextmanager
def override_caps(**changes):
    """Temporarily replace fields of the active caps, e.g. ``override_caps(permutations=11)``."""
    token = _active.set(replace(active_caps(), **changes))
    try:
        yield _active.get()
    finally:
        _active.reset(token)


def check_cap(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise CapExceeded(f"enumeration too large: {what}={value} exceeds cap {limit}")
