"""Motzkin and Dyck paths: validation, enumeration and counting.

A path is a plain tuple of steps in ``{-1, 0, 1}`` (down, flat, up).
Tuples are immutable, so path edits always produce new paths.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .config import active_caps, check_cap

Path = tuple[int, ...]

STEPS = (-1, 0, 1)
_GLYPHS = {"U": 1, "F": 0, "D": -1}


def is_motzkin(p: Sequence[int]) -> bool:
    height = 0
    for step in p:
        height += step
        if height < 0:
            return False
    return height == 0


def is_dyck(p: Sequence[int]) -> bool:
    return 0 not in p and is_motzkin(p)


def count_zeros(p: Sequence[int]) -> int:
    return sum(1 for s in p if s == 0)


def _walk(n: int, steps: tuple[int, ...]) -> Iterator[Path]:
    # depth-first in step order, pruning prefixes that cannot return to 0
    buf = [0] * n

    def rec(i: int, height: int) -> Iterator[Path]:
        if i == n:
            if height == 0:
                yield tuple(buf)
            return
        remaining = n - i - 1
        for s in steps:
            h = height + s
            if 0 <= h <= remaining:
                buf[i] = s
                yield from rec(i + 1, h)

    return rec(0, 0)


def iter_motzkin(n: int, cap: int | None = None) -> Iterator[Path]:
    """Stream Motzkin paths of ``n`` steps in lexicographic order (-1 < 0 < 1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    check_cap(n, active_caps().paths if cap is None else cap, "n")
    return _walk(n, STEPS)


def enumerate_motzkin(n: int, cap: int | None = None) -> list[Path]:
    return list(iter_motzkin(n, cap))


def enumerate_dyck(n: int, cap: int | None = None) -> list[Path]:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n % 2:
        raise ValueError("no Dyck paths of odd length")
    check_cap(n, active_caps().paths if cap is None else cap, "n")
    return list(_walk(n, (-1, 1)))


def insert_flat(p: Path, i: int) -> Path:
    return p[:i] + (0,) + p[i:]


def flatten_cusp(p: Path, i: int) -> Path:
    """Replace the adjacent ``(1, -1)`` at positions ``i, i+1`` by a single 0."""
    if p[i : i + 2] != (1, -1):
        raise ValueError(f"no cusp at position {i} of {p}")
    return p[:i] + (0,) + p[i + 2 :]


class TailKind(enum.Enum):
    FLAT = "flat"  # ends in (0, -1_k), k >= 0
    CUSP = "cusp"  # ends in (1, -1_k), k >= 1


@dataclass(frozen=True)
class SuffixClass:
    kind: TailKind
    k: int

    @property
    def index(self) -> int:
        """Position of the class in the ordering (0), (1,-1), (0,-1), (1,-1,-1), ..."""
        return 2 * self.k if self.kind is TailKind.FLAT else 2 * self.k - 1


def suffix_class(p: Sequence[int]) -> SuffixClass:
    p = tuple(p)
    if not p or not is_motzkin(p):
        raise ValueError(f"suffix_class needs a nonempty Motzkin path, got {p}")
    k = 0
    while p[-1 - k] == -1:
        k += 1
    before = p[-1 - k]
    return SuffixClass(TailKind.FLAT if before == 0 else TailKind.CUSP, k)


def suffix_counts(n: int, cap: int | None = None) -> list[int]:
    """Class sizes of the Motzkin paths of ``n + 1`` steps, by suffix class."""
    if n < 1:
        raise ValueError("n must be positive")
    counts = Counter(suffix_class(p).index for p in iter_motzkin(n + 1, cap))
    return [counts[i] for i in range(n + 1)]


@lru_cache(maxsize=None)
def _motzkin_table(n: int) -> tuple[int, ...]:
    m = [1]
    for k in range(n):
        # M_{k+1} = M_k + sum_{i=0}^{k-1} M_i M_{k-1-i}
        m.append(m[k] + sum(m[i] * m[k - 1 - i] for i in range(k)))
    return tuple(m)


def motzkin_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return _motzkin_table(n)[n]


def catalan_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


def d_count(n: int, k: int) -> int:
    """Number of Motzkin paths of ``n`` steps with exactly ``k`` flat steps."""
    if k < 0 or n < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    if (n - k) % 2:
        return 0
    return comb(n, k) * catalan_number((n - k) // 2)


def format_path(p: Sequence[int]) -> str:
    return "(" + ",".join(str(s) for s in p) + ")"


def parse_path(text: str) -> Path:
    """Parse ``"(1,0,-1)"``, ``"1,0,-1"`` or the glyph form ``"U F D"``."""
    body = text.strip()
    if re.fullmatch(r"[UFDufd\s]*", body) and body.strip():
        return tuple(_GLYPHS[c] for c in body.upper() if not c.isspace())
    body = body.removeprefix("(").removesuffix(")").strip()
    if not body:
        return ()
    try:
        steps = tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"malformed path: {text!r}") from None
    if any(s not in STEPS for s in steps):
        raise ValueError(f"path steps must be -1, 0 or 1: {text!r}")
    return steps
