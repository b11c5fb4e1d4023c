"""Fast exact preimage counts ``nu`` and the product weight ``rho``.

``nu`` follows the insertion recursion: appending a flat step doubles the
count, appending a down step sums over the positions whose step can be
lowered by one, and a word ending in an up step has no preimage.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .paths import Path, is_motzkin


@lru_cache(maxsize=None)
def _nu(p: Path) -> int:
    if not p:
        return 1
    *head, last = p
    if last == 1:
        return 0
    head = tuple(head)
    if last == 0:
        return 2 * _nu(head)
    total = 0
    for j, s in enumerate(head):
        if s == -1:
            continue
        lowered = _nu(head[:j] + (s - 1,) + head[j + 1 :])
        total += 2 * lowered if s == 0 else lowered
    return total


def nu(p: Sequence[int]) -> int:
    """Number of permutations of ``S_{n+1}`` whose step word is ``p``."""
    p = tuple(p)
    if any(s not in (-1, 0, 1) for s in p):
        raise ValueError(f"not a step word: {p}")
    return _nu(p)


def nu_suffix_flat(nu_base: int, k: int) -> int:
    """``nu(lam, 0, -1_k)`` from ``nu_base = nu(lam, -1_k)``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return 2 * (k + 1) * nu_base


def nu_suffix_cusp(nu_flat: int, k: int) -> int:
    """``nu(lam, 1, -1_k)`` from ``nu_flat = nu(lam, 0, -1_{k-1})``."""
    if k < 1:
        raise ValueError("k must be positive")
    value = Fraction(k + 1, 2) * nu_flat
    if value.denominator != 1:
        raise ArithmeticError("cusp suffix divisibility violated")
    return int(value)


def rho(p: Sequence[int]) -> int:
    """Product over ``j`` of (partial sum of the first ``j`` steps + 2j + 3)."""
    out = 1
    height = 0
    for j, s in enumerate(p, start=1):
        height += s
        out *= height + 2 * j + 3
    return out


def weight_f(p: Sequence[int]) -> Fraction:
    if not is_motzkin(p):
        raise ValueError(f"weight_f needs a Motzkin path, got {tuple(p)}")
    return Fraction(nu(p), rho(p))
