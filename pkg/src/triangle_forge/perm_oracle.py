"""Brute force over symmetric groups.

Ground truth for the fast routines: the map ``phi`` from permutations to
step words, preimage counts of ``phi``, alternating permutations, zig-zag
numbers and Entringer numbers.  Sweeps over ``S_m`` are vectorized with
numpy in blocks of at most ``9!`` permutations.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .config import active_caps, check_cap
from .paths import Path

Permutation = tuple[int, ...]

_BASE = 9  # largest S_m materialized as a single block


def _check_perm(sigma: Sequence[int]) -> None:
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"not a permutation of 1..{len(sigma)}: {tuple(sigma)}")


def phi(sigma: Sequence[int]) -> Path:
    """Step word of a permutation of ``1..n+1``.

    In the list ``0, sigma(1), ..., sigma(n+1), 0`` the ``j``-th step is one
    less than the number of neighbours of ``j`` exceeding ``j``.
    """
    _check_perm(sigma)
    if len(sigma) < 2:
        raise ValueError("phi needs a permutation of size at least 2")
    ext = (0, *sigma, 0)
    pos = {v: i for i, v in enumerate(ext[1:-1], start=1)}
    out = []
    for j in range(1, len(sigma)):
        i = pos[j]
        out.append((ext[i - 1] > j) + (ext[i + 1] > j) - 1)
    return tuple(out)


def permutations(n: int) -> Iterator[Permutation]:
    """Permutations of ``1..n`` in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


@lru_cache(maxsize=None)
def _perm_array(m: int) -> np.ndarray:
    # all of S_m as an (m!, m) int8 array, built by inserting m into S_{m-1}
    if m == 0:
        return np.zeros((1, 0), dtype=np.int8)
    prev = _perm_array(m - 1)
    blocks = [np.insert(prev, pos, m, axis=1) for pos in range(m)]
    out = np.concatenate(blocks)
    out.setflags(write=False)
    return out


def perm_blocks(m: int) -> Iterator[np.ndarray]:
    """All of ``S_m`` as a stream of int8 blocks (order is not lexicographic)."""
    if m <= _BASE:
        yield _perm_array(m)
        return
    for block in perm_blocks(m - 1):
        for pos in range(m):
            yield np.insert(block, pos, m, axis=1)


def phi_codes(block: np.ndarray) -> np.ndarray:
    """Vectorized ``phi`` over a block of permutations, each word encoded in
    base 3 with digit ``step + 1`` at position ``j`` weighted by ``3**j``."""
    count, m = block.shape
    ext = np.zeros((count, m + 2), dtype=np.int8)
    ext[:, 1:-1] = block
    pos = np.empty((count, m + 1), dtype=np.int8)
    cols = np.broadcast_to(np.arange(1, m + 1, dtype=np.int8), block.shape)
    np.put_along_axis(pos, block.astype(np.intp), cols, axis=1)
    codes = np.zeros(count, dtype=np.int64)
    weight = 1
    for j in range(1, m):
        p = pos[:, j].astype(np.intp)[:, None]
        left = np.take_along_axis(ext, p - 1, axis=1)[:, 0]
        right = np.take_along_axis(ext, p + 1, axis=1)[:, 0]
        codes += weight * ((left > j).astype(np.int64) + (right > j))
        weight *= 3
    return codes


def encode_word(p: Sequence[int]) -> int:
    return sum((s + 1) * 3**j for j, s in enumerate(p))


def decode_word(code: int, n: int) -> Path:
    out = []
    for _ in range(n):
        code, d = divmod(code, 3)
        out.append(d - 1)
    return tuple(out)


@lru_cache(maxsize=None)
def phi_histogram(m: int) -> np.ndarray:
    """``hist[encode_word(p)]`` = number of ``sigma`` in ``S_m`` with ``phi(sigma) = p``."""
    if m < 2:
        raise ValueError("phi is defined on S_m for m >= 2")
    hist = np.zeros(3 ** (m - 1), dtype=np.int64)
    for block in perm_blocks(m):
        hist += np.bincount(phi_codes(block), minlength=hist.size)
    hist.setflags(write=False)
    return hist


def nu_bruteforce(p: Sequence[int], cap: int | None = None) -> int:
    """Number of permutations of ``S_{len(p)+1}`` mapped to ``p`` by ``phi``."""
    p = tuple(p)
    if any(s not in (-1, 0, 1) for s in p):
        raise ValueError(f"not a step word: {p}")
    m = len(p) + 1
    check_cap(m, active_caps().permutations if cap is None else cap, "permutation size")
    if m == 1:
        return 1  # only the identity of S_1, mapped to the empty word
    return int(phi_histogram(m)[encode_word(p)])


def is_alternating(sigma: Sequence[int]) -> bool:
    for j in range(len(sigma) - 2):
        if (sigma[j] < sigma[j + 1]) != (sigma[j + 1] > sigma[j + 2]):
            return False
    return True


def _alternating_mask(block: np.ndarray) -> np.ndarray:
    up = block[:, 1:] > block[:, :-1]
    return np.all(up[:, 1:] != up[:, :-1], axis=1)


@lru_cache(maxsize=None)
def _first_value_counts(m: int) -> tuple[int, ...]:
    # counts[v] = alternating sigma in S_m with sigma(1) = v > sigma(2)
    counts = np.zeros(m + 1, dtype=np.int64)
    for block in perm_blocks(m):
        keep = _alternating_mask(block) & (block[:, 0] > block[:, 1])
        counts += np.bincount(block[keep, 0].astype(np.intp), minlength=m + 1)
    return tuple(int(c) for c in counts)


def beta_bruteforce(n: int, cap: int | None = None) -> int:
    """Zig-zag number: alternating permutations of ``S_n`` starting with a descent."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < 2:
        return 1
    check_cap(n, active_caps().permutations if cap is None else cap, "permutation size")
    return sum(_first_value_counts(n))


def entringer_bruteforce(n: int, k: int, cap: int | None = None) -> int:
    """Alternating ``sigma`` in ``S_{n+1}`` with ``sigma(1) = k + 1 > sigma(2)``."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    if n == 0:
        return 1
    check_cap(n + 1, active_caps().permutations if cap is None else cap, "permutation size")
    return _first_value_counts(n + 1)[k + 1]


def alternating_descent_perms(m: int) -> set[Permutation]:
    """Alternating permutations of ``S_m`` with ``sigma(1) > sigma(2)`` (small ``m``)."""
    return {s for s in permutations(m) if is_alternating(s) and s[0] > s[1]}
