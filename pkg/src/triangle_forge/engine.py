"""Triangles generated by matrices.

Row ``n`` of a generated triangle is row ``n - 1`` times an ``n x (n+1)``
matrix.  For a fixed infinite matrix ``A`` (1-indexed, as a callable
``entry(i, j)``) that matrix is the upper-left block ``A[1..n, 1..n+1]``;
for a matrix sequence it is ``matrix_at(n)``.  Row 0 is the seed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .numerics import POLYNOMIAL, RATIONAL, Ring, format_value, parse_value

Entry = Callable[[int, int], Any]
Matrix = Sequence[Sequence[Any]]

_RINGS = {r.name: r for r in (RATIONAL, POLYNOMIAL)}


@dataclass(frozen=True)
class Triangle:
    rows: tuple[tuple[Any, ...], ...]
    ring: Ring = RATIONAL
    name: str = ""
    ragged: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if not self.ragged:
            for n, row in enumerate(self.rows):
                if len(row) != n + 1:
                    raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, n: int) -> tuple[Any, ...]:
        return self.rows[n]

    def column(self, m: int) -> list[Any]:
        return [row[m] for row in self.rows if len(row) > m]

    def map(self, fn: Callable[[Any], Any], ring: Ring = RATIONAL) -> Triangle:
        return Triangle(
            tuple(tuple(fn(v) for v in row) for row in self.rows),
            ring=ring,
            name=self.name,
            ragged=self.ragged,
        )

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "ring": self.ring.name,
            "rows": [[format_value(v) for v in row] for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str | dict) -> Triangle:
        obj = json.loads(text) if isinstance(text, str) else text
        rows = tuple(tuple(parse_value(v) for v in row) for row in obj["rows"])
        shaped = all(len(r) == n + 1 for n, r in enumerate(rows))
        return cls(rows, ring=_RINGS[obj["ring"]], name=obj["name"], ragged=not shaped)


def vec_mat(vec: Sequence[Any], mat: Matrix, ring: Ring = RATIONAL) -> tuple[Any, ...]:
    """Row vector times matrix, skipping zero matrix entries."""
    if len(mat) != len(vec):
        raise ValueError(f"vector of length {len(vec)} against {len(mat)} matrix rows")
    width = len(mat[0]) if mat else 0
    out = []
    for j in range(width):
        acc = ring.zero
        for v, row in zip(vec, mat):
            a = row[j]
            if a != 0:
                acc = acc + v * a
        out.append(acc)
    return tuple(out)


def mat_mul(a: Matrix, b: Matrix, ring: Ring = RATIONAL) -> list[list[Any]]:
    return [list(vec_mat(row, b, ring)) for row in a]


def submatrix(entry: Entry, rows: int, cols: int) -> list[list[Any]]:
    return [[entry(i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)]


def generate_triangle(
    entry: Entry, seed: Any = None, rows: int = 0, ring: Ring = RATIONAL, name: str = ""
) -> Triangle:
    """Triangle generated by the infinite matrix ``entry`` (1-indexed).

    ``t[n][m] = sum_k t[n-1][k] * entry(k+1, m+1)`` over ``k < n``.
    """
    return generate_triangle_seq(
        lambda n: submatrix(entry, n, n + 1), seed, rows, ring=ring, name=name
    )


def generate_triangle_seq(
    matrix_at: Callable[[int], Matrix],
    seed: Any = None,
    rows: int = 0,
    ring: Ring = RATIONAL,
    name: str = "",
) -> Triangle:
    """Triangle generated by a sequence of matrices; ``matrix_at(n)`` is ``n x (n+1)``."""
    if rows < 0:
        raise ValueError("rows must be non-negative")
    if rows == 0:
        return Triangle((), ring=ring, name=name)
    seed = ring.one if seed is None else seed
    out = [(seed * ring.one,)]
    for n in range(1, rows):
        mat = matrix_at(n)
        shape = (len(mat), len(mat[0]) if mat else 0)
        if shape != (n, n + 1) or any(len(r) != n + 1 for r in mat):
            raise ValueError(f"matrix_at({n}) has shape {shape}, expected {(n, n + 1)}")
        out.append(vec_mat(out[-1], mat, ring))
    return Triangle(tuple(out), ring=ring, name=name)


@dataclass(frozen=True)
class WeightRecursion:
    """Coefficients of a path weight ``f`` satisfying, for paths of ``n`` steps,

    * ``f(lam, 0, -1_k) = b(n, k) * f(lam, -1_k)``
    * ``f(lam, 1, -1_k) = c(n, k) * f(lam, 0, -1_{k-1})``

    with ``seed_value = f((0,))``.
    """

    b: Callable[[int, int], Any]
    c: Callable[[int, int], Any]
    seed_value: Any = 1


def motzkin_matrix(w: WeightRecursion, n: int) -> list[list[Any]]:
    """The ``n x (n+1)`` matrix for step ``n`` of the Motzkin weight engine.

    Column 1 is ``b(n,0)`` throughout; column ``2k+1`` holds ``b(n,k)`` from
    row ``2k`` down; column ``2k`` holds ``c(n,k)`` in row ``2k-1`` only.
    """
    mat: list[list[Any]] = [[0] * (n + 1) for _ in range(n)]
    b0 = w.b(n, 0)
    for i in range(1, n + 1):
        mat[i - 1][0] = b0
        for j in range(2, n + 2):
            k, odd = divmod(j, 2)
            if odd and i >= 2 * k:
                mat[i - 1][j - 1] = w.b(n, k)
            elif not odd and i == 2 * k - 1:
                mat[i - 1][j - 1] = w.c(n, k)
    return mat


def motzkin_weight_triangle(
    w: WeightRecursion, rows: int, ring: Ring = RATIONAL, name: str = ""
) -> Triangle:
    """Triangle whose row ``n`` times ``w.seed_value`` lists the sums of ``f``
    over the Motzkin paths of ``n + 1`` steps, grouped by suffix class in the
    order (0), (1,-1), (0,-1), (1,-1,-1), ...

    The first column therefore holds ``b(n,0) * sum_{M_n} f / f((0,))``.
    """
    for n in range(1, rows):
        if w.b(n, 0) == 0:
            raise ValueError(f"degenerate recursion: b({n}, 0) = 0")
    return generate_triangle_seq(
        lambda n: motzkin_matrix(w, n), ring.one, rows, ring=ring, name=name
    )


def dyck_matrix(a: Callable[[int, int], Any], n: int) -> list[list[Any]]:
    return [
        [a(n, j - 1) if j <= i + 1 else 0 for j in range(1, n + 2)]
        for i in range(1, n + 1)
    ]


def dyck_weight_triangle(
    a: Callable[[int, int], Any],
    seed_value: Any = 1,
    rows: int = 0,
    ring: Ring = RATIONAL,
    name: str = "",
) -> Triangle:
    """Dyck analogue of :func:`motzkin_weight_triangle`.

    For ``f`` with ``f(lam, 1, -1_{k+1}) = a(n, k) * f(lam, -1_k)`` whenever
    ``(lam, -1_k)`` is a Dyck path of ``2n`` steps, row ``n`` times
    ``seed_value = f(1, -1)`` lists the sums of ``f`` over Dyck paths of
    ``2n + 2`` steps ending in ``(1, -1_k)``, ``k = 1..n+1``.
    """
    for n in range(1, rows):
        if a(n, 0) == 0:
            raise ValueError(f"degenerate recursion: a({n}, 0) = 0")
    return generate_triangle_seq(
        lambda n: dyck_matrix(a, n), ring.one, rows, ring=ring, name=name
    )
