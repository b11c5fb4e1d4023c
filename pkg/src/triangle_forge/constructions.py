"""Named triangles and sequences built on the triangle engine.

Each construction is exact.  Triangles over the polynomial ring carry
``1/x`` entries in their even-numbered columns; their first column is
always a true polynomial, and that is checked whenever it is extracted.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import comb, factorial, floor
from typing import Any, Callable

from .config import active_caps, check_cap
from .engine import (
    Triangle,
    WeightRecursion,
    generate_triangle,
    generate_triangle_seq,
    motzkin_weight_triangle,
    submatrix,
    vec_mat,
)
from .numerics import POLYNOMIAL, X, Polynomial, poly_eval
from .paths import catalan_number, motzkin_number

INV_X = Polynomial.monomial(1, -1)


class TriangleId(enum.Enum):
    PASCAL = "pascal"
    MOTZKIN_TRI = "motzkin-ex4"
    CATALAN_TRI = "catalan-ex5"
    POWERS2 = "powers2-ex2"
    FACTORIAL_FLAT = "flat-ex1"
    THM_1_1 = "thm-1-1"
    COR_2_4 = "cor-2-4"
    THM_3_2_POLY = "thm-3-2"
    COR_4_6 = "cor-4-6"
    THM_5_3_POLY = "thm-5-3"
    ENTRINGER_5_4 = "entringer-5-4"
    ENTRINGER_5_5 = "entringer-5-5"
    ENTRINGER_5_6 = "entringer-5-6"


class SequenceId(enum.Enum):
    MOTZKIN = "motzkin"
    CATALAN = "catalan"
    TANGENT = "tangent"
    BERNOULLI = "bernoulli"
    SECANT = "secant"
    EULER = "euler"
    ZIGZAG_BETA = "beta"
    ZETA_COEFF = "zeta-coeff"
    B_N_THM48 = "b-thm48"


# Infinite matrices, 1-indexed entry(i, j).


def flat_entry(i: int, j: int) -> int:
    return 1


def powers2_entry(i: int, j: int) -> int:
    if i == j == 1:
        return 2
    return 1 if i == j - 1 else 0


def pascal_entry(i: int, j: int) -> int:
    return 1 if i <= j <= i + 1 else 0


def motzkin_entry(i: int, j: int) -> int:
    return 1 if i - 1 <= j <= i + 1 else 0


def catalan_entry(i: int, j: int) -> int:
    return 1 if j <= i + 1 else 0


def tangent_entry(i: int, j: int) -> int:
    return j * (j + 1) if i >= j - 1 else 0


def suffix_count_entry(i: int, j: int) -> int:
    if i == j - 1:
        return 1
    return 1 if j % 2 and i >= j - 1 else 0


def preimage_entry(i: int, j: int) -> Fraction:
    # odd columns hold j + 1 = 2(k+1) from row j - 1 down; even columns
    # hold (j + 2)/4 on the superdiagonal only
    if j % 2:
        return Fraction(j + 1) if i >= j - 1 else Fraction(0)
    return Fraction(j + 2, 4) if i == j - 1 else Fraction(0)


def interleaved_entringer_entry(i: int, j: int) -> int:
    if i % 2 and i <= j:
        return 1
    return 1 if j % 2 and j <= i + 1 else 0


def capped_index_entry(i: int, j: int) -> int:
    return min(j, i + 1)


def entringer_step_matrix(n: int) -> list[list[int]]:
    """``n x (n+1)`` 0/1 matrix with ones where ``i + j > n``."""
    return [[1 if i + j > n else 0 for j in range(1, n + 2)] for i in range(1, n + 1)]


def entringer_double_step_matrix(n: int) -> list[list[int]]:
    """First ``n`` rows and ``n + 2`` columns of ``min(j, i+1)``."""
    return submatrix(capped_index_entry, n, n + 2)


# Weight recursions for the Motzkin engine.

UNIT_WEIGHTS = WeightRecursion(b=lambda n, k: 1, c=lambda n, k: 1, seed_value=1)
PREIMAGE_WEIGHTS = WeightRecursion(
    b=lambda n, k: 2 * (k + 1), c=lambda n, k: Fraction(k + 1, 2), seed_value=2
)
FLAT_STEP_WEIGHTS = WeightRecursion(b=lambda n, k: X, c=lambda n, k: INV_X, seed_value=X)
TANGENT_POLY_WEIGHTS = WeightRecursion(
    b=lambda n, k: 2 * (k + 1) * X,
    c=lambda n, k: Fraction(k + 1, 2) * INV_X,
    seed_value=2 * X,
)


def _zeta_step_b(n: int, k: int) -> Fraction:
    return Fraction(2 * (k + 1) * (2 * n + 4 - k), (2 * n + 4) * (2 * n + 5))


# weight nu/rho: the recursion coefficients depend on the path length n
NU_OVER_RHO_WEIGHTS = WeightRecursion(
    b=_zeta_step_b, c=lambda n, k: _zeta_step_b(n, k) / 4, seed_value=Fraction(2, 5)
)


def _check_rows(rows: int) -> None:
    if rows < 0:
        raise ValueError("rows must be non-negative")
    check_cap(rows, active_caps().rows, "rows")


def named_triangle(tid: TriangleId | str, rows: int) -> Triangle:
    tid = TriangleId(tid)
    _check_rows(rows)
    name = tid.value
    fixed: dict[TriangleId, Callable[[int, int], Any]] = {
        TriangleId.PASCAL: pascal_entry,
        TriangleId.MOTZKIN_TRI: motzkin_entry,
        TriangleId.CATALAN_TRI: catalan_entry,
        TriangleId.POWERS2: powers2_entry,
        TriangleId.FACTORIAL_FLAT: flat_entry,
        TriangleId.THM_1_1: tangent_entry,
        TriangleId.COR_2_4: suffix_count_entry,
        TriangleId.COR_4_6: preimage_entry,
        TriangleId.ENTRINGER_5_6: interleaved_entringer_entry,
    }
    if tid in fixed:
        return generate_triangle(fixed[tid], 1, rows, name=name)
    if tid is TriangleId.THM_3_2_POLY:
        return motzkin_weight_triangle(FLAT_STEP_WEIGHTS, rows, ring=POLYNOMIAL, name=name)
    if tid is TriangleId.THM_5_3_POLY:
        return motzkin_weight_triangle(TANGENT_POLY_WEIGHTS, rows, ring=POLYNOMIAL, name=name)
    if tid is TriangleId.ENTRINGER_5_4:
        return generate_triangle_seq(entringer_step_matrix, 1, rows, name=name)
    if tid is TriangleId.ENTRINGER_5_5:
        return Triangle(tuple(secant_tangent_rows(rows)), name=name, ragged=True)
    raise ValueError(f"unknown triangle id {tid!r}")


def secant_tangent_rows(count: int) -> list[tuple[Fraction, ...]]:
    """Vectors of lengths 1, 3, 5, ...: each is the previous times ``entringer_double_step_matrix(2n-1)``."""
    if count <= 0:
        return []
    out = [(Fraction(1),)]
    for n in range(1, count):
        out.append(vec_mat(out[-1], entringer_double_step_matrix(2 * n - 1)))
    return out


def _as_int(value: Fraction, what: str) -> int:
    if Fraction(value).denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return int(value)


def tangent_polynomial(n: int) -> Polynomial:
    """Sum of ``nu(p) x^(number of flat steps of p)`` over Motzkin paths of ``n`` steps,
    read off the first column of the ``thm-5-3`` triangle."""
    p = named_triangle(TriangleId.THM_5_3_POLY, n + 1)[n][0]
    if not p.is_polynomial():
        raise ArithmeticError(f"first column entry {n} has negative powers: {p}")
    return p


def flat_step_polynomial(n: int) -> Polynomial:
    p = named_triangle(TriangleId.THM_3_2_POLY, n + 1)[n][0]
    if not p.is_polynomial():
        raise ArithmeticError(f"first column entry {n} has negative powers: {p}")
    return p


def bernoulli(n: int) -> Fraction:
    """``B_n`` with ``B_1 = -1/2``, by the binomial recurrence."""
    if n < 0:
        raise ValueError("n must be non-negative")
    bs = [Fraction(1)]
    for m in range(1, n + 1):
        if m > 1 and m % 2:
            bs.append(Fraction(0))
            continue
        s = sum(comb(m + 1, k) * bs[k] for k in range(m))
        bs.append(-s / (m + 1))
    return bs[n]


def tangent_number(n: int) -> int:
    """``tan^(2n-1)(0)`` from ``|B_2n| 4^n (4^n - 1) / (2n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    q = abs(bernoulli(2 * n)) * 4**n * (4**n - 1) / (2 * n)
    return _as_int(q, "tangent number")


def zeta_step_matrix(m: int) -> list[list[Fraction]]:
    """The ``(m-2) x (m-1)`` factor used at step ``m`` of the zeta product.

    Odd column ``j`` holds ``(j+1)(4m-j+1)/8`` in rows ``i >= j - 1``; even
    column ``j`` holds ``(j+2)(4m-j)/32`` in row ``j - 1`` only.
    """
    if m < 3:
        raise ValueError("the zeta product starts at m = 3")
    rows, cols = m - 2, m - 1
    mat = [[Fraction(0)] * cols for _ in range(rows)]
    for i in range(1, rows + 1):
        for j in range(1, cols + 1):
            if j % 2 and i >= j - 1:
                mat[i - 1][j - 1] = Fraction((j + 1) * (4 * m - j + 1), 8)
            elif j % 2 == 0 and i == j - 1:
                mat[i - 1][j - 1] = Fraction((j + 2) * (4 * m - j), 32)
    return mat


def thm48_b(n: int) -> Fraction:
    """First component of the running product of :func:`zeta_step_matrix` for ``m = 3..n``."""
    if n < 3:
        raise ValueError("n must be at least 3")
    vec: tuple[Fraction, ...] = (Fraction(1),)
    for m in range(3, n + 1):
        vec = vec_mat(vec, zeta_step_matrix(m))
    return vec[0]


def zeta_even_coefficient(n: int) -> Fraction:
    """Rational ``q`` with ``zeta(2n) = q * pi^(2n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    if n < 3:
        # the matrix product is empty here; use |B_2n| (2 pi)^2n / (2 (2n)!)
        return abs(bernoulli(2 * n)) * 4**n / (2 * factorial(2 * n))
    return Fraction(4 ** (n - 1), factorial(2 * n) * (4**n - 1)) * thm48_b(n)


def bernoulli_via_paths(n: int) -> Fraction:
    """``B_2n`` from the zeta product, for ``n >= 3``."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return (-1) ** (n + 1) * thm48_b(n) / (2 * (4**n - 1))


def tangent_via_paths(n: int) -> int:
    if n < 3:
        raise ValueError("n must be at least 3")
    return _as_int(Fraction(4 ** (n - 1), n) * thm48_b(n), "tangent number")


def entringer_rows(n: int) -> list[list[int]]:
    """Rows ``0..n`` of Entringer numbers via ``E[n+1][k+1] = sum_{j=n-k}^{n} E[n][j]``."""
    rows = [[1]]
    for m in range(n):
        prev = rows[-1]
        row = [0]
        for k in range(m + 1):
            row.append(sum(prev[m - k : m + 1]))
        rows.append(row)
    return rows


def entringer_boustrophedon(n: int) -> list[list[int]]:
    """Same table via ``E[n+1][k+1] = E[n+1][k] + E[n][n-k]``."""
    rows = [[1]]
    for m in range(n):
        prev = rows[-1]
        row = [0]
        for k in range(m + 1):
            row.append(row[k] + prev[m - k])
        rows.append(row)
    return rows


def entringer(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    return entringer_rows(n)[n][k]


def zigzag(n: int) -> int:
    return entringer(n, n)


def secant_number(n: int) -> int:
    return zigzag(2 * n)


def euler_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n % 2:
        return 0
    return (-1) ** (n // 2) * secant_number(n // 2)


def floor_extract_tangent(n: int) -> int:
    """``tan^(n+1)(0)`` as the floor of the tangent polynomial at ``1/(n+1)!``."""
    if n < 0 or n % 2:
        raise ValueError("n must be a non-negative even integer")
    value = poly_eval(tangent_polynomial(n), Fraction(1, factorial(n + 1)))
    return floor(value)


_SEQUENCES: dict[SequenceId, tuple[int, Callable[[int], Any]]] = {
    SequenceId.MOTZKIN: (0, motzkin_number),
    SequenceId.CATALAN: (0, catalan_number),
    SequenceId.TANGENT: (1, tangent_number),
    SequenceId.BERNOULLI: (0, bernoulli),
    SequenceId.SECANT: (0, secant_number),
    SequenceId.EULER: (0, euler_number),
    SequenceId.ZIGZAG_BETA: (0, zigzag),
    SequenceId.ZETA_COEFF: (1, zeta_even_coefficient),
    SequenceId.B_N_THM48: (3, thm48_b),
}


def sequence(sid: SequenceId | str, count: int) -> list[tuple[int, Any]]:
    """First ``count`` terms as ``(index, value)`` pairs, starting at the
    sequence's natural first index."""
    sid = SequenceId(sid)
    if count < 0:
        raise ValueError("count must be non-negative")
    start, fn = _SEQUENCES[sid]
    return [(i, fn(i)) for i in range(start, start + count)]
