"""Cross-method checks and the Monte Carlo estimate of the cyclic-min integral.

The integral of ``xi(x) = prod_i min(x_i, x_{i+1 mod n})`` over the unit
``n``-cube equals ``(4^n - 1)`` times the rational coefficient of
``pi^(2n)`` in ``zeta(2n)``.  :func:`exact_xi_integral` evaluates it as a
weighted sum over Motzkin paths; :func:`mc_xi_integral` samples it.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable

import numpy as np

from . import constructions as C
from .config import override_caps
from .engine import dyck_weight_triangle, motzkin_weight_triangle
from .numerics import display_value, poly_eval
from .nu_rho import nu, weight_f
from .paths import (
    catalan_number,
    count_zeros,
    d_count,
    enumerate_dyck,
    enumerate_motzkin,
    is_motzkin,
    motzkin_number,
    suffix_counts,
)
from .perm_oracle import (
    alternating_descent_perms,
    beta_bruteforce,
    entringer_bruteforce,
    nu_bruteforce,
    permutations,
    phi,
)

CHUNK = 1 << 16  # samples per generator block; a multiple of 4 keeps Philox aligned


def exact_xi_integral(n: int) -> Fraction:
    if n < 2:
        raise ValueError("n must be at least 2")
    if n == 2:
        return Fraction(1, 6)
    return sum((weight_f(p) for p in enumerate_motzkin(n - 2)), Fraction(0)) / 6


@dataclass(frozen=True)
class McEstimate:
    estimate: float
    standard_error: float
    samples: int
    seed: int


def _uniform_block(n: int, seed: int, start: int, count: int) -> np.ndarray:
    """Points ``start .. start+count-1`` of the stream keyed by ``seed``.

    Coordinate ``d`` of sample ``s`` is the Philox output with index
    ``s * n + d``, so any sample is reproducible from ``(seed, s)`` alone.
    """
    first = start * n
    bg = np.random.Philox(key=seed)
    bg.advance(first // 4)
    raw = bg.random_raw(first % 4 + count * n)[first % 4 :]
    u = ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53
    return u.reshape(count, n)


def _xi_chunk(n: int, seed: int, start: int, count: int) -> tuple[float, float]:
    x = _uniform_block(n, seed, start, count)
    vals = np.prod(np.minimum(x, np.roll(x, -1, axis=1)), axis=1)
    return float(np.sum(vals)), float(np.sum(vals * vals))


def mc_xi_integral(n: int, samples: int, seed: int, workers: int = 1) -> McEstimate:
    """Monte Carlo mean and standard error of ``xi`` over the open unit cube.

    Chunks are fixed by ``samples`` alone and their partial sums are combined
    with ``math.fsum``, so the result does not depend on ``workers``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if samples < 100:
        raise ValueError("need at least 100 samples")
    seed = int(seed) % 2**64
    starts = range(0, samples, CHUNK)
    jobs = [(n, seed, s, min(CHUNK, samples - s)) for s in starts]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda a: _xi_chunk(*a), jobs))
    else:
        parts = [_xi_chunk(*a) for a in jobs]
    total = math.fsum(p[0] for p in parts)
    total_sq = math.fsum(p[1] for p in parts)
    mean = total / samples
    var = max(total_sq - samples * mean * mean, 0.0) / (samples - 1)
    return McEstimate(mean, math.sqrt(var / samples), samples, seed)


MC_SEEDS = (20240607, 1, 0xC0FFEE, 2**63 + 12345)


def mc_agrees(n: int, samples: int = 10**6, seeds: Iterable[int] = MC_SEEDS, sigmas: float = 4.0):
    """Per-seed verdicts ``|estimate - exact| < sigmas * stderr`` and the 3-of-4 rule."""
    exact = float(exact_xi_integral(n))
    results = []
    for seed in seeds:
        est = mc_xi_integral(n, samples, seed)
        results.append((est, abs(est.estimate - exact) < sigmas * est.standard_error))
    passed = sum(ok for _, ok in results)
    return passed >= len(results) - 1, results


# verification suite


@dataclass
class CheckRecord:
    name: str
    parameters: str
    expected: str
    actual: str
    passed: bool
    elapsed: float


@dataclass
class VerifyReport:
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    def to_json(self) -> str:
        return json.dumps([asdict(r) for r in self.records], indent=1)

    def to_table(self) -> str:
        width = max((len(r.name) for r in self.records), default=4)
        lines = [f"{'status':6}  {'check':{width}}  params  expected | actual"]
        for r in self.records:
            status = "PASS" if r.passed else "FAIL"
            lines.append(
                f"{status:6}  {r.name:{width}}  {r.parameters}  {r.expected} | {r.actual}"
            )
        failed = sum(not r.passed for r in self.records)
        lines.append(f"{len(self.records) - failed}/{len(self.records)} checks passed")
        return "\n".join(lines)


Check = tuple[str, str, Callable[[], tuple[object, object]]]

_DEPTH = {1: (6, 7), 2: (8, 9), 3: (10, 11)}


def _render(obj: object) -> str:
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in obj) + "]"
    if isinstance(obj, (int, Fraction)) and not isinstance(obj, bool):
        return display_value(obj)
    return str(obj)


def _run(check: Check) -> CheckRecord:
    name, params, fn = check
    t0 = time.perf_counter()
    try:
        expected, actual = fn()
        passed = expected == actual
        expected, actual = _render(expected), _render(actual)
    except Exception as exc:  # failures are reported, never raised
        expected, actual, passed = "no error", f"{type(exc).__name__}: {exc}", False
    return CheckRecord(name, params, expected, actual, passed, time.perf_counter() - t0)


def _golden_checks() -> list[Check]:
    tri = C.named_triangle
    T = C.TriangleId
    return [
        ("zeta(6) coefficient = 1/945", "n=3", lambda: (Fraction(1, 945), C.zeta_even_coefficient(3))),
        ("zeta(8) coefficient = 1/9450", "n=4", lambda: (Fraction(1, 9450), C.zeta_even_coefficient(4))),
        ("zeta(2), zeta(4) coefficients", "n=1,2",
         lambda: ((Fraction(1, 6), Fraction(1, 90)), (C.zeta_even_coefficient(1), C.zeta_even_coefficient(2)))),
        ("thm-1-1 row 4", "rows=5",
         lambda: ((7936, 23808, 44352, 57600, 43200), tri(T.THM_1_1, 5)[4])),
        ("entringer-5-4 row 5", "rows=6",
         lambda: ((16, 32, 46, 56, 61, 61), tri(T.ENTRINGER_5_4, 6)[5])),
        ("cor-2-4 row 5", "rows=6", lambda: ((21, 9, 12, 5, 3, 1), tri(T.COR_2_4, 6)[5])),
        ("phi(2,1,4,5,3)", "", lambda: ((1, -1, 0, 0), phi((2, 1, 4, 5, 3)))),
        ("bernoulli B_0..B_6", "",
         lambda: ([Fraction(v) for v in ("1", "-1/2", "1/6", "0", "-1/30", "0", "1/42")],
                  [C.bernoulli(i) for i in range(7)])),
    ]


def _scaled_checks(pn: int, sm: int) -> list[Check]:
    """Invariants run up to path length ``pn`` and permutation size ``sm``."""
    T = C.TriangleId
    tri = C.named_triangle
    wn = sm - 1  # word length reachable by brute force
    checks: list[Check] = []

    def words(n):
        return itertools.product((-1, 0, 1), repeat=n)

    checks.append((
        "nu fast = nu brute force on all words", f"n<={min(wn, 6)}",
        lambda: ([], [p for n in range(min(wn, 6) + 1) for p in words(n) if nu(p) != nu_bruteforce(p)]),
    ))
    checks.append((
        "nu > 0 iff Motzkin", f"n<={min(wn, 6)}",
        lambda: ([], [p for n in range(min(wn, 6) + 1) for p in words(n)
                      if (nu_bruteforce(p) > 0) != is_motzkin(p)]),
    ))
    for n in range(1, wn + 1):
        checks.append((
            f"sum nu over M_{n} = {n + 1}!", f"n={n}, brute force",
            lambda n=n: (factorial(n + 1), sum(nu_bruteforce(p) for p in enumerate_motzkin(n))),
        ))
    checks.append((
        "sum nu over M_n = (n+1)! (fast nu)", f"n<={pn}",
        lambda: ([factorial(n + 1) for n in range(pn + 1)],
                 [sum(nu(p) for p in enumerate_motzkin(n)) for n in range(pn + 1)]),
    ))
    checks.append((
        "|M_n| = motzkin_number", f"n<={pn}",
        lambda: ([motzkin_number(n) for n in range(pn + 1)],
                 [len(enumerate_motzkin(n)) for n in range(pn + 1)]),
    ))
    checks.append((
        "|Dyck_2n| = catalan_number", f"2n<={pn}",
        lambda: ([catalan_number(m) for m in range(pn // 2 + 1)],
                 [len(enumerate_dyck(2 * m)) for m in range(pn // 2 + 1)]),
    ))
    checks.append((
        "d_count vs enumeration", f"n<={pn}",
        lambda: ([[d_count(n, k) for k in range(n + 1)] for n in range(pn + 1)],
                 [[sum(1 for p in enumerate_motzkin(n) if count_zeros(p) == k) for k in range(n + 1)]
                  for n in range(pn + 1)]),
    ))
    checks.append((
        "cor-2-4 rows = suffix counts", f"n<={pn}",
        lambda: ([list(r) for r in tri(T.COR_2_4, pn + 1).rows[1:]],
                 [suffix_counts(n) for n in range(1, pn + 1)]),
    ))
    checks.append((
        "cor-4-6 first column = (n+1)!", f"n<={pn + 4}",
        lambda: ([factorial(n + 1) for n in range(pn + 5)], tri(T.COR_4_6, pn + 5).column(0)),
    ))
    checks.append((
        "thm-3-2 first column = sum D_nk x^k", f"n<={pn}",
        lambda: ([[d_count(n, k) for k in range(n + 1)] for n in range(pn + 1)],
                 [[C.flat_step_polynomial(n).coeff(k) for k in range(n + 1)] for n in range(pn + 1)]),
    ))
    checks.append((
        "thm-5-3 coefficients = sum nu over D_nk", f"n<={pn}",
        lambda: ([[sum(nu(p) for p in enumerate_motzkin(n) if count_zeros(p) == k) for k in range(n + 1)]
                  for n in range(pn + 1)],
                 [[C.tangent_polynomial(n).coeff(k) for k in range(n + 1)] for n in range(pn + 1)]),
    ))
    checks.append((
        "thm-5-3 P_n(1) = (n+1)!, P_n(0) = tangent or 0", f"n<={pn}",
        lambda: ([(factorial(n + 1), C.tangent_number(n // 2 + 1) if n % 2 == 0 else 0) for n in range(pn + 1)],
                 [(poly_eval(C.tangent_polynomial(n), 1), poly_eval(C.tangent_polynomial(n), 0))
                  for n in range(pn + 1)]),
    ))
    checks.append((
        "floor extraction of tangent numbers", f"even n<={pn}",
        lambda: ([C.tangent_number(n // 2 + 1) for n in range(0, pn + 1, 2)],
                 [C.floor_extract_tangent(n) for n in range(0, pn + 1, 2)]),
    ))
    small = range(1, min((sm - 1) // 2, 3) + 1)
    checks.append((
        "Dyck-path preimages are alternating descents", f"2n+1<={2 * small[-1] + 1}",
        lambda: ([True for _ in small], [_dyck_preimages(2 * n + 1) == alternating_descent_perms(2 * n + 1)
                                          for n in small]),
    ))
    checks.append((
        "sum nu over Dyck paths = beta_(2n+1)", f"2n+1<={sm}",
        lambda: ([beta_bruteforce(2 * n + 1) for n in range((sm - 1) // 2 + 1)],
                 [sum(nu_bruteforce(p) for p in enumerate_dyck(2 * n)) for n in range((sm - 1) // 2 + 1)]),
    ))
    checks.append((
        "entringer DP = boustrophedon = brute force", f"n<={sm - 1}",
        lambda: (C.entringer_rows(sm - 1),
                 [[entringer_bruteforce(n, k) for k in range(n + 1)] for n in range(sm)]),
    ))
    checks.append((
        "entringer DP = boustrophedon (deep)", "n<=40",
        lambda: (C.entringer_rows(40), C.entringer_boustrophedon(40)),
    ))
    checks.append((
        "entringer-5-4 rows = E_{n+1,m+1}", f"n<={pn + 4}",
        lambda: ([C.entringer_rows(n + 1)[n + 1][1:] for n in range(pn + 5)],
                 [list(r) for r in tri(T.ENTRINGER_5_4, pn + 5).rows]),
    ))
    checks.append((
        "entringer-5-6 index map", f"n<={pn + 4}",
        lambda: ([[C.entringer(n + 1, n + 1 - m // 2) if m % 2 == 0 else C.entringer(n + 1, m // 2 + 1)
                   for m in range(n + 1)] for n in range(pn + 5)],
                 [list(r) for r in tri(T.ENTRINGER_5_6, pn + 5).rows]),
    ))
    checks.append((
        "tangent: Bernoulli = thm-1-1 = paths = Entringer", "1<=n<=12",
        lambda: ([[C.tangent_number(n)] * 3 for n in range(1, 13)],
                 [[tri(T.THM_1_1, 12)[n - 1][0], C.entringer(2 * n - 1, 2 * n - 1),
                   C.tangent_via_paths(n) if n >= 3 else C.tangent_number(n)] for n in range(1, 13)]),
    ))
    checks.append((
        "bernoulli via paths", "3<=n<=12",
        lambda: ([C.bernoulli(2 * n) for n in range(3, 13)], [C.bernoulli_via_paths(n) for n in range(3, 13)]),
    ))
    checks.append((
        "zeta coefficient * (4^n-1) = xi integral", f"2<=n<={pn + 2}",
        lambda: ([C.zeta_even_coefficient(n) * (4**n - 1) for n in range(2, pn + 3)],
                 [exact_xi_integral(n) for n in range(2, pn + 3)]),
    ))
    checks.append((
        "Motzkin engine with nu/rho weights = path sums", f"n<={pn}",
        lambda: _nu_rho_engine_vs_enumeration(pn),
    ))
    checks.append((
        "Dyck engine with nu weights = beta", f"n<={pn}",
        lambda: ([beta_bruteforce(2 * n + 1) if 2 * n + 1 <= sm else C.zigzag(2 * n + 1) for n in range(pn)],
                 dyck_weight_triangle(lambda n, k: (k + 1) * (k + 2), 2, pn).column(0)),
    ))
    checks.append((
        "M_n = sum binom(n,2k) C_k", "n<=30",
        lambda: ([motzkin_number(n) for n in range(31)],
                 [sum(comb(n, 2 * k) * catalan_number(k) for k in range(n // 2 + 1)) for n in range(31)]),
    ))
    return checks


def _dyck_preimages(m: int) -> set:
    return {s for s in permutations(m) if is_motzkin(phi(s)) and 0 not in phi(s)}


def _nu_rho_engine_vs_enumeration(pn: int):
    w = C.NU_OVER_RHO_WEIGHTS
    tri = motzkin_weight_triangle(w, pn + 1)
    engine = [tri[n][0] * w.seed_value / w.b(n, 0) for n in range(1, pn + 1)]
    brute = [sum((weight_f(p) for p in enumerate_motzkin(n)), Fraction(0)) for n in range(1, pn + 1)]
    return brute, engine


def verify_suite(depth: int = 1, extra_checks: Iterable[Check] = ()) -> VerifyReport:
    """Run every cross-method check at the caps for ``depth`` (1 fast, 2 standard, 3 deep)."""
    if depth not in _DEPTH:
        raise ValueError("depth must be 1, 2 or 3")
    pn, sm = _DEPTH[depth]
    with override_caps(permutations=max(sm, 9)):
        records = [_run(c) for c in [*_golden_checks(), *_scaled_checks(pn, sm), *extra_checks]]
    records.sort(key=lambda r: r.name)
    return VerifyReport(records)

