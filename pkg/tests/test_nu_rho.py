from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triangle_forge.nu_rho import nu, nu_suffix_cusp, nu_suffix_flat, rho, weight_f
from triangle_forge.paths import enumerate_motzkin, is_motzkin
from triangle_forge.perm_oracle import nu_bruteforce


@pytest.mark.parametrize("p, want", [((1, -1), 2), ((0, 0), 4), ((), 1), ((1,), 0), ((0, 1), 0)])
def test_nu_examples(p, want):
    assert nu(p) == want


def test_nu_matches_bruteforce_on_every_short_word():
    assert nu((0, 1, -1, 0)) == nu_bruteforce((0, 1, -1, 0))
    for n in range(7):
        for w in itertools.product((-1, 0, 1), repeat=n):
            assert nu(w) == nu_bruteforce(w), w


def test_nu_rejects_foreign_steps():
    with pytest.raises(ValueError):
        nu((2, -2))


@pytest.mark.parametrize("n", range(11))
def test_nu_sums_to_factorial(n):
    assert sum(nu(p) for p in enumerate_motzkin(n)) == factorial(n + 1)


def test_nu_is_safe_across_threads():
    words = [p for n in range(9) for p in enumerate_motzkin(n)]
    with ThreadPoolExecutor(8) as pool:
        got = list(pool.map(nu, words))
    assert got == [nu(p) for p in words]


@pytest.mark.parametrize(
    "base, k, want, word",
    [(2, 0, 4, (1, -1, 0)), (1, 0, 2, (0,)), (2, 1, 8, (1, 0, -1))],
)
def test_nu_suffix_flat_examples(base, k, want, word):
    assert nu_suffix_flat(base, k) == want == nu_bruteforce(word)


@pytest.mark.parametrize(
    "flat, k, want, word",
    [(2, 1, 2, (1, -1)), (4, 1, 4, (0, 1, -1)), (8, 2, 12, (1, 1, -1, -1))],
)
def test_nu_suffix_cusp_examples(flat, k, want, word):
    assert nu_suffix_cusp(flat, k) == want == nu_bruteforce(word)


def test_nu_suffix_cusp_divisibility():
    with pytest.raises(ArithmeticError):
        nu_suffix_cusp(3, 2)
    with pytest.raises(ValueError):
        nu_suffix_cusp(2, 0)


def _split_tail(p):
    k = 0
    while k < len(p) and p[-1 - k] == -1:
        k += 1
    return p[: len(p) - k], k


@pytest.mark.parametrize("n", range(10))
def test_suffix_rules_on_every_path(n):
    for p in enumerate_motzkin(n):
        lam, k = _split_tail(p)
        assert nu(lam + (0,) + (-1,) * k) == 2 * (k + 1) * nu(p)
        assert nu_suffix_flat(nu(p), k) == nu(lam + (0,) + (-1,) * k)
        if k >= 1:
            cusp = lam + (1,) + (-1,) * k
            assert nu(cusp) == k * (k + 1) * nu(lam + (-1,) * (k - 1))
            assert nu(cusp) == nu_suffix_cusp(nu(lam + (0,) + (-1,) * (k - 1)), k)


@pytest.mark.parametrize("p, want", [((0,), 5), ((0, 0), 35), ((1, -1), 42), ((), 1)])
def test_rho_examples(p, want):
    assert rho(p) == want


def _rising(lo, hi):
    return prod(range(lo, hi + 1))


@pytest.mark.parametrize("n", range(11))
def test_rho_suffix_products(n):
    for p in enumerate_motzkin(n):
        lam, k = _split_tail(p)
        assert rho(p) == rho(lam) * _rising(2 * n + 4 - k, 2 * n + 3)
        assert rho(lam + (0,) + (-1,) * k) == rho(lam) * _rising(2 * n + 5 - k, 2 * n + 5)


@pytest.mark.parametrize("n", range(1, 11))
def test_rho_cusp_rule(n):
    # rho(lam, 1, -1_k) for (lam, 0, -1_{k-1}) of n steps
    for p in enumerate_motzkin(n):
        lam, k1 = _split_tail(p)
        if not lam or lam[-1] != 0:
            continue
        lam, k = lam[:-1], k1 + 1
        assert rho(lam + (1,) + (-1,) * k) == rho(lam) * _rising(2 * n + 5 - k, 2 * n + 5)


def test_rho_cusp_rule_fails_with_unshifted_length():
    # measuring n on (lam, 0, -1_k) instead breaks the rule already for lam = ()
    lam, k, n = (), 1, 2
    assert rho(lam + (1,) + (-1,) * k) != rho(lam) * _rising(2 * n + 5 - k, 2 * n + 5)


@pytest.mark.parametrize("n", range(1, 11))
def test_rho_last_factor(n):
    for p in enumerate_motzkin(n):
        assert rho(p) % (2 * n + 3) == 0
        assert rho(p) // rho(p[:-1]) == 2 * n + 3


@pytest.mark.parametrize("p, want", [((0,), Fraction(2, 5)), ((0, 0), Fraction(4, 35)), ((1, -1), Fraction(1, 21))])
def test_weight_f_examples(p, want):
    assert weight_f(p) == want


def test_weight_sums():
    assert sum(weight_f(p) for p in enumerate_motzkin(1)) == Fraction(2, 5)
    assert sum(weight_f(p) for p in enumerate_motzkin(2)) == Fraction(17, 105)


def test_weight_f_needs_motzkin():
    with pytest.raises(ValueError):
        weight_f((1, 1))


@given(st.lists(st.sampled_from((-1, 0, 1)), max_size=10).map(tuple))
def test_nu_support(p):
    assert (nu(p) > 0) == is_motzkin(p)
