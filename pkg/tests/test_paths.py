from __future__ import annotations

import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import CATALAN, MOTZKIN
from triangle_forge.config import CapExceeded, override_caps
from triangle_forge.paths import (
    SuffixClass,
    TailKind,
    catalan_number,
    count_zeros,
    d_count,
    enumerate_dyck,
    enumerate_motzkin,
    flatten_cusp,
    format_path,
    insert_flat,
    is_dyck,
    is_motzkin,
    iter_motzkin,
    motzkin_number,
    parse_path,
    suffix_class,
    suffix_counts,
)


def brute_motzkin(n):
    return {w for w in itertools.product((-1, 0, 1), repeat=n) if is_motzkin(w)}


@pytest.mark.parametrize(
    "p, want", [((1, 0, 1, -1, 0, -1), True), ((), True), ((-1, 1), False), ((1,), False), ((0, 1, -1), True)]
)
def test_is_motzkin(p, want):
    assert is_motzkin(p) is want


def test_enumerate_examples():
    assert set(enumerate_motzkin(3)) == {(0, 0, 0), (1, -1, 0), (0, 1, -1), (1, 0, -1)}
    assert enumerate_motzkin(0) == [()]
    assert len(enumerate_motzkin(5)) == 21
    dyck6 = enumerate_dyck(6)
    assert len(dyck6) == 5 and (1, 1, 1, -1, -1, -1) in dyck6
    assert enumerate_dyck(0) == [()]
    assert set(enumerate_dyck(4)) == {(1, -1, 1, -1), (1, 1, -1, -1)}


def test_enumeration_is_lexicographic_and_complete():
    for n in range(9):
        got = enumerate_motzkin(n)
        assert got == sorted(got)
        assert set(got) == brute_motzkin(n)


@pytest.mark.parametrize("n", range(13))
def test_motzkin_counts(n):
    assert len(enumerate_motzkin(n)) == motzkin_number(n)


@pytest.mark.parametrize("n", range(0, 17, 2))
def test_dyck_counts(n):
    dyck = enumerate_dyck(n)
    assert len(dyck) == catalan_number(n // 2)
    if n <= 12:
        assert dyck == [p for p in enumerate_motzkin(n) if count_zeros(p) == 0]
    assert all(is_dyck(p) for p in dyck)


def test_odd_dyck_length_rejected():
    with pytest.raises(ValueError, match="odd"):
        enumerate_dyck(5)


def test_reference_sequences():
    assert [motzkin_number(n) for n in range(len(MOTZKIN))] == MOTZKIN
    assert [catalan_number(n) for n in range(len(CATALAN))] == CATALAN
    assert motzkin_number(6) == len(brute_motzkin(6)) == 51


@pytest.mark.parametrize("p, want", [((1, 0, 1, -1, 0, -1), 2), ((), 0), ((0, 0, 0), 3)])
def test_count_zeros(p, want):
    assert count_zeros(p) == want


@pytest.mark.parametrize("n", range(9))
def test_flat_insertion_and_cusp_flattening_stay_motzkin(n):
    for p in enumerate_motzkin(n):
        for i in range(n + 1):
            q = insert_flat(p, i)
            assert len(q) == n + 1 and is_motzkin(q)
        for i in range(n - 1):
            if p[i : i + 2] == (1, -1):
                q = flatten_cusp(p, i)
                assert len(q) == n - 1 and is_motzkin(q)


def test_flatten_cusp_requires_cusp():
    with pytest.raises(ValueError):
        flatten_cusp((0, 0), 0)


@pytest.mark.parametrize(
    "p, kind, k, index",
    [
        ((1, 1, -1, -1), TailKind.CUSP, 2, 3),
        ((0, 0, 0, 0), TailKind.FLAT, 0, 0),
        ((0, 1, 0, -1), TailKind.FLAT, 1, 2),
        ((1, -1), TailKind.CUSP, 1, 1),
    ],
)
def test_suffix_class(p, kind, k, index):
    cls = suffix_class(p)
    assert cls == SuffixClass(kind, k)
    assert cls.index == index


@pytest.mark.parametrize("n, want", [(1, [1, 1]), (3, [4, 2, 2, 1]), (4, [9, 4, 5, 2, 1])])
def test_suffix_counts_examples(n, want):
    assert list(suffix_counts(n)) == want


@pytest.mark.parametrize("n", range(1, 13))
def test_suffix_counts_partition(n):
    assert sum(suffix_counts(n)) == motzkin_number(n + 1)


@pytest.mark.parametrize("n, k, want", [(6, 0, 5), (3, 1, 3), (4, 3, 0)])
def test_d_count_examples(n, k, want):
    assert d_count(n, k) == want


def test_d_count_closed_form_against_enumeration():
    for n in range(13):
        for k in range(n + 1):
            assert d_count(n, k) == sum(1 for p in enumerate_motzkin(n) if count_zeros(p) == k)
            if (n - k) % 2 == 0:
                assert d_count(n, k) == comb(n, k) * catalan_number((n - k) // 2)


@pytest.mark.parametrize("n", range(31))
def test_motzkin_catalan_binomial_identity(n):
    assert motzkin_number(n) == sum(comb(n, 2 * k) * catalan_number(k) for k in range(n // 2 + 1))


def test_cap_enforced():
    with override_caps(paths=5):
        with pytest.raises(CapExceeded, match="enumeration too large"):
            enumerate_motzkin(6)
        assert len(enumerate_motzkin(5)) == 21
    with pytest.raises(CapExceeded):
        list(iter_motzkin(4, cap=3))


@given(st.lists(st.sampled_from((-1, 0, 1)), max_size=12).map(tuple))
def test_path_text_round_trip(p):
    assert parse_path(format_path(p)) == p


def test_parse_path_forms():
    assert parse_path("(1,0,-1)") == (1, 0, -1)
    assert parse_path("1, 0, -1") == (1, 0, -1)
    assert parse_path("U F D") == (1, 0, -1)
    assert parse_path("()") == ()
    with pytest.raises(ValueError):
        parse_path("(2,0)")
