import itertools
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from macpos.partitions import (
    Strip,
    Tableau,
    addable_corners,
    all_far_apart,
    boxes,
    ceil_half,
    conjugate,
    dominates,
    enumerate_partitions,
    enumerate_strip_extensions,
    enumerate_tableaux,
    format_partition,
    has_close_pair,
    make_partition,
    parse_partition,
    partitions_upto,
    strip_relation,
)


# --- oracles -------------------------------------------------------------

def partition_count(n):
    """Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def brute_partitions(n):
    """Sorted multisets from all compositions."""
    out = set()
    for cuts in itertools.product([0, 1], repeat=max(n - 1, 0)):
        parts, cur = [], 1
        for c in cuts:
            if c:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        if n:
            parts.append(cur)
        out.add(tuple(sorted(parts, reverse=True)))
    return out


def hook_length_count(lam):
    lc = conjugate(lam)
    hooks = prod(lam[i - 1] - j + lc[j - 1] - i + 1 for i, j in boxes(lam))
    return factorial(sum(lam)) // hooks


small_partitions = st.integers(0, 9).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


# --- basic operations ------------------------------------------------------

def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((5, 3, 2)) == (3, 3, 2, 1, 1)
    assert conjugate((2, 2)) == (2, 2)


def test_conjugate_involution_exhaustive():
    for lam in partitions_upto(12):
        assert conjugate(conjugate(lam)) == lam


def test_make_and_parse():
    assert make_partition([3, 1, 0, 0]) == (3, 1)
    assert parse_partition("5,3,2") == (5, 3, 2)
    assert parse_partition("-") == ()
    assert format_partition(()) == "-"
    with pytest.raises(ValueError):
        make_partition([1, 2])
    with pytest.raises(ValueError):
        parse_partition("2,x")


def test_strip_relation_examples():
    assert strip_relation((1,), (2, 1)) == Strip.BOTH
    assert strip_relation((1,), (3, 1)) == Strip.HORIZONTAL
    assert strip_relation((2,), (1, 1)) == Strip.NOT_CONTAINED
    assert strip_relation((1,), (1, 1, 1)) == Strip.VERTICAL
    assert strip_relation((1,), (2, 2)) == Strip.CONTAINED


@given(small_partitions, small_partitions)
def test_strip_relation_conjugation(mu, lam):
    a, b = strip_relation(mu, lam), strip_relation(conjugate(mu), conjugate(lam))
    swap = {Strip.HORIZONTAL: Strip.VERTICAL, Strip.VERTICAL: Strip.HORIZONTAL}
    assert b == swap.get(a, a)


def test_dominates():
    assert dominates((2, 1), (1, 1, 1))
    assert not dominates((2, 2), (3, 1))
    assert dominates((3, 2), (3, 2))
    with pytest.raises(ValueError):
        dominates((2,), (1,))


# --- enumeration -------------------------------------------------------------

def test_enumerate_partitions_examples():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(enumerate_partitions(10)) == 42


@pytest.mark.parametrize("n", range(0, 16))
def test_partition_counts_against_oracles(n):
    got = enumerate_partitions(n)
    assert len(got) == partition_count(n)
    assert len(set(got)) == len(got)
    if n <= 12:
        assert set(got) == brute_partitions(n)
    assert got == sorted(got, reverse=True)


def test_enumeration_size_guard():
    with pytest.raises(ValueError):
        enumerate_partitions(41)
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_strip_extension_examples():
    assert set(enumerate_strip_extensions((1,), 1, "horizontal")) == {(2,), (1, 1)}
    assert set(enumerate_strip_extensions((1,), 2, "horizontal")) == {(3,), (2, 1)}
    assert set(enumerate_strip_extensions((1,), 2, "vertical")) == {(2, 1), (1, 1, 1)}


@pytest.mark.parametrize("kind", ["horizontal", "vertical"])
def test_strip_extensions_brute_force(kind):
    for mu in partitions_upto(6):
        for r in range(1, 4):
            got = enumerate_strip_extensions(mu, r, kind)
            assert len(got) == len(set(got))
            wanted = {lam for lam in enumerate_partitions(sum(mu) + r)
                      if strip_relation(mu, lam) in (Strip(kind), Strip.BOTH)}
            assert set(got) == wanted


def test_single_box_extensions_equal_corners():
    for mu in partitions_upto(9):
        n = len(addable_corners(mu))
        assert len(enumerate_strip_extensions(mu, 1, "horizontal")) == n
        assert len(enumerate_strip_extensions(mu, 1, "vertical")) == n


# --- tableaux ----------------------------------------------------------------

def test_tableaux_examples():
    assert len(enumerate_tableaux((2, 1))) == 2
    for n in range(1, 7):
        assert len(enumerate_tableaux((n,))) == 1
    (t,) = enumerate_tableaux((2,), mode="content", content=(1, 1))
    assert t.rows == ((1, 2),)


def test_standard_count_matches_hook_lengths():
    for lam in partitions_upto(8):
        ts = enumerate_tableaux(lam)
        assert len(ts) == hook_length_count(lam)
        assert all(t.is_standard() for t in ts)
        assert len(set(ts)) == len(ts)


def test_semistandard_brute_force():
    """Semistandard fillings with entries <= m against a direct search."""
    for lam in partitions_upto(4):
        cells = boxes(lam)
        for m in range(1, 4):
            brute = 0
            for values in itertools.product(range(1, m + 1), repeat=len(cells)):
                t = Tableau.from_entries(lam, dict(zip(cells, values)))
                brute += t.is_semistandard()
            assert len(enumerate_tableaux(lam, mode="semistandard", max_entry=m)) == brute


def test_skew_tableaux():
    ts = enumerate_tableaux((2, 1), (1,))
    assert len(ts) == 2
    with pytest.raises(ValueError):
        enumerate_tableaux((1,), (2,))


def test_ceil_half_and_distances():
    assert ceil_half((1, 1)) == (1,)
    assert ceil_half((2,)) == (2,)
    assert ceil_half((3, 3, 1)) == (3, 1)
    assert has_close_pair((1,), (3,), 1)
    assert not has_close_pair((1,), (2, 1), 1)
    assert all_far_apart((1,), (2, 1), 1)
