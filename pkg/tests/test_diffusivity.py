import itertools

import pytest

from macpos.diffusivity import (
    PairFilling,
    PartialFilling,
    box_distance,
    dominoes,
    enumerate_SD,
    f1,
    f2,
    f2_run,
    fiber_bound,
    fiber_census,
    has_halfness,
    is_monotone,
)
from macpos.partitions import boxes, ceil_half, contains, enumerate_partitions


def brute_SD(lam, d):
    """Every assignment of 1..n (each twice) to the boxes, filtered by the definition."""
    cells = boxes(lam)
    n = len(cells) // 2
    out = set()
    for values in set(itertools.permutations([k for k in range(1, n + 1) for _ in (0, 1)])):
        pf = PairFilling(tuple(lam), tuple(sorted(zip(cells, values))))
        if pf.is_valid(d):
            out.add(pf)
    return out


def all_fillings(max_size=8, ds=(0, 1, 2)):
    for m in range(0, max_size + 1, 2):
        for lam in enumerate_partitions(m):
            for d in ds:
                for pf in enumerate_SD(lam, d):
                    yield lam, d, pf


def test_box_distance():
    assert box_distance((1, 1), (1, 1)) == 0
    assert box_distance((1, 1), (2, 3)) == 3
    assert box_distance((1, 2), (3, 1)) == 3


def test_enumerate_SD_examples():
    assert len(enumerate_SD((), 1)) == 1
    assert len(enumerate_SD((2,), 1)) == 1
    assert len(enumerate_SD((2, 2), 1)) == 2
    with pytest.raises(ValueError):
        enumerate_SD((2, 1), 1)


@pytest.mark.parametrize("m", [2, 4, 6])
def test_enumerate_SD_brute_force(m):
    for lam in enumerate_partitions(m):
        for d in (0, 1, 2, 3):
            got = enumerate_SD(lam, d)
            assert len(set(got)) == len(got)
            assert set(got) == brute_SD(lam, d)


def test_dominoes():
    assert dominoes((2,)) == []
    assert dominoes((1, 1)) == [(1, 1)]
    assert dominoes((2, 2, 1, 1)) == [(1, 1), (1, 2), (3, 1)]


def test_f1_examples():
    (pf,) = enumerate_SD((1, 1), 1)
    assert f1(pf).entries == {(1, 1): 1}
    (pf,) = enumerate_SD((2,), 1)
    assert f1(pf).entries == {(1, 1): 1}


def test_f1_cycle_and_path():
    # columns (1,2)/(1,2): the two dominoes form a cycle through values 1, 2
    pf = PairFilling((2, 2), (((1, 1), 1), ((1, 2), 1), ((2, 1), 2), ((2, 2), 2)))
    out = f1(pf)
    assert out.has_halfness() and sorted(out.entries.values()) == [1, 2]
    assert out.entries == {(1, 1): 1, (2, 2): 2}


def test_f1_invariants_exhaustive():
    for lam, d, pf in all_fillings():
        out = f1(pf)
        assert has_halfness(lam, out.occupied), pf
        assert is_monotone(out.entries), pf
        assert sorted(out.entries.values()) == list(range(1, pf.n + 1))
        assert out.occupied <= set(boxes(lam))


def test_f2_examples():
    t = f2(PartialFilling((2,), (((1, 1), 1),)))
    assert t.shape == (1,) and contains(t.shape, ceil_half((2,)))
    t = f2(PartialFilling((1, 1), (((1, 1), 1),)))
    assert t.shape == (1,) == ceil_half((1, 1))
    with pytest.raises(ValueError):
        f2(PartialFilling((1, 1), ()))
    with pytest.raises(ValueError):
        f2(PartialFilling((2,), (((1, 1), 2), ((1, 2), 1))))


def test_f2_step_four_shift():
    """A south entry larger than the north entry to its right swaps past it."""
    pf = PartialFilling((2, 2), (((1, 2), 1), ((2, 1), 2)))
    run = f2_run(pf, record=True)
    assert [s for s, _ in run.steps] == [4, 2, 1]
    assert run.steps[0][1] == {(1, 1): 1, (2, 2): 2}
    assert run.tableau.rows == ((1, 2),)


def test_f2_exhaustive():
    for lam, d, pf in all_fillings():
        steps = []
        run = f2_run(f1(pf), trace=lambda s, e: steps.append(is_monotone(e)))
        assert all(steps), pf
        assert run.moves <= 2 * pf.n
        T = run.tableau
        assert T.is_standard() and sum(T.shape) == pf.n
        assert contains(T.shape, ceil_half(lam))


def test_fiber_census_examples():
    c0 = fiber_census(0, 1)
    assert c0.max_fiber == 1 and len(c0.counts) == 1
    c1 = fiber_census(1, 1)
    assert c1.bound == 36 ** 2 and c1.max_fiber <= 2
    assert fiber_census(2, 1).bound == 1679616
    assert fiber_census(2, 1).to_json().keys() == {"n", "d", "max_fiber", "bound"}


@pytest.mark.parametrize("n,d", [(n, d) for n in range(4) for d in (0, 1, 2)])
def test_fiber_bound_holds(n, d):
    census = fiber_census(n, d)
    assert census.holds
    total = sum(len(enumerate_SD(lam, d)) for lam in enumerate_partitions(2 * n))
    assert sum(census.counts.values()) == total
    assert fiber_bound(n, d) == (12 * (2 * d + 1)) ** (2 * n)
