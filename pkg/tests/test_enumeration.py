from itertools import permutations

import pytest

from gtspace import core
from gtspace.enumeration import (
    EnumBounds,
    canonicalize,
    canonicalize_pair,
    count_strong_gts,
    enumerate_strong_gts,
    enumerate_surjections,
    random_instance,
    strong_gts,
    surjection_count,
)
from gtspace.errors import BoundExceeded
from gtspace.mapping import make_mapping

import oracles

# Frozen from oracles.count_strong_gts (2**6 filter for n=3, 2**14 for n=4).
STRONG_GT_COUNTS = {1: 1, 2: 4, 3: 45, 4: 2271}
# Frozen from the brute-force isomorphism partition below.
ISO_CLASS_COUNTS = {1: 1, 2: 3, 3: 14}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_match_bruteforce_filter(n):
    assert oracles.count_strong_gts(n) == STRONG_GT_COUNTS[n]
    assert count_strong_gts(n) == STRONG_GT_COUNTS[n]


@pytest.mark.slow
def test_count_n4_matches_bruteforce_filter():
    assert oracles.count_strong_gts(4) == STRONG_GT_COUNTS[4]
    assert count_strong_gts(4) == STRONG_GT_COUNTS[4]


@pytest.mark.slow
def test_count_n5_regression():
    # GTs on n points (strong or not) are counted by the Moore-family numbers
    # 1, 2, 7, 61, 2480, 1385552; a non-strong GT is a strong GT on the union
    # of its members, so strong(n) = moore(n) - sum_{k<n} C(n,k) strong(k).
    from math import comb

    moore = [1, 2, 7, 61, 2480, 1385552]
    strong = []
    for n, total in enumerate(moore):
        strong.append(total - sum(comb(n, k) * strong[k] for k in range(n)))
    assert strong[1:5] == [STRONG_GT_COUNTS[n] for n in range(1, 5)]
    assert count_strong_gts(5) == strong[5] == 1373701


def test_n2_spaces_listed():
    fams = sorted(s.opens for s in enumerate_strong_gts(2))
    assert fams == [(0, 1, 2, 3), (0, 1, 3), (0, 2, 3), (0, 3)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_stream_unique_and_valid(n):
    spaces = list(enumerate_strong_gts(n))
    assert len({s.opens for s in spaces}) == len(spaces)
    for s in spaces:
        assert core.validate_gt(n, s.opens) == s


def test_bounds_caps():
    with pytest.raises(BoundExceeded):
        list(enumerate_strong_gts(6))
    with pytest.raises(BoundExceeded):
        EnumBounds(6, 2)
    with pytest.raises(BoundExceeded):
        EnumBounds(5, 3).check_sweep()
    with pytest.raises(BoundExceeded):
        EnumBounds(2, 3)


@pytest.mark.parametrize("n,m,expected", [(2, 2, 2), (3, 1, 1), (3, 2, 6)])
def test_surjection_examples(n, m, expected):
    tables = list(enumerate_surjections(n, m))
    assert len(tables) == expected
    assert tables == sorted(tables)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 6) for m in range(1, n + 1)])
def test_surjection_count_inclusion_exclusion(n, m):
    assert surjection_count(n, m) == oracles.count_surjections(n, m)
    assert len(list(enumerate_surjections(n, m))) == oracles.count_surjections(n, m)


def _isomorphic(a, b):
    if a.n != b.n:
        return False
    target = set(b.opens)
    for perm in permutations(range(a.n)):
        moved = {sum(1 << perm[i] for i in range(a.n) if u >> i & 1) for u in a.opens}
        if moved == target:
            return True
    return False


@pytest.mark.parametrize("n", [1, 2, 3])
def test_canonical_form_matches_isomorphism_partition(n):
    spaces = list(strong_gts(n))
    classes = []
    for s in spaces:
        for cls in classes:
            if _isomorphic(s, cls[0]):
                cls.append(s)
                break
        else:
            classes.append([s])
    assert len(classes) == ISO_CLASS_COUNTS[n]
    for cls in classes:
        assert len({canonicalize(s) for s in cls}) == 1
    assert len({canonicalize(cls[0]) for cls in classes}) == len(classes)


def test_canonical_examples(abc_space):
    relabeled = core.validate_gt(3, [0, 0b101, 0b110, 0b111])
    assert canonicalize(relabeled) == canonicalize(abc_space)
    assert canonicalize(core.validate_gt(2, [0, 1, 3])) != canonicalize(core.validate_gt(2, [0, 3]))
    indiscrete = core.validate_gt(3, [0, 7])
    assert canonicalize(indiscrete).opens == (0, 7)


def test_dedupe_iso_strictly_increasing():
    reps = list(enumerate_strong_gts(3, dedupe_iso=True))
    forms = [canonicalize(s) for s in reps]
    assert all(a < b for a, b in zip(forms, forms[1:]))
    assert len(reps) == ISO_CLASS_COUNTS[3]


def test_canonicalize_pair_invariant(four_point_quotient):
    f = four_point_quotient
    form = canonicalize_pair(f)
    # relabel domain by (1 2 3 4) -> (4 3 1 2) and codomain by a<->c
    p, q = [3, 2, 0, 1], [2, 1, 0]
    dom = core.validate_gt(4, [sum(1 << p[i] for i in range(4) if u >> i & 1) for u in f.dom.opens])
    cod = core.validate_gt(3, [sum(1 << q[i] for i in range(3) if v >> i & 1) for v in f.cod.opens])
    table = [0] * 4
    for i, y in enumerate(f.table):
        table[p[i]] = q[y]
    g = make_mapping(dom, cod, table)
    assert canonicalize_pair(g) == form
    assert form.mapping().table == form.table


def test_random_instances_deterministic():
    b = EnumBounds(5, 3, mode="random", seed=7, count=10)
    for i in range(10):
        s1, s2 = random_instance(b, "space", i), random_instance(b, "space", i)
        assert s1 == s2
        assert core.validate_gt(5, s1.opens) == s1
        f = random_instance(b, "mapping", i)
        assert f == random_instance(b, "mapping", i)
        assert make_mapping(f.dom, f.cod, f.table) == f
    assert len({random_instance(b, "space", i).opens for i in range(10)}) > 1
