"""Smoke tests for the pybind11 module."""

import random

import pytest

lispace = pytest.importorskip("lispace")

SIGMA1 = [2, 8, 4, 9, 5, 1, 7, 6, 3]


def test_worked_example_length():
    assert lispace.lis_length(SIGMA1) == 4
    assert lispace.lis_length(SIGMA1, s=3) == 4
    assert lispace.lis_length(SIGMA1, algorithm="classic") == 4
    assert lispace.lis_length(SIGMA1, algorithm="permutation") == 4
    assert lispace.dp_lis_length(SIGMA1) == 4


def test_edge_cases():
    assert lispace.lis_length([]) == 0
    assert lispace.lis_length([5, 5, 5]) == 1
    assert lispace.lis_extract([]) == []


def test_extract_is_valid():
    seq = lispace.lis_extract(SIGMA1, s=3)
    assert len(seq) == 4
    positions = [p for p, _ in seq]
    values = [v for _, v in seq]
    assert positions == sorted(positions)
    assert values == sorted(values)
    assert all(SIGMA1[p] == v for p, v in seq)


def test_piles_match_the_worked_example():
    piles = lispace.piles(SIGMA1)
    assert [[v for _, v in pile] for pile in piles] == [
        [2, 1],
        [8, 4, 3],
        [9, 5],
        [7, 6],
    ]
    rpiles = lispace.rpiles(SIGMA1)
    assert [[v for _, v in pile] for pile in rpiles] == [
        [3, 6, 7, 9],
        [1, 5, 8],
        [4],
        [2],
    ]


def test_report_counters():
    report = lispace.length_report(SIGMA1, s=3)
    assert report["lis"] == 4
    assert report["s"] == 3
    assert report["reads"] > 0
    assert report["peak_words"] > 0
    assert report["backward_passes"] == 0


def test_against_oracle_randomized():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 60)
        values = [rng.randint(-20, 20) for _ in range(n)]
        s = rng.randint(2, max(n, 2))
        expect = lispace.dp_lis_length(values)
        assert lispace.lis_length(values, s=s) == expect
        seq = lispace.lis_extract(values, s=s)
        assert len(seq) == expect


def test_generators():
    perm = lispace.random_permutation(50, 3)
    assert sorted(perm) == list(range(1, 51))
    assert perm == lispace.random_permutation(50, 3)

    hard = lispace.hard_instance(10, 5)
    assert sorted(hard) == list(range(1, 41))
    inner = lispace.random_permutation(20, 5)
    assert lispace.dp_lis_length(hard) == lispace.dp_lis_length(inner) + 1


def test_permutation_mode_rejects_repetitions():
    with pytest.raises(ValueError):
        lispace.lis_length([1, 1], algorithm="permutation")
