import random
from itertools import combinations
from math import comb

import pytest

from selfdual import (
    GenConfig,
    Hypergraph,
    PreconditionError,
    complement,
    enumerate_fixed_weight,
    evaluate,
    generate,
    mask_from_vertices,
    search_witness,
    selfdual_by_count,
)


def test_fixed_weight_small_cases():
    assert list(enumerate_fixed_weight(3, 1)) == [1, 2, 4]
    assert list(enumerate_fixed_weight(3, 0)) == [0]
    assert list(enumerate_fixed_weight(4, 2)) == [0b0011, 0b0101, 0b0110,
                                                  0b1001, 0b1010, 0b1100]


def test_fixed_weight_complete_and_sorted():
    for n in range(1, 11):
        for i in range(n + 1):
            xs = list(enumerate_fixed_weight(n, i))
            assert len(xs) == comb(n, i)
            assert xs == sorted(xs)
            assert all(x.bit_count() == i for x in xs)
    assert set(range(1 << 8)) == {
        x for i in range(9) for x in enumerate_fixed_weight(8, i)
    }


def test_fixed_weight_range_errors():
    with pytest.raises(ValueError):
        list(enumerate_fixed_weight(3, 4))
    with pytest.raises(ValueError):
        list(enumerate_fixed_weight(3, -1))


def test_search_examples(fig1):
    single = Hypergraph.from_edge_sets(3, [[0, 1, 2]])
    v = search_witness(single)
    assert not v.self_dual and v.witness == 0b001

    tri = Hypergraph.from_edge_sets(3, [[0, 1], [1, 2], [0, 2]])
    assert search_witness(tri).self_dual

    assert search_witness(fig1).self_dual


def test_search_rejects_bad_inputs():
    with pytest.raises(PreconditionError):
        search_witness(Hypergraph(2, (1, 2)))
    with pytest.raises(PreconditionError):
        search_witness(Hypergraph(3, ()))


def test_search_agrees_with_count_and_witness_is_valid():
    rng = random.Random(99)
    for trial in range(120):
        n = rng.randint(3, 10)
        h = generate(GenConfig(n=n, trials=rng.randint(1, 120), seed=trial))
        if not h.edges:
            continue
        by_count = selfdual_by_count(h)
        by_search = search_witness(h)
        assert by_count.self_dual == by_search.self_dual
        if not by_search.self_dual:
            x = by_search.witness
            assert evaluate(h, x) == 0
            assert evaluate(h, complement(x, n)) == 0


def test_search_is_deterministic_and_minimal():
    rng = random.Random(4)
    for trial in range(40):
        n = rng.randint(3, 8)
        h = generate(GenConfig(n=n, trials=rng.randint(1, 60), seed=1000 + trial))
        if not h.edges:
            continue
        first = search_witness(h)
        assert search_witness(h) == first
        if first.self_dual:
            continue
        # brute scan: the returned witness must be the numerically smallest
        # one of minimum weight
        witnesses = []
        for i in range(1, n // 2 + 1):
            for vs in combinations(range(n), i):
                x = mask_from_vertices(vs)
                if not evaluate(h, x) and not evaluate(h, complement(x, n)):
                    witnesses.append(x)
            if witnesses:
                break
        assert first.witness == min(witnesses)
