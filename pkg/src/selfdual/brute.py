"""Brute-force reference oracles.

These are deliberately naive: the half-domain summation test, subset-scan
hitting-set counting, and a small-n dualizer used to cross-check the faster
algorithms.  The counting scan is kept as a plain Python loop so benchmark
comparisons against it stay meaningful.
"""

from __future__ import annotations

from itertools import combinations

from .core import (
    Hypergraph,
    SelfDualVerdict,
    SizeLimitError,
    evaluate,
    mask_from_vertices,
    occupied_vertices,
    validate_pidnf,
    vertices_from_mask,
)

DEFAULT_BRUTE_LIMIT = 26
DEFAULT_DUALIZE_LIMIT = 16


def algorithm_dual(f: Hypergraph, limit: int = DEFAULT_BRUTE_LIMIT) -> SelfDualVerdict:
    """Half-domain summation test: self-dual iff sum of f(x)+f(x-bar) over
    x < 2^(n-1) equals 2^(n-1)."""
    validate_pidnf(f)
    n = f.n
    if n > limit:
        raise SizeLimitError(f"n={n} exceeds brute limit {limit}")
    full = (1 << n) - 1
    edges = f.edges
    s = 0
    for x in range(1 << (n - 1)):
        xb = full ^ x
        if any(e & x == e for e in edges):
            s += 1
        if any(e & xb == e for e in edges):
            s += 1
    return SelfDualVerdict(self_dual=s == 1 << (n - 1))


def brute_count_hitting_sets(h: Hypergraph, limit: int = DEFAULT_BRUTE_LIMIT) -> int:
    """Count hitting sets by testing every subset of V(h)."""
    occupied = occupied_vertices(h)
    v = occupied.bit_count()
    if v > limit:
        raise SizeLimitError(f"|V(H)|={v} exceeds brute limit {limit}")
    if not h.edges:
        return 1
    if any(e == 0 for e in h.edges):
        return 0
    positions = vertices_from_mask(occupied)
    edges = h.edges
    count = 0
    for k in range(1 << v):
        t = 0
        kk = k
        while kk:
            low = kk & -kk
            t |= 1 << positions[low.bit_length() - 1]
            kk ^= low
        if all(e & t for e in edges):
            count += 1
    return count


def brute_selfdual(f: Hypergraph, limit: int = DEFAULT_BRUTE_LIMIT) -> SelfDualVerdict:
    """Self-duality through the subset-scan count (the benchmark's worst case)."""
    validate_pidnf(f)
    free = f.n - occupied_vertices(f).bit_count()
    total = brute_count_hitting_sets(f, limit=limit) << free
    return SelfDualVerdict(self_dual=total == 1 << (f.n - 1), count=total)


def zero_count_by_evaluation(f: Hypergraph, limit: int = DEFAULT_BRUTE_LIMIT) -> int:
    """2^n minus the number of satisfying points, by full-domain evaluation."""
    if f.n > limit:
        raise SizeLimitError(f"n={f.n} exceeds brute limit {limit}")
    return sum(1 - evaluate(f, x) for x in range(1 << f.n))


def brute_dualize(f: Hypergraph, limit: int = DEFAULT_DUALIZE_LIMIT) -> Hypergraph:
    """All inclusion-minimal hitting sets of f, i.e. the dual term set.

    Enumerates candidate sets by ascending cardinality, so minimality is a
    subset check against sets already emitted.  Requires a Sperner input;
    satisfies evaluate(f, x) = 1 - evaluate(dual, complement(x)) for all x.
    """
    if f.n > limit:
        raise SizeLimitError(f"n={f.n} exceeds dualize limit {limit}")
    vs = vertices_from_mask(occupied_vertices(f))
    edges = f.edges
    minimal: list[int] = []
    for k in range(len(vs) + 1):
        for combo in combinations(vs, k):
            t = mask_from_vertices(combo)
            if all(e & t for e in edges) and not any(m & t == m for m in minimal):
                minimal.append(t)
    return Hypergraph(f.n, tuple(minimal))
