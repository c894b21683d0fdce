"""Exact hitting-set counting and the count-based self-duality test.

The counter partitions the hitting sets of a connected hypergraph by their
intersection with a pivot edge: for every non-empty subset s of the pivot,
the sets hitting everything while meeting the pivot exactly in s are counted
by shrinking the hypergraph (drop the pivot vertices outside s, drop every
edge already hit by s) and recursing, times a power of two for the vertices
that became free.  Disconnected hypergraphs multiply their per-component
counts.

The recursion runs on raw edge tuples; the public entry points take and
return the immutable Hypergraph type.
"""

from __future__ import annotations

from typing import Callable, Optional

from .core import (
    Hypergraph,
    PreconditionError,
    SelfDualVerdict,
    format_mask,
    iter_submasks,
    occupied_vertices,
    validate_pidnf,
)


def _or_all(edges: tuple[int, ...]) -> int:
    m = 0
    for e in edges:
        m |= e
    return m


def _count_subset(edges, e: int, s: int) -> int:
    """|{t : t hits every edge, t ∩ e = s}| for deduped edges of one component."""
    drop = e & ~s
    seen = set()
    survivors = []
    h1_vertices = 0
    surv_vertices = 0
    for d in edges:
        d &= ~drop
        if d in seen:
            continue
        seen.add(d)
        h1_vertices |= d
        if not d & s:
            if d == 0:
                return 0
            survivors.append(d)
            surv_vertices |= d
    free = h1_vertices & ~(surv_vertices | s)
    return (1 << free.bit_count()) * _count_edges(survivors)


def _split_components(edges):
    """Greedy mask-merge component split; keeps first-appearance order."""
    masks: list[int] = []
    groups: list[list[int]] = []
    for e in edges:
        hit = [i for i, m in enumerate(masks) if m & e]
        if not hit:
            masks.append(e)
            groups.append([e])
            continue
        first = hit[0]
        for i in reversed(hit[1:]):
            masks[first] |= masks[i]
            groups[first].extend(groups[i])
            del masks[i]
            del groups[i]
        masks[first] |= e
        groups[first].append(e)
    return groups


def _count_edges(edges) -> int:
    if not edges:
        return 1
    if any(e == 0 for e in edges):
        return 0
    total = 1
    for comp in _split_components(edges):
        # smallest pivot minimizes the 2^|e|-1 subset fan-out
        pivot = min(comp, key=lambda m: (m.bit_count(), m))
        total *= sum(_count_subset(comp, pivot, s) for s in iter_submasks(pivot))
        if total == 0:
            break
    return total


def count_hit_subset(
    h: Hypergraph,
    e: int,
    s: int,
    recurse: Optional[Callable[[Hypergraph], int]] = None,
) -> int:
    """Number of hitting sets t of h with t ∩ e == s.

    e must be an edge of h and s a non-empty subset of e; violations raise
    PreconditionError (deliberately distinct from a legitimate 0 count).
    ``recurse``, when given, replaces the default counter on the reduced
    hypergraph.
    """
    if not h.edges:
        raise PreconditionError("count_hit_subset needs a non-empty hypergraph")
    if e not in h.edges:
        raise PreconditionError(f"pivot {format_mask(e)} is not an edge of the hypergraph")
    if s == 0:
        raise PreconditionError("subset s must be non-empty")
    if s & ~e:
        raise PreconditionError(f"s={format_mask(s)} is not a subset of e={format_mask(e)}")

    drop = e & ~s
    h1 = tuple(dict.fromkeys(d & ~drop for d in h.edges))
    survivors = tuple(d for d in h1 if not d & s)
    if any(d == 0 for d in survivors):
        return 0
    free = _or_all(h1) & ~(_or_all(survivors) | s)
    if recurse is None:
        sub = _count_edges(survivors)
    else:
        sub = recurse(Hypergraph(h.n, survivors))
    return (1 << free.bit_count()) * sub


def count_hitting_sets(h: Hypergraph) -> int:
    """Exact number of hitting sets t ⊆ V(h) (the empty hypergraph has one)."""
    return _count_edges(h.edges)


def adjusted_zero_count(f: Hypergraph) -> int:
    """Number of points x of {0,1}^n with f(x) = 0.

    Equals the hitting-set count times 2^k for the k variables absent from
    every term: each zero point is a hitting set over V(f) extended freely.
    """
    free = f.n - occupied_vertices(f).bit_count()
    return count_hitting_sets(f) << free


def selfdual_by_count(f: Hypergraph) -> SelfDualVerdict:
    """Decide self-duality by counting zero points exactly.

    For an intersecting Sperner input the zero-point count is at least
    2^(n-1), with equality iff f is self-dual.  No witness is produced.
    """
    validate_pidnf(f)
    total = adjusted_zero_count(f)
    return SelfDualVerdict(self_dual=total == 1 << (f.n - 1), count=total)
